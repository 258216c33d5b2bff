#include <relaxasp/elimination.hpp>

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace relaxasp;

namespace {

constexpr Vertex p = 0, q = 1, r = 2, v = 3;

Digraph random_digraph(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> size(0, 10);
    std::uniform_real_distribution<double>     density(0.1, 0.9), coin(0.0, 1.0);
    auto                                       n = size(rng);
    auto                                       d = density(rng);
    Digraph                                    g(n);
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = 0; y < n; ++y) {
            if (x != y && coin(rng) < d) {
                g.add_arc(x, y);
            }
        }
    }
    return g;
}

// Reachability closure, used as an independent witness of acyclicity.
std::vector<std::vector<bool>> closure(const Digraph& g) {
    auto                           n = g.vertex_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (auto [x, y] : g.arcs()) {
        reach[x][y] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
            }
        }
    }
    return reach;
}

} // namespace

TEST_CASE("fill-in of a single vertex") {
    CHECK(fill_in_of(Digraph(3, {{p, q}, {q, r}}), q) == std::vector<Arc>{{p, r}});
    CHECK(fill_in_of(Digraph(2, {{p, q}, {q, p}}), p).empty());
    CHECK(fill_in_of(Digraph(4, {{p, v}, {q, v}, {v, r}}), v) == std::vector<Arc>{{p, r}, {q, r}});
    CHECK_THROWS_AS(fill_in_of(Digraph(2), 5), std::out_of_range);
}

TEST_CASE("fill-in keeps arcs that already exist") {
    auto fill = fill_in_of(Digraph(3, {{p, q}, {q, r}, {p, r}}), q);
    CHECK(fill == std::vector<Arc>{{p, r}});
}

TEST_CASE("eliminating a two-cycle") {
    Digraph g(2, {{p, q}, {q, p}});
    for (auto order : {std::vector<Vertex>{p, q}, std::vector<Vertex>{q, p}}) {
        auto result = eliminate(g, {order, OrderingStrategy::input_order});
        CHECK(result.fill_in.empty());
        CHECK(result.elimination_graph == g);
        CHECK(result.two_cycle_pairs == std::vector<VertexPair>{{p, q}});
    }
}

TEST_CASE("eliminating the middle of a path first") {
    auto result = eliminate(Digraph(3, {{p, q}, {q, r}}), {{q, p, r}, OrderingStrategy::input_order});
    CHECK(result.fill_in == std::vector<Arc>{{p, r}});
    CHECK(result.two_cycle_pairs.empty());
    REQUIRE(result.steps.size() == 3);
    CHECK(result.steps[0].vertex == q);
    CHECK(result.steps[0].fill_in == std::vector<Arc>{{p, r}});
    CHECK(result.elimination_graph.arcs() == std::vector<Arc>{{p, q}, {p, r}, {q, r}});
    CHECK(result.width == 2);
}

TEST_CASE("empty graph") {
    auto result = eliminate(Digraph(0), {{}, OrderingStrategy::input_order});
    CHECK(result.steps.empty());
    CHECK(result.fill_in.empty());
    CHECK(result.two_cycle_pairs.empty());
    CHECK(result.width == 0);
}

TEST_CASE("orderings must be permutations") {
    Digraph g(3);
    CHECK_THROWS_AS(eliminate(g, {{0, 1}, OrderingStrategy::input_order}), std::invalid_argument);
    CHECK_THROWS_AS(eliminate(g, {{0, 1, 1}, OrderingStrategy::input_order}), std::invalid_argument);
    CHECK_THROWS_AS(eliminate(g, {{0, 1, 3}, OrderingStrategy::input_order}), std::invalid_argument);
}

TEST_CASE("minimum degree ordering") {
    CHECK(min_degree_ordering(Digraph(3, {{p, q}, {q, r}})).order == std::vector<Vertex>{p, q, r});
    CHECK(min_degree_ordering(Digraph(4)).order == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(min_degree_ordering(Digraph(2, {{p, q}, {q, p}})).order == std::vector<Vertex>{p, q});
    CHECK(min_degree_ordering(Digraph(2)).strategy == OrderingStrategy::min_degree);
    CHECK(input_ordering(Digraph(3)).order == std::vector<Vertex>{0, 1, 2});
    CHECK(to_string(OrderingStrategy::min_degree) == "min-degree");
    CHECK(to_string(OrderingStrategy::input_order) == "input-order");
}

TEST_CASE("minimum degree on a star") {
    Digraph g(5, {{1, 0}, {2, 0}, {0, 3}});
    CHECK(min_degree_ordering(g).order == std::vector<Vertex>{4, 1, 2, 0, 3});
}

TEST_CASE("minimum degree agrees with a matrix reference") {
    // Reference greedy over an adjacency matrix with fill-in applied per step.
    auto reference = [](const Digraph& g) {
        auto                           n = g.vertex_count();
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (auto [x, y] : g.arcs()) {
            adj[x][y] = true;
        }
        std::vector<bool>   gone(n, false);
        std::vector<Vertex> order;
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t best = n, best_degree = 0;
            for (std::size_t u = 0; u < n; ++u) {
                if (gone[u]) continue;
                std::size_t d = 0;
                for (std::size_t w = 0; w < n; ++w) {
                    d += (!gone[w] && adj[u][w]) + (!gone[w] && adj[w][u]);
                }
                if (best == n || d < best_degree) {
                    best = u, best_degree = d;
                }
            }
            for (std::size_t x = 0; x < n; ++x) {
                for (std::size_t y = 0; y < n; ++y) {
                    if (!gone[x] && !gone[y] && x != y && x != best && y != best && adj[x][best] && adj[best][y]) {
                        adj[x][y] = true;
                    }
                }
            }
            gone[best] = true;
            order.push_back(static_cast<Vertex>(best));
        }
        return order;
    };
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        auto g = random_digraph(rng);
        INFO("graph " << i);
        CHECK(min_degree_ordering(g).order == reference(g));
    }
}

TEST_CASE("random digraphs: cycles show up as two-cycles") {
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 400; ++i) {
        auto g = random_digraph(rng);
        std::vector<Vertex> shuffled(g.vertex_count());
        std::iota(shuffled.begin(), shuffled.end(), Vertex{0});
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (const auto& ordering : {min_degree_ordering(g), input_ordering(g),
                                     EliminationOrdering{shuffled, OrderingStrategy::input_order}}) {
            INFO("graph " << i << " ordering " << to_string(ordering.strategy));
            auto result = eliminate(g, ordering);
            CHECK(has_cycle(g) == !result.two_cycle_pairs.empty());

            // Elimination graph = input arcs plus the union of step fill-ins.
            std::set<Arc> expected;
            for (auto arc : g.arcs()) {
                expected.insert(arc);
            }
            std::set<Arc> fill;
            for (const auto& step : result.steps) {
                fill.insert(step.fill_in.begin(), step.fill_in.end());
            }
            CHECK(std::vector<Arc>(fill.begin(), fill.end()) == result.fill_in);
            expected.insert(fill.begin(), fill.end());
            CHECK(result.elimination_graph.arcs() == std::vector<Arc>(expected.begin(), expected.end()));

            // Fill-in only shortcuts existing paths, so a DAG stays a DAG.
            if (!has_cycle(g)) {
                auto reach = closure(g);
                for (auto [x, y] : result.fill_in) {
                    CHECK(reach[x][y]);
                }
                CHECK_FALSE(has_cycle(result.elimination_graph));
            }
            for (auto [x, y] : result.elimination_graph.arcs()) {
                CHECK(x != y);
            }
        }
    }
}
