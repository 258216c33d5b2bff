#include <relaxasp/elimination.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace relaxasp {

std::string_view to_string(OrderingStrategy strategy) {
    return strategy == OrderingStrategy::min_degree ? "min-degree" : "input-order";
}

std::vector<Arc> fill_in_of(const Digraph& graph, Vertex v) {
    if (v >= graph.vertex_count()) {
        throw std::out_of_range("unknown vertex " + std::to_string(v));
    }
    std::vector<Arc> result;
    for (auto x : graph.predecessors(v)) {
        for (auto y : graph.successors(v)) {
            if (x != y) {
                result.push_back({x, y});
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

namespace {

//! Graph on the remaining vertices; eliminated vertices keep empty adjacency.
class ResidualGraph {
public:
    explicit ResidualGraph(const Digraph& graph)
        : graph_(graph)
        , alive_(graph.vertex_count(), true) {}

    [[nodiscard]] bool        alive(Vertex v) const { return alive_[v]; }
    [[nodiscard]] std::size_t degree(Vertex v) const { return graph_.degree(v); }

    //! Removes v, adds its fill-in and returns that fill-in.
    std::vector<Arc> eliminate(Vertex v) {
        auto fill = fill_in_of(graph_, v);
        // Rebuild without v; the residual graph is small at the scales we run.
        Digraph next(graph_.vertex_count());
        for (const auto& arc : graph_.arcs()) {
            if (arc.from != v && arc.to != v) {
                next.add_arc(arc.from, arc.to);
            }
        }
        for (const auto& arc : fill) {
            next.add_arc(arc.from, arc.to);
        }
        graph_     = std::move(next);
        alive_[v]  = false;
        return fill;
    }

private:
    Digraph           graph_;
    std::vector<bool> alive_;
};

} // namespace

EliminationResult eliminate(const Digraph& graph, const EliminationOrdering& ordering) {
    const auto n = graph.vertex_count();
    if (ordering.order.size() != n) {
        throw std::invalid_argument("ordering has " + std::to_string(ordering.order.size()) + " vertices, graph has " +
                                    std::to_string(n));
    }
    std::vector<bool> seen(n, false);
    for (auto v : ordering.order) {
        if (v >= n || seen[v]) {
            throw std::invalid_argument("ordering is not a permutation of the vertices");
        }
        seen[v] = true;
    }

    EliminationResult result;
    result.elimination_graph = graph;
    ResidualGraph residual(graph);
    for (auto v : ordering.order) {
        result.width = std::max(result.width, residual.degree(v));
        auto fill    = residual.eliminate(v);
        for (const auto& arc : fill) {
            result.fill_in.push_back(arc);
            result.elimination_graph.add_arc(arc.from, arc.to);
        }
        result.steps.push_back({v, std::move(fill)});
    }
    std::sort(result.fill_in.begin(), result.fill_in.end());
    result.fill_in.erase(std::unique(result.fill_in.begin(), result.fill_in.end()), result.fill_in.end());

    for (const auto& arc : result.elimination_graph.arcs()) {
        if (arc.from < arc.to && result.elimination_graph.has_arc(arc.to, arc.from)) {
            result.two_cycle_pairs.push_back({arc.from, arc.to});
        }
    }
    return result;
}

EliminationOrdering min_degree_ordering(const Digraph& graph) {
    const auto          n = graph.vertex_count();
    ResidualGraph       residual(graph);
    EliminationOrdering ordering{{}, OrderingStrategy::min_degree};
    ordering.order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = 0;
        bool   found = false;
        for (Vertex v = 0; v < n; ++v) {
            if (residual.alive(v) && (!found || residual.degree(v) < residual.degree(best))) {
                best  = v;
                found = true;
            }
        }
        residual.eliminate(best);
        ordering.order.push_back(best);
    }
    return ordering;
}

EliminationOrdering input_ordering(const Digraph& graph) {
    EliminationOrdering ordering{{}, OrderingStrategy::input_order};
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        ordering.order.push_back(v);
    }
    return ordering;
}

EliminationOrdering make_ordering(const Digraph& graph, OrderingStrategy strategy) {
    return strategy == OrderingStrategy::min_degree ? min_degree_ordering(graph) : input_ordering(graph);
}

} // namespace relaxasp
