// Acceptance run: one PASS/FAIL/SKIP line per criterion, exit status 1 if any fails.

#include "fixtures.hpp"

#include <relaxasp/emitter.hpp>
#include <relaxasp/encoders.hpp>
#include <relaxasp/oracle.hpp>
#include <relaxasp/semantics.hpp>
#include <relaxasp/solver.hpp>
#include <relaxasp/verify.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

using namespace relaxasp;

namespace {

constexpr std::uint64_t campaign_seed = 20240917;
constexpr std::size_t   campaign_size = 200;

enum class Verdict { pass, fail, skip };

struct Outcome {
    Verdict     verdict = Verdict::pass;
    std::string detail;
};

std::vector<std::string> listing(const LogicProgram& program) {
    std::vector<std::string> out;
    for (const auto& rule : program.rules()) {
        out.push_back(render(program, rule));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

Outcome require(bool ok, std::string detail) { return {ok ? Verdict::pass : Verdict::fail, std::move(detail)}; }

Outcome example1() {
    auto problem = fixtures::relaxed(fixtures::ex1);
    auto p       = encode_p(problem);
    auto rules   = listing(p);
    if (rules != sorted({"{a} :- p.", "{b} :- q.", "q :- a.", "p :- b.", "p :- not p."})) {
        return require(false, "rules differ");
    }
    auto all       = interpretation_of(p, {"a", "b", "p", "q"});
    auto supported = enumerate_models(p, Semantics::supported).models;
    auto stable    = enumerate_models(p, Semantics::stable).models;
    bool found     = std::find(supported.begin(), supported.end(), all) != supported.end();
    return require(found && is_model(p, all) && stable.empty(),
                   "5 rules, {a,b,p,q} supported=" + std::to_string(found) +
                       ", stable models=" + std::to_string(stable.size()));
}

Outcome example2() {
    auto problem = fixtures::relaxed(fixtures::ex1);
    auto acyc    = encode_acyc(problem);
    auto rules   = listing(acyc);
    auto want    = sorted({"{dep(p,q)} :- q.", "{dep(q,p)} :- p.", "{ws(a,q)} :- dep(q,p).", "{ws(b,p)} :- dep(p,q).",
                           "q :- ws(a,q).", "p :- ws(b,p).", "a :- ws(a,q).", "b :- ws(b,p).", "p :- not p."});
    if (rules != want) {
        return require(false, "rules differ");
    }
    auto m         = interpretation_of(acyc, {"a", "b", "p", "q", "ws(a,q)", "ws(b,p)", "dep(p,q)", "dep(q,p)"});
    auto supported = enumerate_models(acyc, Semantics::supported).models;
    auto acyclic   = enumerate_models(acyc, Semantics::acyclic_supported).models;
    return require(supported == std::vector<Interpretation>{m} && acyclic.empty(),
                   "9 rules, supported models=" + std::to_string(supported.size()) +
                       ", acyclic models=" + std::to_string(acyclic.size()));
}

// Campaign shared by criteria 3 to 5.
const std::vector<CampaignEntry>& campaign() {
    static const auto entries = [] {
        InstanceShape shape{.max_atoms = 6, .max_actions = 6, .max_cost = 3};
        return run_campaign(campaign_seed, campaign_size, shape, {}, std::max(1u, std::thread::hardware_concurrency()));
    }();
    return entries;
}

Outcome sweep(const std::vector<std::string>& checks) {
    std::map<std::string, std::size_t> failures;
    std::size_t                        failed_instances = 0;
    std::string                        first;
    for (const auto& entry : campaign()) {
        bool bad = false;
        for (const auto& name : checks) {
            const auto* c = entry.report.find(name);
            if (c == nullptr || !c->passed) {
                ++failures[name];
                bad = true;
                if (first.empty()) {
                    first = "first: instance " + std::to_string(entry.index) + " " + name + " " +
                            (c ? c->detail : std::string("missing"));
                }
            }
        }
        failed_instances += bad ? 1 : 0;
    }
    std::ostringstream detail;
    detail << campaign().size() - failed_instances << "/" << campaign().size() << " instances";
    for (const auto& [name, count] : failures) {
        detail << "; " << name << " failed on " << count;
    }
    if (!first.empty()) {
        detail << "; " << first;
    }
    return require(failed_instances == 0, detail.str());
}

// Elimination recomputed over an adjacency matrix.
struct MatrixElimination {
    std::set<Arc> fill;
    std::set<Arc> graph;
};

MatrixElimination eliminate_matrix(const Digraph& g, const std::vector<Vertex>& order) {
    auto                           n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    MatrixElimination              out;
    for (auto arc : g.arcs()) {
        adj[arc.from][arc.to] = true;
        out.graph.insert(arc);
    }
    std::vector<bool> gone(n, false);
    for (auto v : order) {
        for (Vertex x = 0; x < n; ++x) {
            for (Vertex y = 0; y < n; ++y) {
                if (x != y && !gone[x] && !gone[y] && x != v && y != v && adj[x][v] && adj[v][y]) {
                    out.fill.insert({x, y});
                    out.graph.insert({x, y});
                    adj[x][y] = true;
                }
            }
        }
        gone[v] = true;
    }
    return out;
}

Outcome elimination_property() {
    std::mt19937_64                        rng(campaign_seed);
    std::uniform_int_distribution<int>     size(0, 10);
    std::uniform_real_distribution<double> density(0.1, 0.9), coin(0.0, 1.0);
    std::size_t                            bad = 0, cyclic = 0;
    for (int i = 0; i < 500; ++i) {
        auto    n = static_cast<std::size_t>(size(rng));
        auto    d = density(rng);
        Digraph g(n);
        for (Vertex x = 0; x < n; ++x) {
            for (Vertex y = 0; y < n; ++y) {
                if (x != y && coin(rng) < d) {
                    g.add_arc(x, y);
                }
            }
        }
        cyclic += has_cycle(g) ? 1 : 0;
        for (auto strategy : {OrderingStrategy::min_degree, OrderingStrategy::input_order}) {
            auto ordering = make_ordering(g, strategy);
            auto result   = eliminate(g, ordering);
            auto matrix   = eliminate_matrix(g, ordering.order);
            bool ok       = has_cycle(g) == !result.two_cycle_pairs.empty();
            ok = ok && std::vector<Arc>(matrix.fill.begin(), matrix.fill.end()) == result.fill_in;
            ok = ok && std::vector<Arc>(matrix.graph.begin(), matrix.graph.end()) == result.elimination_graph.arcs();
            bad += ok ? 0 : 1;
        }
    }
    return require(bad == 0, std::to_string(1000 - bad) + "/1000 graph-ordering pairs, " + std::to_string(cyclic) +
                                 " cyclic graphs");
}

Outcome round_trips() {
    InstanceShape shape;
    std::size_t   bad = 0, total = 0;
    for (std::size_t i = 0; i < 50; ++i) {
        auto problem = relax(random_problem(campaign_seed + 1, i, shape));
        for (auto encoding : {Encoding::p, Encoding::pc, Encoding::pd}) {
            auto program = encode(problem, encoding);
            auto want    = fingerprint(program);
            ++total;
            if (fingerprint(parse_text_program(emit_text(program))) != want ||
                fingerprint(parse_smodels(emit_smodels(program).numeric)) != want) {
                ++bad;
            }
        }
    }
    std::size_t golden_bad = 0;
    for (auto [name, text] : {std::pair{"ex1", fixtures::ex1}, std::pair{"chain", fixtures::chain}}) {
        for (auto encoding : {Encoding::p, Encoding::acyc, Encoding::pc, Encoding::pd}) {
            auto stem = std::string(name) + "_" + std::string(to_string(encoding));
            auto a    = encode(fixtures::relaxed(text), encoding);
            auto b    = encode(fixtures::relaxed(text), encoding);
            golden_bad += emit_text(a) == emit_text(b) && emit_text(a) == fixtures::golden(stem + ".lp") ? 0 : 1;
            golden_bad += emit_smodels(a).numeric == emit_smodels(b).numeric &&
                                  emit_smodels(a).numeric == fixtures::golden(stem + ".sm")
                              ? 0
                              : 1;
        }
    }
    return require(bad == 0 && golden_bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) +
                                                    " programs round-trip, " + std::to_string(16 - golden_bad) +
                                                    "/16 golden files match");
}

Outcome solver_integration() {
    auto solver = default_solver();
    if (!solver) {
        return {Verdict::skip, "no solver configured (set RELAXASP_SOLVER)"};
    }
    try {
        auto ex1 = fixtures::relaxed(fixtures::ex1);
        for (auto [encoding, semantics] : {std::pair{Encoding::p, Semantics::stable},
                                           std::pair{Encoding::pc, Semantics::supported},
                                           std::pair{Encoding::pd, Semantics::supported}}) {
            if (run_solver(*solver, encode(ex1, encoding), semantics).satisfiable) {
                return require(false, "example 1 satisfiable under " + std::string(to_string(encoding)));
            }
        }
        InstanceShape shape{.max_atoms = 5, .max_actions = 5};
        std::size_t   agree = 0;
        std::string   first;
        for (std::size_t i = 0; i < 20; ++i) {
            auto problem = relax(random_problem(campaign_seed + 2, i, shape));
            auto oracle  = h_plus(problem).h_plus;
            bool ok      = true;
            for (auto [encoding, semantics] :
                 {std::pair{Encoding::p, Semantics::stable}, std::pair{Encoding::pd, Semantics::supported}}) {
                auto result = run_solver(*solver, encode(problem, encoding), semantics);
                auto got    = result.satisfiable ? result.cost : std::nullopt;
                if (got != oracle || (result.satisfiable && !result.optimum)) {
                    ok = false;
                    if (first.empty()) {
                        first = "; first mismatch: instance " + std::to_string(i) + " " +
                                std::string(to_string(encoding));
                    }
                }
            }
            agree += ok ? 1 : 0;
        }
        return require(agree == 20, std::to_string(agree) + "/20 instances agree with h+, example 1 unsatisfiable" +
                                        first);
    } catch (const std::exception& e) {
        return require(false, std::string("solver error: ") + e.what());
    }
}

} // namespace

int main() {
    struct Criterion {
        int                      id;
        const char*              title;
        double                   limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "example 1 fidelity", 1, example1},
        {2, "example 2 fidelity", 1, example2},
        {3, "stable models of P match orderable subsets", 60, [] { return sweep({"p-stable"}); }},
        {4, "ACYC projections match stable models of P", 120, [] { return sweep({"acyc-stable"}); }},
        {5, "P_c and P_d action sets and h+", 180,
         [] {
             return sweep({"pc-plans[min-degree]", "pd-pc[min-degree]", "pd-plans[min-degree]",
                           "hplus[min-degree]", "pc-plans[input-order]", "pd-pc[input-order]",
                           "pd-plans[input-order]", "hplus[input-order]"});
         }},
        {6, "vertex elimination cycle property", 30, elimination_property},
        {7, "emission round trips and golden files", 60, round_trips},
        {8, "external solver optimum", 300, solver_integration},
    };

    bool failed = false;
    for (const auto& c : criteria) {
        auto start   = std::chrono::steady_clock::now();
        auto outcome = c.run();
        auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.verdict == Verdict::pass && seconds > c.limit_s) {
            outcome.verdict = Verdict::fail;
            outcome.detail += "; over the time limit";
        }
        const char* tag = outcome.verdict == Verdict::pass ? "PASS" : outcome.verdict == Verdict::fail ? "FAIL" : "SKIP";
        failed          = failed || outcome.verdict == Verdict::fail;
        std::printf("%s criterion %d: %s (%.2f s, limit %.0f s): %s\n", tag, c.id, c.title, seconds, c.limit_s,
                    outcome.detail.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
