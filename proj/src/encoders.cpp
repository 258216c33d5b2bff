#include <relaxasp/encoders.hpp>

#include <algorithm>
#include <stdexcept>

namespace relaxasp {

std::string_view to_string(Encoding encoding) {
    switch (encoding) {
        case Encoding::p: return "p";
        case Encoding::acyc: return "acyc";
        case Encoding::pc: return "pc";
        case Encoding::pd: return "pd";
    }
    return "unknown";
}

DependencySkeleton dependency_skeleton(const RelaxedProblem& problem) {
    DependencySkeleton skeleton;
    skeleton.graph = Digraph(problem.atom_count());
    for (ActionIndex a = 0; a < problem.action_count(); ++a) {
        const auto& action = problem.actions()[a];
        for (auto p : action.add) {
            skeleton.ws_pairs.emplace_back(a, p);
            for (auto q : action.pre) {
                if (p == q) {
                    throw std::logic_error("action '" + action.name + "' adds its own precondition");
                }
                skeleton.graph.add_arc(p, q);
            }
        }
    }
    skeleton.dep_pairs = skeleton.graph.arcs();
    return skeleton;
}

namespace {

std::vector<AtomKey> state_atoms(const std::vector<AtomIndex>& atoms) {
    std::vector<AtomKey> keys;
    for (auto p : atoms) {
        keys.push_back(state_atom(p));
    }
    return keys;
}

void add_goal_rules(ProgramBuilder& builder, const RelaxedProblem& problem) {
    for (auto g : problem.goal()) {
        builder.normal(state_atom(g), {}, {state_atom(g)});
    }
}

void add_minimize(ProgramBuilder& builder, const RelaxedProblem& problem) {
    for (ActionIndex a = 0; a < problem.action_count(); ++a) {
        builder.minimize(action_atom(a), problem.actions()[a].cost);
    }
}

//! Choice rules {dep(p,q)} <- q, then per added atom the well-support choice
//! and its consequences.
void add_acyc_rules(ProgramBuilder& builder, const RelaxedProblem& problem, const DependencySkeleton& skeleton) {
    for (const auto& arc : skeleton.dep_pairs) {
        builder.choice(dep_atom(arc.from, arc.to), {state_atom(arc.to)});
    }
    for (auto [a, p] : skeleton.ws_pairs) {
        std::vector<AtomKey> deps;
        for (auto q : problem.actions()[a].pre) {
            deps.push_back(dep_atom(p, q));
        }
        builder.choice(ws_atom(a, p), std::move(deps));
        builder.normal(state_atom(p), {ws_atom(a, p)});
        builder.normal(action_atom(a), {ws_atom(a, p)});
    }
}

//! dep(p,q) <- dep(p,v), dep(v,q) per fill-in arc of each step, then one
//! f <- dep(p,q), dep(q,p), not f per 2-cycle of the elimination graph.
void add_elimination_rules(ProgramBuilder& builder, const EliminationResult& elimination) {
    for (const auto& step : elimination.steps) {
        for (const auto& arc : step.fill_in) {
            builder.normal(dep_atom(arc.from, arc.to), {dep_atom(arc.from, step.vertex), dep_atom(step.vertex, arc.to)});
        }
    }
    for (const auto& pair : elimination.two_cycle_pairs) {
        builder.normal(sentinel_atom(), {dep_atom(pair.first, pair.second), dep_atom(pair.second, pair.first)},
                       {sentinel_atom()});
    }
}

} // namespace

LogicProgram encode_p(const RelaxedProblem& problem) {
    ProgramBuilder builder(Vocabulary::of(problem.problem));
    add_goal_rules(builder, problem);
    for (ActionIndex a = 0; a < problem.action_count(); ++a) {
        const auto& action = problem.actions()[a];
        builder.choice(action_atom(a), state_atoms(action.pre));
        for (auto p : action.add) {
            builder.normal(state_atom(p), {action_atom(a)});
        }
    }
    add_minimize(builder, problem);
    return builder.build();
}

LogicProgram encode_acyc(const RelaxedProblem& problem) {
    ProgramBuilder builder(Vocabulary::of(problem.problem));
    add_goal_rules(builder, problem);
    add_acyc_rules(builder, problem, dependency_skeleton(problem));
    add_minimize(builder, problem);
    return builder.build();
}

LogicProgram encode_pc(const RelaxedProblem& problem, const EliminationOrdering& ordering) {
    auto           skeleton = dependency_skeleton(problem);
    ProgramBuilder builder(Vocabulary::of(problem.problem));
    add_goal_rules(builder, problem);
    add_acyc_rules(builder, problem, skeleton);
    add_elimination_rules(builder, eliminate(skeleton.graph, ordering));
    add_minimize(builder, problem);
    return builder.build();
}

LogicProgram encode_pd(const RelaxedProblem& problem, const EliminationOrdering& ordering) {
    auto           skeleton = dependency_skeleton(problem);
    ProgramBuilder builder(Vocabulary::of(problem.problem));
    for (AtomIndex p = 0; p < problem.atom_count(); ++p) {
        builder.choice(state_atom(p));
    }
    std::vector<std::vector<ActionIndex>> adders(problem.atom_count());
    for (auto [a, p] : skeleton.ws_pairs) {
        adders[p].push_back(a);
        builder.choice(ws_atom(a, p), {state_atom(p)});
        builder.normal(action_atom(a), {ws_atom(a, p)});
        for (auto q : problem.actions()[a].pre) {
            builder.normal(dep_atom(p, q), {ws_atom(a, p)});
        }
    }
    for (const auto& arc : skeleton.dep_pairs) {
        builder.normal(state_atom(arc.to), {dep_atom(arc.from, arc.to)});
    }
    for (AtomIndex p = 0; p < problem.atom_count(); ++p) {
        std::vector<AtomKey> neg;
        for (auto a : adders[p]) {
            neg.push_back(ws_atom(a, p));
        }
        neg.push_back(sentinel_atom());
        builder.normal(sentinel_atom(), {state_atom(p)}, std::move(neg));
    }
    add_goal_rules(builder, problem);
    add_elimination_rules(builder, eliminate(skeleton.graph, ordering));
    add_minimize(builder, problem);
    return builder.build();
}

LogicProgram encode(const RelaxedProblem& problem, Encoding encoding, OrderingStrategy strategy) {
    switch (encoding) {
        case Encoding::p: return encode_p(problem);
        case Encoding::acyc: return encode_acyc(problem);
        case Encoding::pc:
        case Encoding::pd: {
            auto ordering = make_ordering(dependency_skeleton(problem).graph, strategy);
            return encoding == Encoding::pc ? encode_pc(problem, ordering) : encode_pd(problem, ordering);
        }
    }
    throw std::invalid_argument("unknown encoding");
}

RuleCounts expected_rule_counts(const RelaxedProblem& problem, const EliminationResult& elimination) {
    std::size_t adds = 0, add_pre = 0;
    for (const auto& action : problem.actions()) {
        adds += action.add.size();
        add_pre += action.add.size() * action.pre.size();
    }
    const auto  deps = dependency_skeleton(problem).dep_pairs.size();
    std::size_t fill = 0;
    for (const auto& step : elimination.steps) {
        fill += step.fill_in.size();
    }
    const auto goals  = problem.goal().size();
    const auto atoms  = problem.atom_count();
    const auto cycles = elimination.two_cycle_pairs.size();

    RuleCounts counts;
    counts.p    = goals + problem.action_count() + adds;
    counts.acyc = goals + deps + 3 * adds;
    counts.pc   = counts.acyc + fill + cycles;
    counts.pd   = atoms + 2 * adds + add_pre + deps + atoms + goals + fill + cycles;
    return counts;
}

} // namespace relaxasp
