#include <relaxasp/verify.hpp>

#include <relaxasp/encoders.hpp>
#include <relaxasp/oracle.hpp>
#include <relaxasp/semantics.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace relaxasp {

StripsProblem random_problem(std::mt19937_64& rng, const InstanceShape& shape) {
    std::uniform_int_distribution<std::size_t> atom_count(1, std::max<std::size_t>(1, shape.max_atoms));
    std::uniform_int_distribution<std::size_t> action_count(0, shape.max_actions);
    std::uniform_int_distribution<Cost>        cost(0, shape.max_cost);
    std::uniform_real_distribution<double>     coin(0.0, 1.0);

    StripsProblem problem;
    const auto    n = atom_count(rng);
    const auto    m = action_count(rng);
    for (std::size_t i = 0; i < n; ++i) {
        problem.atoms.push_back("p" + std::to_string(i));
    }
    auto draw = [&](double density) {
        std::vector<AtomIndex> atoms;
        for (AtomIndex p = 0; p < n; ++p) {
            if (coin(rng) < density) {
                atoms.push_back(p);
            }
        }
        return atoms;
    };
    problem.init = draw(shape.init_density);
    problem.goal = draw(shape.goal_density);
    for (std::size_t j = 0; j < m; ++j) {
        Action action;
        action.name = "a" + std::to_string(j);
        action.pre  = draw(shape.pre_density);
        action.add  = draw(shape.add_density);
        action.del  = draw(shape.del_density);
        action.cost = cost(rng);
        problem.actions.push_back(std::move(action));
    }
    return problem;
}

StripsProblem random_problem(std::uint64_t seed, std::size_t index, const InstanceShape& shape) {
    std::seed_seq   seq{seed, static_cast<std::uint64_t>(index)};
    std::mt19937_64 rng(seq);
    return random_problem(rng, shape);
}

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

const CheckOutcome* VerificationReport::find(std::string_view name) const {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckOutcome& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
}

namespace {

using KeySet = std::vector<AtomKey>;

KeySet keys_of(const LogicProgram& program, const Interpretation& interp) {
    KeySet keys;
    for (auto a : interp.atoms()) {
        keys.push_back(program.key(a));
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

std::vector<Atom> atoms_where(const LogicProgram& program, bool (*keep)(const AtomKey&)) {
    std::vector<Atom> atoms;
    for (Atom a = 0; a < program.atom_count(); ++a) {
        if (keep(program.key(a))) {
            atoms.push_back(a);
        }
    }
    return atoms;
}

bool is_action(const AtomKey& key) { return key.kind == AtomKind::action; }
bool is_plain(const AtomKey& key) { return key.kind == AtomKind::action || key.kind == AtomKind::state; }

//! Action subsets represented by the models of `program`.
std::set<ActionSet> action_projections(const LogicProgram& program, Semantics semantics) {
    auto                onto = atoms_where(program, is_action);
    std::set<ActionSet> result;
    for (const auto& interp : project_models(program, semantics, onto)) {
        ActionSet subset;
        for (auto a : interp.atoms()) {
            subset.push_back(program.key(a).first);
        }
        result.insert(std::move(subset));
    }
    return result;
}

std::string describe(const RelaxedProblem& problem, const ActionSet& subset) {
    std::string out = "{";
    for (auto a : subset) {
        out += (out.size() > 1 ? "," : "") + problem.actions()[a].name;
    }
    return out + "}";
}

//! Compares two collections of action sets and describes the difference.
std::string difference(const RelaxedProblem& problem, const std::set<ActionSet>& got, const std::set<ActionSet>& want,
                       std::string_view got_name, std::string_view want_name) {
    std::ostringstream out;
    for (const auto& s : got) {
        if (want.count(s) == 0) {
            out << describe(problem, s) << " in " << got_name << " only; ";
        }
    }
    for (const auto& s : want) {
        if (got.count(s) == 0) {
            out << describe(problem, s) << " in " << want_name << " only; ";
        }
    }
    return out.str();
}

std::optional<Cost> min_cost(const RelaxedProblem& problem, const std::set<ActionSet>& subsets) {
    std::optional<Cost> best;
    for (const auto& s : subsets) {
        auto c = cost_of(problem, s);
        if (!best || c < *best) {
            best = c;
        }
    }
    return best;
}

std::string cost_text(const std::optional<Cost>& cost) { return cost ? std::to_string(*cost) : "inf"; }

CheckOutcome compare_sets(std::string name, const RelaxedProblem& problem, const std::set<ActionSet>& got,
                          const std::set<ActionSet>& want, std::string_view got_name, std::string_view want_name) {
    CheckOutcome outcome{std::move(name), got == want, ""};
    outcome.detail = outcome.passed ? std::to_string(got.size()) + " subsets"
                                    : difference(problem, got, want, got_name, want_name);
    return outcome;
}

CheckOutcome compare_cost(std::string name, const std::optional<Cost>& got, const std::optional<Cost>& want) {
    return {std::move(name), got == want, "models " + cost_text(got) + ", oracle " + cost_text(want)};
}

} // namespace

VerificationReport verify_instance(const RelaxedProblem& problem, const VerifyOptions& options) {
    VerificationReport report;
    auto               subsets_list = relaxed_plan_subsets(problem, options.max_actions);
    std::set<ActionSet> oracle_subsets(subsets_list.begin(), subsets_list.end());
    auto                oracle = h_plus(problem, options.max_actions);

    report.checks.push_back({"solvable", is_solvable(problem) == oracle.h_plus.has_value(),
                             "reachability " + std::string(is_solvable(problem) ? "solvable" : "unsolvable") +
                                 ", h+ " + cost_text(oracle.h_plus)});

    // Stable models of P against f(A') over the oracle's subsets.
    auto                p      = encode_p(problem);
    auto                stable = enumerate_models(p, Semantics::stable,
                                                  {.max_atoms = 64, .strategy = EnumerationStrategy::search});
    std::set<KeySet>    stable_keys;
    std::set<ActionSet> stable_actions;
    for (const auto& model : stable.models) {
        stable_keys.insert(keys_of(p, model));
        ActionSet subset;
        for (auto a : model.atoms()) {
            if (p.key(a).kind == AtomKind::action) {
                subset.push_back(p.key(a).first);
            }
        }
        stable_actions.insert(std::move(subset));
    }
    std::set<KeySet> images;
    for (const auto& subset : oracle_subsets) {
        std::set<AtomKey> image;
        for (auto a : subset) {
            image.insert(action_atom(a));
            for (auto q : problem.actions()[a].add) {
                image.insert(state_atom(q));
            }
        }
        images.insert(KeySet(image.begin(), image.end()));
    }
    {
        CheckOutcome outcome{"p-stable", stable_keys == images, ""};
        outcome.detail = outcome.passed ? std::to_string(images.size()) + " stable models"
                                        : difference(problem, stable_actions, oracle_subsets, "P", "oracle");
        if (!outcome.passed && stable_actions == oracle_subsets) {
            outcome.detail = "action sets agree but some stable model differs from f(A')";
        }
        report.checks.push_back(std::move(outcome));
    }
    report.checks.push_back(compare_cost("hplus[p]", min_cost(problem, stable_actions), oracle.h_plus));

    // Acyclic supported models of ACYC(P), projected to the atoms of P.
    auto             acyc = encode_acyc(problem);
    std::set<KeySet> acyc_keys;
    for (const auto& interp : project_models(acyc, Semantics::acyclic_supported, atoms_where(acyc, is_plain))) {
        acyc_keys.insert(keys_of(acyc, interp));
    }
    {
        CheckOutcome outcome{"acyc-stable", acyc_keys == stable_keys, ""};
        std::size_t  extra = 0, missing = 0;
        for (const auto& k : acyc_keys) {
            extra += stable_keys.count(k) == 0 ? 1 : 0;
        }
        for (const auto& k : stable_keys) {
            missing += acyc_keys.count(k) == 0 ? 1 : 0;
        }
        outcome.detail = std::to_string(acyc_keys.size()) + " projections, " + std::to_string(stable_keys.size()) +
                         " stable models, " + std::to_string(extra) + " projections not stable, " +
                         std::to_string(missing) + " stable models not represented";
        report.checks.push_back(std::move(outcome));
    }

    auto skeleton = dependency_skeleton(problem);
    for (auto strategy : options.orderings) {
        auto       ordering = make_ordering(skeleton.graph, strategy);
        auto       tag      = "[" + std::string(to_string(strategy)) + "]";
        auto       pc       = encode_pc(problem, ordering);
        auto       pd       = encode_pd(problem, ordering);
        auto       pc_sets  = action_projections(pc, Semantics::supported);
        auto       pd_sets  = action_projections(pd, Semantics::supported);
        report.checks.push_back(compare_sets("pc-plans" + tag, problem, pc_sets, oracle_subsets, "P_c", "oracle"));
        report.checks.push_back(compare_sets("pd-pc" + tag, problem, pd_sets, pc_sets, "P_d", "P_c"));
        report.checks.push_back(compare_sets("pd-plans" + tag, problem, pd_sets, oracle_subsets, "P_d", "oracle"));
        auto pc_cost = min_cost(problem, pc_sets);
        auto pd_cost = min_cost(problem, pd_sets);
        CheckOutcome cost{"hplus" + tag, pc_cost == oracle.h_plus && pd_cost == oracle.h_plus,
                          "P_c " + cost_text(pc_cost) + ", P_d " + cost_text(pd_cost) + ", oracle " +
                              cost_text(oracle.h_plus)};
        report.checks.push_back(std::move(cost));

        auto cyclic = find_model(pc, Semantics::supported,
                                 [&](const Interpretation& interp) { return !is_acyclic(pc, interp); });
        report.checks.push_back({"pc-acyclic" + tag, !cyclic.has_value(),
                                 cyclic ? "cyclic supported model " + to_string(pc, *cyclic) : "no cyclic model"});
    }
    return report;
}

std::vector<CampaignEntry> run_campaign(std::uint64_t seed, std::size_t count, const InstanceShape& shape,
                                        const VerifyOptions& options, std::size_t jobs) {
    std::vector<CampaignEntry> entries(count);
    std::atomic<std::size_t>   next{0};
    std::exception_ptr         failure;
    std::mutex                 failure_mutex;

    auto worker = [&] {
        for (auto i = next++; i < count; i = next++) {
            try {
                entries[i].index   = i;
                entries[i].problem = random_problem(seed, i, shape);
                entries[i].report  = verify_instance(relax(entries[i].problem), options);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = count;
            }
        }
    };
    jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, count));
    std::vector<std::jthread> threads;
    for (std::size_t t = 1; t < jobs; ++t) {
        threads.emplace_back(worker);
    }
    worker();
    threads.clear();
    if (failure) {
        std::rethrow_exception(failure);
    }
    return entries;
}

} // namespace relaxasp
