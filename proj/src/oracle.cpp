#include <relaxasp/oracle.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace relaxasp {

std::optional<std::vector<ActionIndex>> orderable(const RelaxedProblem& problem, const ActionSet& subset) {
    std::vector<bool>        state(problem.atom_count(), false);
    std::vector<bool>        applied(subset.size(), false);
    std::vector<ActionIndex> sequence;
    // Delete-freeness makes the state grow monotonically, so applying any
    // applicable action never blocks another one.
    for (bool progress = true; progress && sequence.size() < subset.size();) {
        progress = false;
        for (std::size_t i = 0; i < subset.size(); ++i) {
            const auto& action = problem.actions().at(subset[i]);
            if (applied[i] || !std::all_of(action.pre.begin(), action.pre.end(), [&](AtomIndex q) { return state[q]; })) {
                continue;
            }
            applied[i] = true;
            sequence.push_back(subset[i]);
            for (auto p : action.add) {
                state[p] = true;
            }
            progress = true;
            break; // restart so the lowest applicable index goes next
        }
    }
    if (sequence.size() != subset.size()) {
        return std::nullopt;
    }
    return sequence;
}

bool achieves_goal(const RelaxedProblem& problem, const std::vector<ActionIndex>& plan) {
    std::vector<bool> state(problem.atom_count(), false);
    for (auto a : plan) {
        const auto& action = problem.actions().at(a);
        if (!std::all_of(action.pre.begin(), action.pre.end(), [&](AtomIndex q) { return state[q]; })) {
            return false;
        }
        for (auto p : action.add) {
            state[p] = true;
        }
    }
    return std::all_of(problem.goal().begin(), problem.goal().end(), [&](AtomIndex g) { return state[g]; });
}

Cost cost_of(const RelaxedProblem& problem, const ActionSet& subset) {
    Cost total = 0;
    for (auto a : subset) {
        total += problem.actions().at(a).cost;
    }
    return total;
}

TooManyActions::TooManyActions(std::size_t actions, std::size_t bound)
    : std::length_error("problem has " + std::to_string(actions) + " actions, oracle bound is " + std::to_string(bound)) {}

namespace {

void check_bound(const RelaxedProblem& problem, std::size_t max_actions) {
    if (problem.action_count() > max_actions || problem.action_count() >= 63) {
        throw TooManyActions(problem.action_count(), std::min<std::size_t>(max_actions, 62));
    }
}

ActionSet subset_of(std::uint64_t mask) {
    ActionSet subset;
    for (ActionIndex a = 0; mask != 0; ++a, mask >>= 1) {
        if (mask & 1U) {
            subset.push_back(a);
        }
    }
    return subset;
}

} // namespace

std::vector<ActionSet> relaxed_plan_subsets(const RelaxedProblem& problem, std::size_t max_actions) {
    check_bound(problem, max_actions);
    std::vector<ActionSet> result;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << problem.action_count()); ++mask) {
        auto subset = subset_of(mask);
        if (auto plan = orderable(problem, subset); plan && achieves_goal(problem, *plan)) {
            result.push_back(std::move(subset));
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

OracleReport h_plus(const RelaxedProblem& problem, std::size_t max_actions) {
    check_bound(problem, max_actions);
    const auto                 m = problem.action_count();
    std::vector<std::uint64_t> masks(std::size_t{1} << m);
    for (std::uint64_t mask = 0; mask < masks.size(); ++mask) {
        masks[mask] = mask;
    }
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint64_t x, std::uint64_t y) { return std::popcount(x) < std::popcount(y); });

    OracleReport report;
    for (auto mask : masks) {
        auto subset = subset_of(mask);
        auto cost   = cost_of(problem, subset);
        if (report.h_plus && cost > *report.h_plus) {
            continue;
        }
        auto plan = orderable(problem, subset);
        if (!plan || !achieves_goal(problem, *plan)) {
            continue;
        }
        if (!report.h_plus || cost < *report.h_plus) {
            report.h_plus = cost;
            report.optimal_subsets.clear();
            report.witness_plans.clear();
        }
        report.optimal_subsets.push_back(std::move(subset));
        report.witness_plans.push_back(std::move(*plan));
    }
    // Present the minimizers sorted, keeping plans aligned.
    std::vector<std::size_t> idx(report.optimal_subsets.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        idx[i] = i;
    }
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t x, std::size_t y) { return report.optimal_subsets[x] < report.optimal_subsets[y]; });
    OracleReport sorted{report.h_plus, {}, {}};
    for (auto i : idx) {
        sorted.optimal_subsets.push_back(std::move(report.optimal_subsets[i]));
        sorted.witness_plans.push_back(std::move(report.witness_plans[i]));
    }
    return sorted;
}

} // namespace relaxasp
