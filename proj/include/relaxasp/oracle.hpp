#pragma once

#include <relaxasp/strips.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace relaxasp {

//! Sorted set of action indices.
using ActionSet = std::vector<ActionIndex>;

//! Applies the actions of `subset` greedily from the empty state, lowest index
//! first among the applicable ones. Returns the resulting sequence if every
//! action of the subset gets applied. The goal is not checked.
[[nodiscard]] std::optional<std::vector<ActionIndex>> orderable(const RelaxedProblem& problem, const ActionSet& subset);

//! True iff `plan` is executable from the empty state and reaches the goal.
[[nodiscard]] bool achieves_goal(const RelaxedProblem& problem, const std::vector<ActionIndex>& plan);

[[nodiscard]] Cost cost_of(const RelaxedProblem& problem, const ActionSet& subset);

class TooManyActions : public std::length_error {
public:
    TooManyActions(std::size_t actions, std::size_t bound);
};

//! All subsets that can be ordered into a relaxed plan, sorted.
//! Throws TooManyActions above `max_actions`.
[[nodiscard]] std::vector<ActionSet> relaxed_plan_subsets(const RelaxedProblem& problem, std::size_t max_actions = 16);

struct OracleReport {
    std::optional<Cost>                   h_plus;          // nullopt means infinity
    std::vector<ActionSet>                optimal_subsets; // sorted
    std::vector<std::vector<ActionIndex>> witness_plans;   // one per optimal subset
};

//! Exhaustive h+ over all action subsets. Throws TooManyActions above `max_actions`.
[[nodiscard]] OracleReport h_plus(const RelaxedProblem& problem, std::size_t max_actions = 16);

} // namespace relaxasp
