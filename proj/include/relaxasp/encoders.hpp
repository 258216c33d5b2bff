#pragma once

#include <relaxasp/elimination.hpp>
#include <relaxasp/logic_program.hpp>
#include <relaxasp/strips.hpp>

#include <string_view>
#include <vector>

namespace relaxasp {

enum class Encoding { p, acyc, pc, pd };

[[nodiscard]] std::string_view to_string(Encoding encoding);

//! Dependencies between the atoms of a relaxed problem: (p,q) whenever some
//! action adds p and requires q.
struct DependencySkeleton {
    std::vector<Arc>                                dep_pairs; // sorted
    std::vector<std::pair<ActionIndex, AtomIndex>>  ws_pairs;  // (a,p) with p in add(a), by action then atom
    Digraph                                         graph;     // over all atoms of the problem
};

[[nodiscard]] DependencySkeleton dependency_skeleton(const RelaxedProblem& problem);

//! Stable model encoding: g <- not g, {a} <- pre(a), p <- a.
[[nodiscard]] LogicProgram encode_p(const RelaxedProblem& problem);

//! P instrumented with dep/ws atoms for acyclicity checking.
[[nodiscard]] LogicProgram encode_acyc(const RelaxedProblem& problem);

//! ACYC(P) plus vertex elimination rules so that supported models are acyclic.
[[nodiscard]] LogicProgram encode_pc(const RelaxedProblem& problem, const EliminationOrdering& ordering);

//! Diagnostic encoding: inference runs from effects to well-support to
//! preconditions, with the same elimination rules as encode_pc.
[[nodiscard]] LogicProgram encode_pd(const RelaxedProblem& problem, const EliminationOrdering& ordering);

//! Dispatches on `encoding`, computing the ordering from the dependency
//! skeleton when one is needed.
[[nodiscard]] LogicProgram encode(const RelaxedProblem& problem, Encoding encoding,
                                  OrderingStrategy strategy = OrderingStrategy::min_degree);

//! Expected rule counts of each encoding, from the problem shape alone.
struct RuleCounts {
    std::size_t p    = 0;
    std::size_t acyc = 0;
    std::size_t pc   = 0;
    std::size_t pd   = 0;
};

[[nodiscard]] RuleCounts expected_rule_counts(const RelaxedProblem& problem, const EliminationResult& elimination);

} // namespace relaxasp
