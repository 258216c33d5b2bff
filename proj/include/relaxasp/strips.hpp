#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relaxasp {

using AtomIndex   = std::uint32_t;
using ActionIndex = std::uint32_t;
using Cost        = std::int64_t;

//! A grounded action. All atom sets are sorted and duplicate free.
struct Action {
    std::string            name;
    std::vector<AtomIndex> pre;
    std::vector<AtomIndex> add;
    std::vector<AtomIndex> del;
    Cost                   cost = 1;

    friend bool operator==(const Action&, const Action&) = default;
};

//! A grounded STRIPS task <X, I, A, G, cost>.
struct StripsProblem {
    std::vector<std::string> atoms;
    std::vector<AtomIndex>   init;
    std::vector<AtomIndex>   goal;
    std::vector<Action>      actions;

    [[nodiscard]] std::size_t atom_count() const { return atoms.size(); }
    [[nodiscard]] std::size_t action_count() const { return actions.size(); }

    friend bool operator==(const StripsProblem&, const StripsProblem&) = default;
};

//! Delete relaxation of a StripsProblem normalized to an empty initial state.
//!
//! `problem.init` is always empty and every action has an empty delete list.
//! `atom_origin[i]` / `action_origin[j]` index into the problem this one was
//! derived from.
struct RelaxedProblem {
    StripsProblem            problem;
    std::vector<std::size_t> atom_origin;
    std::vector<std::size_t> action_origin;

    [[nodiscard]] const std::vector<std::string>& atoms() const { return problem.atoms; }
    [[nodiscard]] const std::vector<AtomIndex>&   goal() const { return problem.goal; }
    [[nodiscard]] const std::vector<Action>&      actions() const { return problem.actions; }
    [[nodiscard]] std::size_t                     atom_count() const { return problem.atoms.size(); }
    [[nodiscard]] std::size_t                     action_count() const { return problem.actions.size(); }
};

enum class ParseErrorKind {
    syntax,
    duplicate_atom,
    duplicate_action,
    undeclared_atom,
    negative_cost,
    name_clash,
};

[[nodiscard]] std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& message);

    [[nodiscard]] ParseErrorKind kind() const { return kind_; }
    [[nodiscard]] std::size_t    line() const { return line_; }
    [[nodiscard]] std::size_t    column() const { return column_; }

private:
    ParseErrorKind kind_;
    std::size_t    line_;
    std::size_t    column_;
};

//! Reads a problem in the line based STRIPS text format:
//!
//!     atoms: p q r
//!     init: p
//!     goal: q
//!     action <name> [cost <n>]
//!       pre: ...
//!       add: ...
//!       del: ...
//!
//! `#` starts a comment. Atoms must be declared before use and action names
//! may neither repeat nor coincide with an atom name. Throws ParseError.
[[nodiscard]] StripsProblem parse_problem(std::istream& in);
[[nodiscard]] StripsProblem parse_problem(std::string_view text);

//! Renders `problem` in the format accepted by parse_problem.
[[nodiscard]] std::string format_problem(const StripsProblem& problem);

//! Removes delete effects and compiles the initial state away: atoms of I
//! disappear from G and from every pre/add list, atoms of I no action adds are
//! dropped from X, and adds that repeat a precondition are dropped.
[[nodiscard]] RelaxedProblem relax(const StripsProblem& problem);

//! Least fixpoint of relaxed applicability starting from the empty state,
//! as a sorted list of atoms.
[[nodiscard]] std::vector<AtomIndex> reachable_atoms(const RelaxedProblem& problem);

//! True iff every goal atom is reachable, i.e. h+ is finite.
[[nodiscard]] bool is_solvable(const RelaxedProblem& problem);

} // namespace relaxasp
