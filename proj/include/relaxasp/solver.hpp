#pragma once

#include <relaxasp/logic_program.hpp>
#include <relaxasp/semantics.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace relaxasp {

//! Solver command taken from RELAXASP_SOLVER, if set and non-empty.
[[nodiscard]] std::optional<std::string> default_solver();

struct SolverResult {
    bool                     satisfiable = false;
    bool                     optimum     = false;
    std::vector<std::string> atoms; // best model found, by name
    std::optional<Cost>      cost;
};

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

//! Runs a clasp compatible solver on the smodels emission of `program`.
//! `command` is a shell command prefix such as `clasp` or
//! `python3 -m clingo --mode=clasp`. Supported and acyclic-supported both run
//! in supported-model mode. Throws SolverError when the solver output cannot
//! be read.
[[nodiscard]] SolverResult run_solver(const std::string& command, const LogicProgram& program, Semantics semantics);

//! Command line flags selecting `semantics` in clasp.
[[nodiscard]] std::string solver_flags(Semantics semantics);

} // namespace relaxasp
