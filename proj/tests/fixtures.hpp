#pragma once

#include <relaxasp/strips.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace fixtures {

// Two actions that each need what the other adds; the goal is unreachable.
inline constexpr const char* ex1 = R"(atoms: p q
goal: p
action a
  pre: p
  add: q
action b
  pre: q
  add: p
)";

inline constexpr const char* chain = R"(atoms: p q
goal: q
action a1 cost 1
  add: p
action a2 cost 2
  pre: p
  add: q
)";

// a1 and a3 both achieve p; a3 needs q, which needs p.
inline constexpr const char* redundant_cycle = R"(atoms: p q
goal: q
action a1
  add: p
action a2
  pre: p
  add: q
action a3
  pre: q
  add: p
)";

// One action adding two atoms, only one of them a goal.
inline constexpr const char* double_add = R"(atoms: p r
goal: p
action a
  add: p r
)";

inline relaxasp::RelaxedProblem relaxed(const char* text) { return relaxasp::relax(relaxasp::parse_problem(text)); }

inline std::string golden(const std::string& name) {
    std::ifstream      in(std::string(RELAXASP_GOLDEN_DIR) + "/" + name, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace fixtures
