#pragma once

#include <relaxasp/logic_program.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace relaxasp {

//! Numeric atom id (handle + 1) to rendered name.
struct SymbolTable {
    std::vector<std::pair<std::uint32_t, std::string>> entries;

    //! `num name` lines, newline terminated.
    [[nodiscard]] std::string format() const;
};

[[nodiscard]] SymbolTable symbol_table(const LogicProgram& program);

//! Ground ASP text: one rule per line (`h :- b, not c.`, `{h} :- b.`), then a
//! single `#minimize` statement when the program has minimize atoms.
[[nodiscard]] std::string emit_text(const LogicProgram& program);

struct SmodelsOutput {
    std::string numeric;
    SymbolTable symbols;
};

//! smodels intermediate format. Throws std::length_error when the atom table
//! does not fit 32-bit atom numbers.
[[nodiscard]] SmodelsOutput emit_smodels(const LogicProgram& program);

class ProgramFormatError : public std::runtime_error {
public:
    ProgramFormatError(std::size_t line, const std::string& message);
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

//! Readers for the two emitted formats. Atom kinds are recovered from the
//! names: ws(a,p) and dep(p,q) are structured, `__f` is the sentinel, plain
//! names are actions when they are minimized or occur as the first argument of
//! ws(.,.), and states otherwise.
[[nodiscard]] LogicProgram parse_text_program(std::string_view text);
[[nodiscard]] LogicProgram parse_smodels(std::string_view text);

//! Rules and minimize entries rendered by name and sorted, for comparing
//! programs that may use different atom tables.
struct ProgramFingerprint {
    std::vector<std::string> rules;
    std::vector<std::string> minimize;

    friend bool operator==(const ProgramFingerprint&, const ProgramFingerprint&) = default;
};

[[nodiscard]] ProgramFingerprint fingerprint(const LogicProgram& program);

} // namespace relaxasp
