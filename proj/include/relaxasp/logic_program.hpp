#pragma once

#include <relaxasp/strips.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace relaxasp {

//! Atom kinds in handle order: state atoms first, the sentinel last.
enum class AtomKind : std::uint8_t { state, action, well_support, dependency, sentinel };

//! Structured identity of a program atom.
//!
//! state(p) and action(a) use `first`; ws(a,p) stores (a, p); dep(p,q) stores
//! (p, q). Indices refer to the program's Vocabulary.
struct AtomKey {
    AtomKind      kind   = AtomKind::state;
    std::uint32_t first  = 0;
    std::uint32_t second = 0;

    friend auto operator<=>(const AtomKey&, const AtomKey&) = default;
};

[[nodiscard]] constexpr AtomKey state_atom(AtomIndex p) { return {AtomKind::state, p, 0}; }
[[nodiscard]] constexpr AtomKey action_atom(ActionIndex a) { return {AtomKind::action, a, 0}; }
[[nodiscard]] constexpr AtomKey ws_atom(ActionIndex a, AtomIndex p) { return {AtomKind::well_support, a, p}; }
[[nodiscard]] constexpr AtomKey dep_atom(AtomIndex p, AtomIndex q) { return {AtomKind::dependency, p, q}; }
[[nodiscard]] constexpr AtomKey sentinel_atom() { return {AtomKind::sentinel, 0, 0}; }

//! Names for the state and action indices used by AtomKey.
struct Vocabulary {
    std::vector<std::string> states;
    std::vector<std::string> actions;

    [[nodiscard]] static std::shared_ptr<const Vocabulary> of(const StripsProblem& problem);
};

//! Rendered name of the sentinel atom.
inline constexpr std::string_view sentinel_name = "__f";

[[nodiscard]] std::string render(const Vocabulary& vocabulary, const AtomKey& key);

//! Dense atom handle, 0-based.
using Atom = std::uint32_t;

enum class RuleKind : std::uint8_t { normal, choice };

//! `head <- pos, not neg` or `{head} <- pos, not neg`. Body order is kept as built.
struct Rule {
    RuleKind          kind = RuleKind::normal;
    Atom              head = 0;
    std::vector<Atom> pos;
    std::vector<Atom> neg;

    friend bool operator==(const Rule&, const Rule&) = default;
};

struct WeightedAtom {
    Atom atom;
    Cost weight;

    friend bool operator==(const WeightedAtom&, const WeightedAtom&) = default;
};

//! Ground program with normal and choice rules plus one minimize statement.
//!
//! Handles number exactly the atoms of the signature, sorted by AtomKey. A
//! program derived from another one (e.g. a reduct) keeps the atom table of its
//! source, so its signature() may be smaller than atom_count().
class LogicProgram {
public:
    LogicProgram() = default;

    [[nodiscard]] std::span<const Rule>         rules() const { return rules_; }
    [[nodiscard]] std::span<const WeightedAtom> minimize() const { return minimize_; }
    [[nodiscard]] std::size_t                   atom_count() const { return keys_.size(); }
    [[nodiscard]] const AtomKey&                key(Atom atom) const { return keys_.at(atom); }
    [[nodiscard]] std::span<const AtomKey>      keys() const { return keys_; }
    [[nodiscard]] const Vocabulary&             vocabulary() const { return *vocabulary_; }
    [[nodiscard]] std::shared_ptr<const Vocabulary> shared_vocabulary() const { return vocabulary_; }

    [[nodiscard]] std::optional<Atom> find(const AtomKey& key) const;
    [[nodiscard]] std::optional<Atom> find(std::string_view name) const;
    [[nodiscard]] std::string         name(Atom atom) const { return render(*vocabulary_, keys_.at(atom)); }

    //! Atoms occurring in some rule, sorted.
    [[nodiscard]] std::vector<Atom> signature() const;

    //! Same atom table, different rules and minimize statement.
    [[nodiscard]] LogicProgram with_rules(std::vector<Rule> rules, std::vector<WeightedAtom> minimize = {}) const;

private:
    friend class ProgramBuilder;

    std::shared_ptr<const Vocabulary> vocabulary_ = std::make_shared<Vocabulary>();
    std::vector<AtomKey>              keys_;
    std::map<AtomKey, Atom>           handles_;
    std::map<std::string, Atom, std::less<>> names_;
    std::vector<Rule>                 rules_;
    std::vector<WeightedAtom>         minimize_;
};

//! Collects rules over AtomKeys and assigns canonical handles on build().
class ProgramBuilder {
public:
    explicit ProgramBuilder(std::shared_ptr<const Vocabulary> vocabulary);

    ProgramBuilder& normal(AtomKey head, std::vector<AtomKey> pos = {}, std::vector<AtomKey> neg = {});
    ProgramBuilder& choice(AtomKey head, std::vector<AtomKey> pos = {}, std::vector<AtomKey> neg = {});
    //! Minimize entries for atoms that occur in no rule are dropped on build().
    ProgramBuilder& minimize(AtomKey atom, Cost weight);

    [[nodiscard]] std::size_t rule_count() const { return rules_.size(); }

    [[nodiscard]] LogicProgram build() const;

private:
    struct KeyedRule {
        RuleKind             kind;
        AtomKey              head;
        std::vector<AtomKey> pos;
        std::vector<AtomKey> neg;
    };

    std::shared_ptr<const Vocabulary>      vocabulary_;
    std::vector<KeyedRule>                 rules_;
    std::vector<std::pair<AtomKey, Cost>>  minimize_;
};

//! Program over plain (state) atoms, handy for small hand-written programs.
//! Each rule is given as head, positive body, negative body.
struct PlainRule {
    RuleKind                 kind = RuleKind::normal;
    std::string              head;
    std::vector<std::string> pos;
    std::vector<std::string> neg;
};
[[nodiscard]] LogicProgram make_plain_program(const std::vector<PlainRule>& rules);

//! Rule rendered with atom names, used to compare programs across atom tables.
[[nodiscard]] std::string render(const LogicProgram& program, const Rule& rule);

} // namespace relaxasp
