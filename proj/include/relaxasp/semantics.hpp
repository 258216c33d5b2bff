#pragma once

#include <relaxasp/digraph.hpp>
#include <relaxasp/logic_program.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <limits>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace relaxasp {

//! Set of true atoms, kept sorted. Interpretations compare lexicographically
//! by their sorted handle lists.
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(std::vector<Atom> atoms);
    static Interpretation from_mask(const std::vector<bool>& truth);

    [[nodiscard]] bool                     contains(Atom atom) const;
    [[nodiscard]] std::span<const Atom>    atoms() const { return atoms_; }
    [[nodiscard]] std::size_t              size() const { return atoms_.size(); }
    [[nodiscard]] bool                     empty() const { return atoms_.empty(); }
    [[nodiscard]] std::vector<bool>        mask(std::size_t atom_count) const;

    //! Atoms of this interpretation whose handle satisfies `keep`.
    template <class Pred>
    [[nodiscard]] Interpretation filter(Pred keep) const {
        std::vector<Atom> out;
        for (auto a : atoms_) {
            if (keep(a)) {
                out.push_back(a);
            }
        }
        return Interpretation(std::move(out));
    }

    friend auto operator<=>(const Interpretation&, const Interpretation&) = default;
    friend bool operator==(const Interpretation&, const Interpretation&)  = default;

private:
    std::vector<Atom> atoms_;
};

//! Interpretation listed by atom names, e.g. "{a, ws(a,p)}".
[[nodiscard]] std::string to_string(const LogicProgram& program, const Interpretation& interp);

//! Builds an interpretation from atom names; throws std::invalid_argument for
//! names outside the program's atom table.
[[nodiscard]] Interpretation interpretation_of(const LogicProgram& program, const std::vector<std::string>& names);

enum class Semantics { stable, supported, acyclic_supported };

[[nodiscard]] std::string_view to_string(Semantics semantics);

//! Drops rules blocked by `interp`, turns the surviving choice rules with a true
//! head into normal rules and removes negative bodies.
[[nodiscard]] LogicProgram reduct(const LogicProgram& program, const Interpretation& interp);

//! Least model of a positive normal program. Throws std::invalid_argument if
//! the program contains choice rules or negative literals.
[[nodiscard]] Interpretation least_model(const LogicProgram& program);

//! Body truth under `interp`.
[[nodiscard]] bool body_holds(const Rule& rule, const std::vector<bool>& truth);

//! Classical model check; choice rules are satisfied unconditionally.
[[nodiscard]] bool is_model(const LogicProgram& program, const Interpretation& interp);
[[nodiscard]] bool is_stable(const LogicProgram& program, const Interpretation& interp);
[[nodiscard]] bool is_supported(const LogicProgram& program, const Interpretation& interp);

//! True iff the arcs {(p,q) | dep(p,q) in interp} form an acyclic graph.
[[nodiscard]] bool is_acyclic(const LogicProgram& program, const Interpretation& interp);

[[nodiscard]] bool satisfies(const LogicProgram& program, const Interpretation& interp, Semantics semantics);

//! Arcs (head, b) over atom handles for every rule and every b in its
//! positive body, sorted. Self-loops such as a <- a are kept, so this is an arc
//! list rather than a Digraph.
[[nodiscard]] std::vector<Arc> positive_dependency_graph(const LogicProgram& program);

//! Sum of the minimize weights of the true atoms.
[[nodiscard]] Cost model_cost(const LogicProgram& program, const Interpretation& interp);

class SignatureTooLarge : public std::length_error {
public:
    SignatureTooLarge(std::size_t atoms, std::size_t bound);
};

enum class EnumerationStrategy {
    exhaustive, //!< plain sweep over all 2^n interpretations
    search,     //!< backtracking over the completion with propagation
};

struct EnumerationOptions {
    std::size_t         limit     = std::numeric_limits<std::size_t>::max();
    std::size_t         max_atoms = 24;
    EnumerationStrategy strategy  = EnumerationStrategy::exhaustive;
};

struct EnumerationResult {
    std::vector<Interpretation> models; // sorted
    bool                        truncated = false;
};

//! All interpretations over the atom table satisfying `semantics`, sorted and
//! cut at `options.limit`. Throws SignatureTooLarge above `options.max_atoms`.
[[nodiscard]] EnumerationResult enumerate_models(const LogicProgram& program, Semantics semantics,
                                                 const EnumerationOptions& options = {});

//! Distinct projections onto `onto` of all models satisfying `semantics`, sorted.
//! Uses the backtracking search; the atom bound does not apply.
[[nodiscard]] std::vector<Interpretation> project_models(const LogicProgram& program, Semantics semantics,
                                                         std::span<const Atom> onto);

//! Some model satisfying `semantics` and `accept`, searched with backtracking.
[[nodiscard]] std::optional<Interpretation> find_model(const LogicProgram& program, Semantics semantics,
                                                       const std::function<bool(const Interpretation&)>& accept);

} // namespace relaxasp
