#include <relaxasp/semantics.hpp>

#include <algorithm>
#include <set>

namespace relaxasp {

Interpretation::Interpretation(std::vector<Atom> atoms)
    : atoms_(std::move(atoms)) {
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

Interpretation Interpretation::from_mask(const std::vector<bool>& truth) {
    Interpretation result;
    for (Atom a = 0; a < truth.size(); ++a) {
        if (truth[a]) {
            result.atoms_.push_back(a);
        }
    }
    return result;
}

bool Interpretation::contains(Atom atom) const { return std::binary_search(atoms_.begin(), atoms_.end(), atom); }

std::vector<bool> Interpretation::mask(std::size_t atom_count) const {
    std::vector<bool> truth(atom_count, false);
    for (auto a : atoms_) {
        if (a >= atom_count) {
            throw std::out_of_range("interpretation mentions atom " + std::to_string(a) + " outside the program");
        }
        truth[a] = true;
    }
    return truth;
}

std::string to_string(const LogicProgram& program, const Interpretation& interp) {
    std::string out = "{";
    for (auto a : interp.atoms()) {
        if (out.size() > 1) {
            out += ", ";
        }
        out += program.name(a);
    }
    return out + "}";
}

Interpretation interpretation_of(const LogicProgram& program, const std::vector<std::string>& names) {
    std::vector<Atom> atoms;
    for (const auto& name : names) {
        auto atom = program.find(name);
        if (!atom) {
            throw std::invalid_argument("unknown atom '" + name + "'");
        }
        atoms.push_back(*atom);
    }
    return Interpretation(std::move(atoms));
}

std::string_view to_string(Semantics semantics) {
    switch (semantics) {
        case Semantics::stable: return "stable";
        case Semantics::supported: return "supported";
        case Semantics::acyclic_supported: return "acyclic-supported";
    }
    return "unknown";
}

LogicProgram reduct(const LogicProgram& program, const Interpretation& interp) {
    auto              truth = interp.mask(program.atom_count());
    std::vector<Rule> rules;
    for (const auto& rule : program.rules()) {
        if (std::any_of(rule.neg.begin(), rule.neg.end(), [&](Atom c) { return truth[c]; })) {
            continue;
        }
        if (rule.kind == RuleKind::choice && !truth[rule.head]) {
            continue;
        }
        rules.push_back({RuleKind::normal, rule.head, rule.pos, {}});
    }
    return program.with_rules(std::move(rules));
}

Interpretation least_model(const LogicProgram& program) {
    const auto& rules = program.rules();
    for (const auto& rule : rules) {
        if (rule.kind != RuleKind::normal || !rule.neg.empty()) {
            throw std::invalid_argument("least_model requires a positive normal program");
        }
    }
    // Counter based fixpoint: a rule fires once all its positive atoms are derived.
    std::vector<std::size_t>              missing(rules.size());
    std::vector<std::vector<std::size_t>> watches(program.atom_count());
    std::vector<bool>                     derived(program.atom_count(), false);
    std::vector<Atom>                     queue;
    auto derive = [&](Atom a) {
        if (!derived[a]) {
            derived[a] = true;
            queue.push_back(a);
        }
    };
    for (std::size_t r = 0; r < rules.size(); ++r) {
        std::set<Atom> body(rules[r].pos.begin(), rules[r].pos.end());
        missing[r] = body.size();
        for (auto b : body) {
            watches[b].push_back(r);
        }
        if (missing[r] == 0) {
            derive(rules[r].head);
        }
    }
    while (!queue.empty()) {
        auto a = queue.back();
        queue.pop_back();
        for (auto r : watches[a]) {
            if (--missing[r] == 0) {
                derive(rules[r].head);
            }
        }
    }
    return Interpretation::from_mask(derived);
}

bool body_holds(const Rule& rule, const std::vector<bool>& truth) {
    return std::all_of(rule.pos.begin(), rule.pos.end(), [&](Atom b) { return truth[b]; }) &&
           std::none_of(rule.neg.begin(), rule.neg.end(), [&](Atom c) { return truth[c]; });
}

namespace {

bool model_of(const LogicProgram& program, const std::vector<bool>& truth) {
    return std::all_of(program.rules().begin(), program.rules().end(), [&](const Rule& rule) {
        return rule.kind == RuleKind::choice || truth[rule.head] || !body_holds(rule, truth);
    });
}

bool supported_by(const LogicProgram& program, const std::vector<bool>& truth) {
    if (!model_of(program, truth)) {
        return false;
    }
    std::vector<bool> supported(truth.size(), false);
    for (const auto& rule : program.rules()) {
        if (truth[rule.head] && body_holds(rule, truth)) {
            supported[rule.head] = true;
        }
    }
    return supported == truth;
}

bool stable_under(const LogicProgram& program, const Interpretation& interp) {
    return least_model(reduct(program, interp)) == interp;
}

bool acyclic_under(const LogicProgram& program, const std::vector<bool>& truth) {
    std::size_t vertices = 0;
    for (Atom a = 0; a < truth.size(); ++a) {
        const auto& key = program.key(a);
        if (key.kind == AtomKind::dependency) {
            vertices = std::max<std::size_t>(vertices, std::max(key.first, key.second) + 1);
        }
    }
    Digraph graph(vertices);
    for (Atom a = 0; a < truth.size(); ++a) {
        const auto& key = program.key(a);
        if (truth[a] && key.kind == AtomKind::dependency) {
            if (key.first == key.second) {
                return false;
            }
            graph.add_arc(key.first, key.second);
        }
    }
    return !has_cycle(graph);
}

} // namespace

bool is_model(const LogicProgram& program, const Interpretation& interp) {
    return model_of(program, interp.mask(program.atom_count()));
}

bool is_stable(const LogicProgram& program, const Interpretation& interp) {
    (void)interp.mask(program.atom_count()); // range check
    return stable_under(program, interp);
}

bool is_supported(const LogicProgram& program, const Interpretation& interp) {
    return supported_by(program, interp.mask(program.atom_count()));
}

bool is_acyclic(const LogicProgram& program, const Interpretation& interp) {
    return acyclic_under(program, interp.mask(program.atom_count()));
}

bool satisfies(const LogicProgram& program, const Interpretation& interp, Semantics semantics) {
    auto truth = interp.mask(program.atom_count());
    switch (semantics) {
        case Semantics::stable: return supported_by(program, truth) && stable_under(program, interp);
        case Semantics::supported: return supported_by(program, truth);
        case Semantics::acyclic_supported: return supported_by(program, truth) && acyclic_under(program, truth);
    }
    return false;
}

std::vector<Arc> positive_dependency_graph(const LogicProgram& program) {
    std::vector<Arc> arcs;
    for (const auto& rule : program.rules()) {
        for (auto b : rule.pos) {
            arcs.push_back({rule.head, b});
        }
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return arcs;
}

Cost model_cost(const LogicProgram& program, const Interpretation& interp) {
    Cost total = 0;
    for (const auto& [atom, weight] : program.minimize()) {
        if (interp.contains(atom)) {
            total += weight;
        }
    }
    return total;
}

SignatureTooLarge::SignatureTooLarge(std::size_t atoms, std::size_t bound)
    : std::length_error("program has " + std::to_string(atoms) + " atoms, enumeration bound is " +
                        std::to_string(bound)) {}

namespace {

enum Value : signed char { unknown = -1, is_false = 0, is_true = 1 };

//! Backtracking search for supported models. Propagation works on the
//! completion: firing normal rules, falsifying the last open literal of a
//! blocked rule, unsupported atoms becoming false and the only remaining
//! support of a true atom being forced. Every leaf is re-checked with the
//! plain semantic tests, so propagation only has to be sound.
class CompletionSearch {
public:
    CompletionSearch(const LogicProgram& program, Semantics semantics)
        : program_(program)
        , semantics_(semantics)
        , supporters_(program.atom_count()) {
        const auto& rules = program.rules();
        for (std::size_t r = 0; r < rules.size(); ++r) {
            const auto& rule = rules[r];
            // A rule with its head among the negative body never supports it.
            if (std::find(rule.neg.begin(), rule.neg.end(), rule.head) == rule.neg.end()) {
                supporters_[rule.head].push_back(r);
            }
        }
        for (Atom a = 0; a < program.atom_count(); ++a) {
            if (program.key(a).kind == AtomKind::dependency) {
                deps_.push_back(a);
                vertices_ = std::max<std::size_t>(vertices_, std::max(program.key(a).first, program.key(a).second) + 1);
            }
        }
    }

    //! Calls `visit(truth)` for every model in the subtree; stops when it returns false.
    template <class Visit>
    bool search(std::vector<Value> values, std::span<const Atom> order, Visit&& visit) {
        if (!propagate(values)) {
            return true;
        }
        for (auto a : order) {
            if (values[a] == unknown) {
                for (auto v : {is_false, is_true}) {
                    auto next = values;
                    next[a]   = v;
                    if (!search(std::move(next), order, visit)) {
                        return false;
                    }
                }
                return true;
            }
        }
        for (Atom a = 0; a < values.size(); ++a) {
            if (values[a] == unknown) {
                auto with = std::vector<Atom>{a};
                return search(std::move(values), with, visit);
            }
        }
        std::vector<bool> truth(values.size());
        for (std::size_t a = 0; a < values.size(); ++a) {
            truth[a] = values[a] == is_true;
        }
        if (!satisfies(program_, Interpretation::from_mask(truth), semantics_)) {
            return true;
        }
        return visit(truth);
    }

    bool propagate(std::vector<Value>& values) const {
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& rule : program_.rules()) {
                if (rule.kind != RuleKind::normal) {
                    continue;
                }
                auto status = body_status(rule, values);
                if (status.value == is_true) {
                    if (values[rule.head] == is_false) {
                        return false;
                    }
                    if (values[rule.head] == unknown) {
                        values[rule.head] = is_true;
                        changed           = true;
                    }
                }
                else if (status.value == unknown && values[rule.head] == is_false && status.open == 1) {
                    if (!assign(values, status.last_atom, status.last_positive ? is_false : is_true)) {
                        return false;
                    }
                    changed = true;
                }
            }
            for (Atom a = 0; a < values.size(); ++a) {
                if (values[a] == is_false) {
                    continue;
                }
                std::size_t candidates = 0;
                std::size_t only       = 0;
                for (auto r : supporters_[a]) {
                    if (body_status(program_.rules()[r], values).value != is_false) {
                        ++candidates;
                        only = r;
                    }
                }
                if (candidates == 0) {
                    if (values[a] == is_true) {
                        return false;
                    }
                    values[a] = is_false;
                    changed   = true;
                }
                else if (candidates == 1 && values[a] == is_true) {
                    const auto& rule = program_.rules()[only];
                    for (auto b : rule.pos) {
                        if (values[b] == unknown) {
                            changed = true;
                        }
                        if (!assign(values, b, is_true)) {
                            return false;
                        }
                    }
                    for (auto c : rule.neg) {
                        if (values[c] == unknown) {
                            changed = true;
                        }
                        if (!assign(values, c, is_false)) {
                            return false;
                        }
                    }
                }
            }
        }
        return semantics_ != Semantics::acyclic_supported || true_deps_acyclic(values);
    }

private:
    struct BodyStatus {
        Value       value         = is_true;
        std::size_t open          = 0;
        Atom        last_atom     = 0;
        bool        last_positive = true;
    };

    static BodyStatus body_status(const Rule& rule, const std::vector<Value>& values) {
        BodyStatus status;
        for (auto b : rule.pos) {
            if (values[b] == is_false) {
                return {is_false};
            }
            if (values[b] == unknown) {
                ++status.open;
                status.last_atom     = b;
                status.last_positive = true;
            }
        }
        for (auto c : rule.neg) {
            if (values[c] == is_true) {
                return {is_false};
            }
            if (values[c] == unknown) {
                ++status.open;
                status.last_atom     = c;
                status.last_positive = false;
            }
        }
        if (status.open > 0) {
            status.value = unknown;
        }
        return status;
    }

    static bool assign(std::vector<Value>& values, Atom a, Value v) {
        if (values[a] == unknown) {
            values[a] = v;
            return true;
        }
        return values[a] == v;
    }

    bool true_deps_acyclic(const std::vector<Value>& values) const {
        Digraph graph(vertices_);
        for (auto a : deps_) {
            if (values[a] == is_true) {
                const auto& key = program_.key(a);
                if (key.first == key.second) {
                    return false;
                }
                graph.add_arc(key.first, key.second);
            }
        }
        return !has_cycle(graph);
    }

    const LogicProgram&                   program_;
    Semantics                             semantics_;
    std::vector<std::vector<std::size_t>> supporters_;
    std::vector<Atom>                     deps_;
    std::size_t                           vertices_ = 0;
};

EnumerationResult finish(std::vector<Interpretation> models, std::size_t limit) {
    std::sort(models.begin(), models.end());
    EnumerationResult result;
    if (models.size() > limit) {
        models.resize(limit);
        result.truncated = true;
    }
    result.models = std::move(models);
    return result;
}

} // namespace

EnumerationResult enumerate_models(const LogicProgram& program, Semantics semantics,
                                   const EnumerationOptions& options) {
    const auto n = program.atom_count();
    if (n > options.max_atoms) {
        throw SignatureTooLarge(n, options.max_atoms);
    }
    std::vector<Interpretation> models;
    if (options.strategy == EnumerationStrategy::exhaustive) {
        if (n >= 63) {
            throw SignatureTooLarge(n, 62);
        }
        std::vector<bool> truth(n);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            for (std::size_t a = 0; a < n; ++a) {
                truth[a] = (bits >> a) & 1U;
            }
            auto interp = Interpretation::from_mask(truth);
            if (satisfies(program, interp, semantics)) {
                models.push_back(std::move(interp));
            }
        }
    }
    else {
        CompletionSearch  search(program, semantics);
        std::vector<Atom> order(n);
        for (Atom a = 0; a < n; ++a) {
            order[a] = a;
        }
        search.search(std::vector<Value>(n, unknown), order, [&](const std::vector<bool>& truth) {
            models.push_back(Interpretation::from_mask(truth));
            return true;
        });
    }
    return finish(std::move(models), options.limit);
}

std::vector<Interpretation> project_models(const LogicProgram& program, Semantics semantics,
                                           std::span<const Atom> onto) {
    const auto        n = program.atom_count();
    CompletionSearch  search(program, semantics);
    std::vector<Atom> rest;
    std::vector<bool> projected(n, false);
    for (auto a : onto) {
        projected.at(a) = true;
    }
    for (Atom a = 0; a < n; ++a) {
        if (!projected[a]) {
            rest.push_back(a);
        }
    }

    std::set<Interpretation> found;
    // Branch on the projection atoms first; each complete projection then
    // needs a single witness model.
    auto branch = [&](auto& self, std::vector<Value> values) -> void {
        if (!search.propagate(values)) {
            return;
        }
        for (auto a : onto) {
            if (values[a] == unknown) {
                for (auto v : {is_false, is_true}) {
                    auto next = values;
                    next[a]   = v;
                    self(self, std::move(next));
                }
                return;
            }
        }
        std::vector<Atom> key;
        for (auto a : onto) {
            if (values[a] == is_true) {
                key.push_back(a);
            }
        }
        bool witnessed = false;
        search.search(values, rest, [&](const std::vector<bool>&) {
            witnessed = true;
            return false;
        });
        if (witnessed) {
            found.insert(Interpretation(std::move(key)));
        }
    };
    branch(branch, std::vector<Value>(n, unknown));
    return {found.begin(), found.end()};
}

std::optional<Interpretation> find_model(const LogicProgram& program, Semantics semantics,
                                         const std::function<bool(const Interpretation&)>& accept) {
    const auto        n = program.atom_count();
    CompletionSearch  search(program, semantics);
    std::vector<Atom> order(n);
    for (Atom a = 0; a < n; ++a) {
        order[a] = a;
    }
    std::optional<Interpretation> found;
    search.search(std::vector<Value>(n, unknown), order, [&](const std::vector<bool>& truth) {
        auto interp = Interpretation::from_mask(truth);
        if (accept(interp)) {
            found = std::move(interp);
            return false;
        }
        return true;
    });
    return found;
}

} // namespace relaxasp
