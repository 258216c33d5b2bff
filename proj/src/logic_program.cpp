#include <relaxasp/logic_program.hpp>

#include <algorithm>
#include <stdexcept>

namespace relaxasp {

std::shared_ptr<const Vocabulary> Vocabulary::of(const StripsProblem& problem) {
    auto vocabulary    = std::make_shared<Vocabulary>();
    vocabulary->states = problem.atoms;
    for (const auto& action : problem.actions) {
        vocabulary->actions.push_back(action.name);
    }
    return vocabulary;
}

std::string render(const Vocabulary& vocabulary, const AtomKey& key) {
    switch (key.kind) {
        case AtomKind::state: return vocabulary.states.at(key.first);
        case AtomKind::action: return vocabulary.actions.at(key.first);
        case AtomKind::well_support:
            return "ws(" + vocabulary.actions.at(key.first) + "," + vocabulary.states.at(key.second) + ")";
        case AtomKind::dependency:
            return "dep(" + vocabulary.states.at(key.first) + "," + vocabulary.states.at(key.second) + ")";
        case AtomKind::sentinel: return std::string(sentinel_name);
    }
    throw std::logic_error("unknown atom kind");
}

std::optional<Atom> LogicProgram::find(const AtomKey& key) const {
    if (auto it = handles_.find(key); it != handles_.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::optional<Atom> LogicProgram::find(std::string_view name) const {
    if (auto it = names_.find(name); it != names_.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::vector<Atom> LogicProgram::signature() const {
    std::vector<bool> seen(atom_count(), false);
    for (const auto& rule : rules_) {
        seen[rule.head] = true;
        for (auto a : rule.pos) {
            seen[a] = true;
        }
        for (auto a : rule.neg) {
            seen[a] = true;
        }
    }
    std::vector<Atom> result;
    for (Atom a = 0; a < seen.size(); ++a) {
        if (seen[a]) {
            result.push_back(a);
        }
    }
    return result;
}

LogicProgram LogicProgram::with_rules(std::vector<Rule> rules, std::vector<WeightedAtom> minimize) const {
    LogicProgram result = *this;
    result.rules_       = std::move(rules);
    result.minimize_    = std::move(minimize);
    return result;
}

ProgramBuilder::ProgramBuilder(std::shared_ptr<const Vocabulary> vocabulary)
    : vocabulary_(std::move(vocabulary)) {}

ProgramBuilder& ProgramBuilder::normal(AtomKey head, std::vector<AtomKey> pos, std::vector<AtomKey> neg) {
    rules_.push_back({RuleKind::normal, head, std::move(pos), std::move(neg)});
    return *this;
}

ProgramBuilder& ProgramBuilder::choice(AtomKey head, std::vector<AtomKey> pos, std::vector<AtomKey> neg) {
    rules_.push_back({RuleKind::choice, head, std::move(pos), std::move(neg)});
    return *this;
}

ProgramBuilder& ProgramBuilder::minimize(AtomKey atom, Cost weight) {
    if (weight < 0) {
        throw std::invalid_argument("negative minimize weight");
    }
    minimize_.emplace_back(atom, weight);
    return *this;
}

LogicProgram ProgramBuilder::build() const {
    LogicProgram program;
    program.vocabulary_ = vocabulary_;
    for (const auto& rule : rules_) {
        program.handles_.emplace(rule.head, 0);
        for (const auto& key : rule.pos) {
            program.handles_.emplace(key, 0);
        }
        for (const auto& key : rule.neg) {
            program.handles_.emplace(key, 0);
        }
    }
    for (auto& [key, handle] : program.handles_) {
        handle = static_cast<Atom>(program.keys_.size());
        program.keys_.push_back(key);
        auto name = render(*vocabulary_, key);
        if (!program.names_.emplace(name, handle).second) {
            throw std::invalid_argument("atom name '" + name + "' is not unique");
        }
    }
    auto handles = [&](const std::vector<AtomKey>& keys) {
        std::vector<Atom> out;
        out.reserve(keys.size());
        for (const auto& key : keys) {
            out.push_back(program.handles_.at(key));
        }
        return out;
    };
    for (const auto& rule : rules_) {
        program.rules_.push_back({rule.kind, program.handles_.at(rule.head), handles(rule.pos), handles(rule.neg)});
    }
    for (const auto& [key, weight] : minimize_) {
        if (auto atom = program.find(key)) {
            program.minimize_.push_back({*atom, weight});
        }
    }
    return program;
}

LogicProgram make_plain_program(const std::vector<PlainRule>& rules) {
    auto                                  vocabulary = std::make_shared<Vocabulary>();
    std::map<std::string, AtomIndex>      index;
    auto key = [&](const std::string& name) {
        auto [it, inserted] = index.emplace(name, static_cast<AtomIndex>(vocabulary->states.size()));
        if (inserted) {
            vocabulary->states.push_back(name);
        }
        return state_atom(it->second);
    };
    auto keys = [&](const std::vector<std::string>& names) {
        std::vector<AtomKey> out;
        for (const auto& n : names) {
            out.push_back(key(n));
        }
        return out;
    };
    struct Pending {
        RuleKind             kind;
        AtomKey              head;
        std::vector<AtomKey> pos, neg;
    };
    std::vector<Pending> pending;
    for (const auto& rule : rules) {
        auto head = key(rule.head);
        auto pos  = keys(rule.pos);
        pending.push_back({rule.kind, head, std::move(pos), keys(rule.neg)});
    }
    ProgramBuilder builder(vocabulary);
    for (auto& rule : pending) {
        if (rule.kind == RuleKind::choice) {
            builder.choice(rule.head, std::move(rule.pos), std::move(rule.neg));
        }
        else {
            builder.normal(rule.head, std::move(rule.pos), std::move(rule.neg));
        }
    }
    return builder.build();
}

std::string render(const LogicProgram& program, const Rule& rule) {
    std::string out;
    if (rule.kind == RuleKind::choice) {
        out += '{' + program.name(rule.head) + '}';
    }
    else {
        out += program.name(rule.head);
    }
    const char* sep = " :- ";
    for (auto a : rule.pos) {
        out += sep + program.name(a);
        sep = ", ";
    }
    for (auto a : rule.neg) {
        out += sep + std::string("not ") + program.name(a);
        sep = ", ";
    }
    out += '.';
    return out;
}

} // namespace relaxasp
