#include <relaxasp/strips.hpp>

#include <algorithm>
#include <charconv>
#include <span>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace relaxasp {

std::string_view to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::syntax: return "syntax error";
        case ParseErrorKind::duplicate_atom: return "duplicate atom";
        case ParseErrorKind::duplicate_action: return "duplicate action";
        case ParseErrorKind::undeclared_atom: return "undeclared atom";
        case ParseErrorKind::negative_cost: return "negative cost";
        case ParseErrorKind::name_clash: return "name clash";
    }
    return "error";
}

namespace {
std::string describe(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& message) {
    std::ostringstream out;
    out << line << ':' << column << ": " << to_string(kind) << ": " << message;
    return out.str();
}
} // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(describe(kind, line, column, message))
    , kind_(kind)
    , line_(line)
    , column_(column) {}

namespace {

struct Token {
    std::string_view text;
    std::size_t      column; // 1-based
};

bool is_name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
}

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t        pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
            ++pos;
        }
        if (pos >= line.size()) {
            break;
        }
        auto start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') {
            ++pos;
        }
        tokens.push_back({line.substr(start, pos - start), start + 1});
    }
    return tokens;
}

class ProblemReader {
public:
    StripsProblem read(std::istream& in) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_;
            std::string_view text(raw);
            if (auto hash = text.find('#'); hash != std::string_view::npos) {
                text = text.substr(0, hash);
            }
            auto tokens = tokenize(text);
            if (!tokens.empty()) {
                statement(tokens);
            }
        }
        if (!seen_atoms_) {
            fail(ParseErrorKind::syntax, line_ + 1, 1, "missing 'atoms:' section");
        }
        finish_action();
        return std::move(problem_);
    }

private:
    enum class Section { none, pre, add, del };

    [[noreturn]] void fail(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& msg) const {
        throw ParseError(kind, line, column, msg);
    }
    [[noreturn]] void fail(ParseErrorKind kind, const Token& tok, const std::string& msg) const {
        fail(kind, line_, tok.column, msg);
    }

    void check_name(const Token& tok) const {
        if (!std::all_of(tok.text.begin(), tok.text.end(), is_name_char)) {
            fail(ParseErrorKind::syntax, tok, "invalid name '" + std::string(tok.text) + "'");
        }
        if (tok.text.starts_with("__")) {
            fail(ParseErrorKind::name_clash, tok, "names starting with '__' are reserved: '" + std::string(tok.text) + "'");
        }
    }

    std::vector<AtomIndex> atom_list(std::span<const Token> tokens) const {
        std::vector<AtomIndex> out;
        for (const auto& tok : tokens) {
            check_name(tok);
            auto it = atom_ids_.find(std::string(tok.text));
            if (it == atom_ids_.end()) {
                fail(ParseErrorKind::undeclared_atom, tok, "'" + std::string(tok.text) + "'");
            }
            out.push_back(it->second);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    void require_atoms(const Token& tok) const {
        if (!seen_atoms_) {
            fail(ParseErrorKind::syntax, tok, "'atoms:' section must come first");
        }
    }

    void statement(const std::vector<Token>& tokens) {
        const auto& head = tokens.front();
        auto        rest = std::span<const Token>(tokens).subspan(1);
        if (head.text == "atoms:") {
            if (seen_atoms_) {
                fail(ParseErrorKind::syntax, head, "repeated 'atoms:' section");
            }
            seen_atoms_ = true;
            for (const auto& tok : rest) {
                check_name(tok);
                auto name = std::string(tok.text);
                if (!atom_ids_.emplace(name, static_cast<AtomIndex>(problem_.atoms.size())).second) {
                    fail(ParseErrorKind::duplicate_atom, tok, "'" + name + "'");
                }
                problem_.atoms.push_back(std::move(name));
            }
        }
        else if (head.text == "init:" || head.text == "goal:") {
            require_atoms(head);
            bool& seen = head.text == "init:" ? seen_init_ : seen_goal_;
            if (seen) {
                fail(ParseErrorKind::syntax, head, "repeated '" + std::string(head.text) + "' section");
            }
            seen = true;
            (head.text == "init:" ? problem_.init : problem_.goal) = atom_list(rest);
        }
        else if (head.text == "actions:") {
            // Optional header before the action blocks.
            require_atoms(head);
            if (!rest.empty()) {
                fail(ParseErrorKind::syntax, rest.front(), "'actions:' takes no arguments");
            }
            if (seen_actions_header_ || !problem_.actions.empty()) {
                fail(ParseErrorKind::syntax, head, "'actions:' must precede every action");
            }
            seen_actions_header_ = true;
        }
        else if (head.text == "action") {
            require_atoms(head);
            finish_action();
            action_header(head, rest);
        }
        else if (head.text == "pre:" || head.text == "add:" || head.text == "del:") {
            if (!in_action_) {
                fail(ParseErrorKind::syntax, head, "'" + std::string(head.text) + "' outside of an action");
            }
            auto section = head.text == "pre:" ? Section::pre : head.text == "add:" ? Section::add : Section::del;
            auto bit     = 1u << static_cast<unsigned>(section);
            if (sections_seen_ & bit) {
                fail(ParseErrorKind::syntax, head, "repeated '" + std::string(head.text) + "' section");
            }
            sections_seen_ |= bit;
            auto& action = problem_.actions.back();
            auto& target = section == Section::pre ? action.pre : section == Section::add ? action.add : action.del;
            target       = atom_list(rest);
        }
        else {
            fail(ParseErrorKind::syntax, head, "unexpected '" + std::string(head.text) + "'");
        }
    }

    void action_header(const Token& head, std::span<const Token> rest) {
        if (rest.empty()) {
            fail(ParseErrorKind::syntax, line_, head.column + head.text.size(), "expected action name");
        }
        const auto& name_tok = rest[0];
        check_name(name_tok);
        auto name = std::string(name_tok.text);
        if (atom_ids_.count(name) != 0) {
            fail(ParseErrorKind::name_clash, name_tok, "action '" + name + "' has the same name as an atom");
        }
        if (!action_names_.insert(name).second) {
            fail(ParseErrorKind::duplicate_action, name_tok, "'" + name + "'");
        }
        Action action;
        action.name = std::move(name);
        if (rest.size() > 1) {
            if (rest[1].text != "cost") {
                fail(ParseErrorKind::syntax, rest[1], "expected 'cost'");
            }
            if (rest.size() != 3) {
                fail(ParseErrorKind::syntax, rest.size() < 3 ? rest[1] : rest[3],
                     rest.size() < 3 ? "expected cost value" : "trailing input after cost");
            }
            const auto& value = rest[2];
            Cost        cost  = 0;
            auto [ptr, ec]    = std::from_chars(value.text.data(), value.text.data() + value.text.size(), cost);
            if (ec != std::errc() || ptr != value.text.data() + value.text.size()) {
                fail(ParseErrorKind::syntax, value, "invalid cost '" + std::string(value.text) + "'");
            }
            if (cost < 0) {
                fail(ParseErrorKind::negative_cost, value, "action '" + action.name + "' has cost " + std::to_string(cost));
            }
            action.cost = cost;
        }
        problem_.actions.push_back(std::move(action));
        in_action_     = true;
        sections_seen_ = 0;
    }

    void finish_action() { in_action_ = false; }

    StripsProblem                              problem_;
    std::unordered_map<std::string, AtomIndex> atom_ids_;
    std::unordered_set<std::string>            action_names_;
    std::size_t                                line_          = 0;
    unsigned                                   sections_seen_ = 0;
    bool                                       seen_atoms_    = false;
    bool                                       seen_init_     = false;
    bool                                       seen_goal_     = false;
    bool                                       in_action_     = false;
    bool                                       seen_actions_header_ = false;
};

void write_atoms(std::ostream& out, const StripsProblem& problem, const std::vector<AtomIndex>& atoms) {
    for (auto a : atoms) {
        out << ' ' << problem.atoms[a];
    }
    out << '\n';
}

} // namespace

StripsProblem parse_problem(std::istream& in) { return ProblemReader().read(in); }

StripsProblem parse_problem(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_problem(in);
}

std::string format_problem(const StripsProblem& problem) {
    std::ostringstream out;
    out << "atoms:";
    for (const auto& atom : problem.atoms) {
        out << ' ' << atom;
    }
    out << "\ninit:";
    write_atoms(out, problem, problem.init);
    out << "goal:";
    write_atoms(out, problem, problem.goal);
    for (const auto& action : problem.actions) {
        out << "action " << action.name << " cost " << action.cost << '\n';
        out << "  pre:";
        write_atoms(out, problem, action.pre);
        out << "  add:";
        write_atoms(out, problem, action.add);
        out << "  del:";
        write_atoms(out, problem, action.del);
    }
    return out.str();
}

RelaxedProblem relax(const StripsProblem& problem) {
    const auto        n = problem.atom_count();
    std::vector<bool> initial(n, false);
    for (auto p : problem.init) {
        initial[p] = true;
    }
    std::vector<bool> added(n, false);
    for (const auto& action : problem.actions) {
        for (auto p : action.add) {
            added[p] = true;
        }
    }

    RelaxedProblem         result;
    std::vector<AtomIndex> remap(n, 0);
    std::vector<bool>      kept(n, false);
    for (AtomIndex p = 0; p < n; ++p) {
        if (initial[p] && !added[p]) {
            continue;
        }
        kept[p]  = true;
        remap[p] = static_cast<AtomIndex>(result.problem.atoms.size());
        result.problem.atoms.push_back(problem.atoms[p]);
        result.atom_origin.push_back(p);
    }
    auto translate = [&](const std::vector<AtomIndex>& atoms) {
        std::vector<AtomIndex> out;
        for (auto p : atoms) {
            if (!initial[p] && kept[p]) {
                out.push_back(remap[p]);
            }
        }
        return out; // remap is monotone, so sortedness is preserved
    };

    result.problem.goal = translate(problem.goal);
    for (std::size_t i = 0; i < problem.actions.size(); ++i) {
        const auto& src = problem.actions[i];
        Action      action;
        action.name = src.name;
        action.cost = src.cost;
        action.pre  = translate(src.pre);
        for (auto p : translate(src.add)) {
            if (!std::binary_search(action.pre.begin(), action.pre.end(), p)) {
                action.add.push_back(p);
            }
        }
        result.problem.actions.push_back(std::move(action));
        result.action_origin.push_back(i);
    }
    return result;
}

std::vector<AtomIndex> reachable_atoms(const RelaxedProblem& problem) {
    std::vector<bool> reached(problem.atom_count(), false);
    std::vector<bool> applied(problem.action_count(), false);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < problem.action_count(); ++i) {
            const auto& action = problem.actions()[i];
            if (applied[i] ||
                !std::all_of(action.pre.begin(), action.pre.end(), [&](AtomIndex q) { return reached[q]; })) {
                continue;
            }
            applied[i] = true;
            changed    = true;
            for (auto p : action.add) {
                reached[p] = true;
            }
        }
    }
    std::vector<AtomIndex> out;
    for (AtomIndex p = 0; p < reached.size(); ++p) {
        if (reached[p]) {
            out.push_back(p);
        }
    }
    return out;
}

bool is_solvable(const RelaxedProblem& problem) {
    auto reached = reachable_atoms(problem);
    return std::all_of(problem.goal().begin(), problem.goal().end(),
                       [&](AtomIndex g) { return std::binary_search(reached.begin(), reached.end(), g); });
}

} // namespace relaxasp
