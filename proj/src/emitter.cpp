#include <relaxasp/emitter.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace relaxasp {

std::string SymbolTable::format() const {
    std::string out;
    for (const auto& [num, name] : entries) {
        out += std::to_string(num) + ' ' + name + '\n';
    }
    return out;
}

SymbolTable symbol_table(const LogicProgram& program) {
    SymbolTable table;
    for (Atom a = 0; a < program.atom_count(); ++a) {
        table.entries.emplace_back(a + 1, program.name(a));
    }
    return table;
}

std::string emit_text(const LogicProgram& program) {
    std::string out;
    for (const auto& rule : program.rules()) {
        out += render(program, rule);
        out += '\n';
    }
    if (!program.minimize().empty()) {
        out += "#minimize { ";
        const char* sep = "";
        for (const auto& [atom, weight] : program.minimize()) {
            auto name = program.name(atom);
            out += sep + std::to_string(weight) + ',' + name + " : " + name;
            sep = "; ";
        }
        out += " }.\n";
    }
    return out;
}

SmodelsOutput emit_smodels(const LogicProgram& program) {
    if (program.atom_count() >= std::numeric_limits<std::int32_t>::max()) {
        throw std::length_error("too many atoms for the smodels format");
    }
    std::ostringstream out;
    auto               num = [](Atom a) { return a + 1; };
    for (const auto& rule : program.rules()) {
        out << (rule.kind == RuleKind::choice ? "3 1 " : "1 ") << num(rule.head) << ' '
            << rule.pos.size() + rule.neg.size() << ' ' << rule.neg.size();
        for (auto c : rule.neg) {
            out << ' ' << num(c);
        }
        for (auto b : rule.pos) {
            out << ' ' << num(b);
        }
        out << '\n';
    }
    if (!program.minimize().empty()) {
        out << "6 0 " << program.minimize().size() << " 0";
        for (const auto& entry : program.minimize()) {
            out << ' ' << num(entry.atom);
        }
        for (const auto& entry : program.minimize()) {
            out << ' ' << entry.weight;
        }
        out << '\n';
    }
    SmodelsOutput result;
    result.symbols = symbol_table(program);
    out << "0\n" << result.symbols.format() << "0\nB+\n0\nB-\n0\n1\n";
    result.numeric = out.str();
    return result;
}

ProgramFormatError::ProgramFormatError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message)
    , line_(line) {}

namespace {

struct NamedRule {
    RuleKind                 kind = RuleKind::normal;
    std::string              head;
    std::vector<std::string> pos;
    std::vector<std::string> neg;
};

struct NamedProgram {
    std::vector<NamedRule>                   rules;
    std::vector<std::pair<std::string, Cost>> minimize;
    std::vector<std::string>                 appearance; // names in the order vocabulary indices are assigned
};

struct NameShape {
    std::string functor; // empty for plain names
    std::string first;
    std::string second;
};

std::optional<NameShape> split_name(std::string_view name) {
    auto open = name.find('(');
    if (open == std::string_view::npos) {
        return NameShape{"", std::string(name), ""};
    }
    auto comma = name.find(',', open);
    if (name.back() != ')' || comma == std::string_view::npos) {
        return std::nullopt;
    }
    return NameShape{std::string(name.substr(0, open)), std::string(name.substr(open + 1, comma - open - 1)),
                     std::string(name.substr(comma + 1, name.size() - comma - 2))};
}

LogicProgram assemble(const NamedProgram& named) {
    std::set<std::string> actions;
    for (const auto& [name, weight] : named.minimize) {
        actions.insert(name);
    }
    for (const auto& name : named.appearance) {
        if (auto shape = split_name(name); shape && shape->functor == "ws") {
            actions.insert(shape->first);
        }
    }

    auto                             vocabulary = std::make_shared<Vocabulary>();
    std::map<std::string, AtomIndex> state_ids;
    std::map<std::string, AtomIndex> action_ids;
    auto state = [&](const std::string& n) {
        auto [it, inserted] = state_ids.emplace(n, static_cast<AtomIndex>(vocabulary->states.size()));
        if (inserted) {
            vocabulary->states.push_back(n);
        }
        return it->second;
    };
    auto action = [&](const std::string& n) {
        auto [it, inserted] = action_ids.emplace(n, static_cast<AtomIndex>(vocabulary->actions.size()));
        if (inserted) {
            vocabulary->actions.push_back(n);
        }
        return it->second;
    };
    std::map<std::string, AtomKey> keys;
    for (const auto& name : named.appearance) {
        if (keys.count(name) != 0) {
            continue;
        }
        auto shape = split_name(name);
        if (!shape) {
            throw ProgramFormatError(0, "malformed atom name '" + name + "'");
        }
        AtomKey key;
        if (name == sentinel_name) {
            key = sentinel_atom();
        }
        else if (shape->functor == "ws") {
            auto a = action(shape->first);
            key    = ws_atom(a, state(shape->second));
        }
        else if (shape->functor == "dep") {
            auto p = state(shape->first);
            key    = dep_atom(p, state(shape->second));
        }
        else if (!shape->functor.empty()) {
            throw ProgramFormatError(0, "unknown atom functor in '" + name + "'");
        }
        else if (actions.count(name) != 0) {
            key = action_atom(action(name));
        }
        else {
            key = state_atom(state(name));
        }
        keys.emplace(name, key);
    }
    auto lookup = [&](const std::string& n) {
        auto it = keys.find(n);
        if (it == keys.end()) {
            throw ProgramFormatError(0, "atom '" + n + "' has no symbol");
        }
        return it->second;
    };
    auto lookup_all = [&](const std::vector<std::string>& names) {
        std::vector<AtomKey> out;
        for (const auto& n : names) {
            out.push_back(lookup(n));
        }
        return out;
    };

    ProgramBuilder builder(vocabulary);
    for (const auto& rule : named.rules) {
        if (rule.kind == RuleKind::choice) {
            builder.choice(lookup(rule.head), lookup_all(rule.pos), lookup_all(rule.neg));
        }
        else {
            builder.normal(lookup(rule.head), lookup_all(rule.pos), lookup_all(rule.neg));
        }
    }
    for (const auto& [name, weight] : named.minimize) {
        builder.minimize(lookup(name), weight);
    }
    return builder.build();
}

//! Splits on top-level commas or semicolons, ignoring those inside parentheses.
std::vector<std::string> split_top_level(std::string_view text, char sep) {
    std::vector<std::string> parts;
    int                      depth = 0;
    std::string              current;
    for (char c : text) {
        if (c == '(') {
            ++depth;
        }
        else if (c == ')') {
            --depth;
        }
        if (c == sep && depth == 0) {
            parts.push_back(current);
            current.clear();
        }
        else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

std::string trim(std::string_view s) {
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

Cost parse_cost(std::string_view text, std::size_t line) {
    Cost value     = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
        throw ProgramFormatError(line, "invalid weight '" + std::string(text) + "'");
    }
    return value;
}

bool atom_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-' || c == '(' || c == ')' ||
           c == ',';
}

void note(NamedProgram& program, std::set<std::string>& seen, const std::string& name, std::size_t line) {
    if (name.empty() || !std::all_of(name.begin(), name.end(), atom_char)) {
        throw ProgramFormatError(line, "invalid atom '" + name + "'");
    }
    if (seen.insert(name).second) {
        program.appearance.push_back(name);
    }
}

} // namespace

LogicProgram parse_text_program(std::string_view text) {
    NamedProgram          program;
    std::set<std::string> seen;
    std::istringstream    in{std::string(text)};
    std::string           raw;
    std::size_t           line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto stmt = trim(raw);
        if (stmt.empty() || stmt[0] == '%') {
            continue;
        }
        if (stmt.back() != '.') {
            throw ProgramFormatError(line, "statement does not end with '.'");
        }
        stmt.pop_back();
        if (stmt.starts_with("#minimize")) {
            auto open  = stmt.find('{');
            auto close = stmt.rfind('}');
            if (open == std::string::npos || close == std::string::npos || close < open) {
                throw ProgramFormatError(line, "malformed #minimize");
            }
            auto body = trim(std::string_view(stmt).substr(open + 1, close - open - 1));
            if (body.empty()) {
                continue;
            }
            for (const auto& element : split_top_level(body, ';')) {
                auto colon = element.rfind(':');
                if (colon == std::string::npos) {
                    throw ProgramFormatError(line, "minimize element without ':'");
                }
                auto tuple = split_top_level(element.substr(0, colon), ',');
                auto name  = trim(element.substr(colon + 1));
                if (tuple.size() != 2 || trim(tuple[1]) != name) {
                    throw ProgramFormatError(line, "minimize element must read 'w,atom : atom'");
                }
                note(program, seen, name, line);
                program.minimize.emplace_back(name, parse_cost(trim(tuple[0]), line));
            }
            continue;
        }
        NamedRule rule;
        auto      arrow = stmt.find(":-");
        auto      head  = trim(std::string_view(stmt).substr(0, arrow));
        if (head.size() >= 2 && head.front() == '{' && head.back() == '}') {
            rule.kind = RuleKind::choice;
            head      = trim(std::string_view(head).substr(1, head.size() - 2));
        }
        if (head.empty()) {
            throw ProgramFormatError(line, "missing rule head");
        }
        rule.head = head;
        note(program, seen, head, line);
        if (arrow != std::string::npos) {
            for (const auto& part : split_top_level(std::string_view(stmt).substr(arrow + 2), ',')) {
                auto literal = trim(part);
                if (literal.starts_with("not ")) {
                    rule.neg.push_back(trim(std::string_view(literal).substr(4)));
                    note(program, seen, rule.neg.back(), line);
                }
                else if (!literal.empty()) {
                    rule.pos.push_back(literal);
                    note(program, seen, literal, line);
                }
                else {
                    throw ProgramFormatError(line, "empty body literal");
                }
            }
        }
        program.rules.push_back(std::move(rule));
    }
    return assemble(program);
}

LogicProgram parse_smodels(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        raw;
    std::size_t        line = 0;
    struct NumRule {
        RuleKind                   kind;
        std::uint32_t              head;
        std::vector<std::uint32_t> pos, neg;
    };
    std::vector<NumRule>                              rules;
    std::vector<std::pair<std::uint32_t, Cost>>       minimize;
    auto next_line = [&]() -> std::string {
        if (!std::getline(in, raw)) {
            throw ProgramFormatError(line + 1, "unexpected end of input");
        }
        ++line;
        return raw;
    };
    auto numbers = [&](const std::string& s) {
        std::istringstream    fields(s);
        std::vector<long long> out;
        long long             v = 0;
        while (fields >> v) {
            out.push_back(v);
        }
        if (!fields.eof()) {
            throw ProgramFormatError(line, "expected integers");
        }
        return out;
    };
    auto body = [&](const std::vector<long long>& v, std::size_t at, NumRule& rule) {
        if (at + 2 > v.size()) {
            throw ProgramFormatError(line, "truncated rule");
        }
        auto n = static_cast<std::size_t>(v[at]), neg = static_cast<std::size_t>(v[at + 1]);
        if (neg > n || at + 2 + n != v.size()) {
            throw ProgramFormatError(line, "inconsistent literal counts");
        }
        for (std::size_t i = 0; i < n; ++i) {
            (i < neg ? rule.neg : rule.pos).push_back(static_cast<std::uint32_t>(v[at + 2 + i]));
        }
    };
    for (;;) {
        auto v = numbers(next_line());
        if (v.empty()) {
            throw ProgramFormatError(line, "empty line");
        }
        if (v[0] == 0) {
            break;
        }
        NumRule rule{RuleKind::normal, 0, {}, {}};
        if (v[0] == 1 && v.size() >= 2) {
            rule.head = static_cast<std::uint32_t>(v[1]);
            body(v, 2, rule);
        }
        else if (v[0] == 3 && v.size() >= 3 && v[1] == 1) {
            rule.kind = RuleKind::choice;
            rule.head = static_cast<std::uint32_t>(v[2]);
            body(v, 3, rule);
        }
        else if (v[0] == 6 && v.size() >= 4 && v[1] == 0) {
            auto n = static_cast<std::size_t>(v[2]);
            if (v[3] != 0 || v.size() != 4 + 2 * n) {
                throw ProgramFormatError(line, "unsupported minimize statement");
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (v[4 + n + i] < 0) {
                    throw ProgramFormatError(line, "negative weight");
                }
                minimize.emplace_back(static_cast<std::uint32_t>(v[4 + i]), v[4 + n + i]);
            }
            continue;
        }
        else {
            throw ProgramFormatError(line, "unsupported rule type " + std::to_string(v[0]));
        }
        rules.push_back(std::move(rule));
    }
    std::map<std::uint32_t, std::string> symbols;
    for (;;) {
        auto s = next_line();
        if (trim(s) == "0") {
            break;
        }
        std::uint32_t num   = 0;
        auto          space = s.find(' ');
        auto [ptr, ec]      = std::from_chars(s.data(), s.data() + std::min(space, s.size()), num);
        if (space == std::string::npos || ec != std::errc() || num == 0) {
            throw ProgramFormatError(line, "malformed symbol table entry");
        }
        if (!symbols.emplace(num, trim(std::string_view(s).substr(space + 1))).second) {
            throw ProgramFormatError(line, "duplicate symbol " + std::to_string(num));
        }
    }
    for (const char* section : {"B+", "B-"}) {
        if (trim(next_line()) != section) {
            throw ProgramFormatError(line, std::string("expected ") + section);
        }
        if (trim(next_line()) != "0") {
            throw ProgramFormatError(line, std::string("non-empty ") + section + " section is not supported");
        }
    }
    next_line(); // number of models

    NamedProgram named;
    auto         name_of = [&](std::uint32_t num) {
        auto it = symbols.find(num);
        if (it == symbols.end()) {
            throw ProgramFormatError(line, "atom " + std::to_string(num) + " has no symbol");
        }
        return it->second;
    };
    for (const auto& [num, name] : symbols) {
        named.appearance.push_back(name);
    }
    for (const auto& rule : rules) {
        NamedRule r{rule.kind, name_of(rule.head), {}, {}};
        for (auto b : rule.pos) {
            r.pos.push_back(name_of(b));
        }
        for (auto c : rule.neg) {
            r.neg.push_back(name_of(c));
        }
        named.rules.push_back(std::move(r));
    }
    for (const auto& [num, weight] : minimize) {
        named.minimize.emplace_back(name_of(num), weight);
    }
    return assemble(named);
}

ProgramFingerprint fingerprint(const LogicProgram& program) {
    ProgramFingerprint print;
    for (const auto& rule : program.rules()) {
        print.rules.push_back(render(program, rule));
    }
    for (const auto& [atom, weight] : program.minimize()) {
        print.minimize.push_back(program.name(atom) + '=' + std::to_string(weight));
    }
    std::sort(print.rules.begin(), print.rules.end());
    std::sort(print.minimize.begin(), print.minimize.end());
    return print;
}

} // namespace relaxasp
