// relaxasp: compile delete-relaxed STRIPS problems to ground logic programs
// and cross-check them against the brute-force oracle.

#include <relaxasp/emitter.hpp>
#include <relaxasp/encoders.hpp>
#include <relaxasp/oracle.hpp>
#include <relaxasp/semantics.hpp>
#include <relaxasp/solver.hpp>
#include <relaxasp/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

using namespace relaxasp;

namespace {

enum Exit : int { ok = 0, invalid_input = 1, io_error = 2, bound_exceeded = 3, check_failed = 4 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) {
        throw IoError("cannot write " + path);
    }
}

RelaxedProblem load(const std::string& path) {
    auto problem = relax(parse_problem(read_file(path)));
    if (!is_solvable(problem)) {
        std::cerr << "warning: goal unreachable, encodings have no model\n";
    }
    return problem;
}

const std::map<std::string, Encoding> encodings{
    {"p", Encoding::p}, {"acyc", Encoding::acyc}, {"pc", Encoding::pc}, {"pd", Encoding::pd}};
const std::map<std::string, OrderingStrategy> orderings{
    {"min-degree", OrderingStrategy::min_degree}, {"input-order", OrderingStrategy::input_order}};
const std::map<std::string, Semantics> semantics_names{{"stable", Semantics::stable},
                                                       {"supported", Semantics::supported},
                                                       {"acyclic-supported", Semantics::acyclic_supported}};

Semantics intended_semantics(Encoding encoding) {
    switch (encoding) {
        case Encoding::p: return Semantics::stable;
        case Encoding::acyc: return Semantics::acyclic_supported;
        default: return Semantics::supported;
    }
}

std::string action_list(const RelaxedProblem& problem, const std::vector<ActionIndex>& actions, const char* sep) {
    std::string out;
    for (auto a : actions) {
        out += (out.empty() ? "" : sep) + problem.actions()[a].name;
    }
    return out;
}

// Model report shared by check-model and the solver hook of encode.
bool report_model(std::ostream& out, const RelaxedProblem& problem, const LogicProgram& program, Encoding encoding,
                  Semantics semantics, const Interpretation& model) {
    bool valid = satisfies(program, model, semantics);
    out << "verdict: ";
    if (valid) {
        out << "valid " << to_string(semantics) << " model\n";
    } else if (!is_model(program, model)) {
        out << "invalid: not a classical model\n";
    } else if (!is_supported(program, model)) {
        out << "invalid: not supported\n";
    } else if (semantics == Semantics::stable) {
        out << "invalid: supported but not stable\n";
    } else {
        out << "invalid: dependency arcs form a cycle\n";
    }

    ActionSet subset;
    for (auto atom : model.atoms()) {
        if (program.key(atom).kind == AtomKind::action) {
            subset.push_back(program.key(atom).first);
        }
    }
    std::sort(subset.begin(), subset.end());
    out << "actions: {" << action_list(problem, subset, ",") << "}\n";
    if (auto plan = orderable(problem, subset)) {
        out << "witness: (" << action_list(problem, *plan, ",") << ")"
            << (achieves_goal(problem, *plan) ? "" : " does not reach the goal") << "\n";
    } else {
        out << "witness: none, actions cannot be ordered\n";
    }
    out << "cost: " << model_cost(program, model) << "\n";

    if (encoding == Encoding::p) {
        std::vector<std::string> image;
        for (auto a : subset) {
            image.push_back(problem.actions()[a].name);
            for (auto q : problem.actions()[a].add) {
                image.push_back(problem.atoms()[q]);
            }
        }
        auto expected = interpretation_of(program, image);
        out << "f(A'): " << (expected == model ? "matches" : "differs from") << " the model\n";
    }
    return valid;
}

struct EncodeArgs {
    std::string input;
    std::string encoding = "p";
    std::string format   = "text";
    std::string ordering = "min-degree";
    std::string output;
    std::string map;
    std::string solver;
};

int cmd_encode(const EncodeArgs& args) {
    auto problem  = load(args.input);
    auto encoding = encodings.at(args.encoding);
    auto strategy = orderings.at(args.ordering);
    auto program  = encode(problem, encoding, strategy);
    auto skeleton = dependency_skeleton(problem);
    auto elim     = eliminate(skeleton.graph, make_ordering(skeleton.graph, strategy));
    auto semantic = intended_semantics(encoding);

    std::string body;
    SymbolTable symbols = symbol_table(program);
    if (args.format == "text") {
        body = "% encoding " + std::string(to_string(encoding)) + ", " + std::string(to_string(semantic)) +
               " semantics\n";
        auto flags = solver_flags(semantic);
        body += "% solve with: clingo " + (flags.empty() ? std::string() : flags + " ") + "<file>\n";
        if (semantic == Semantics::acyclic_supported) {
            body += "% the dep arcs of a model must be checked for cycles separately\n";
        }
        body += emit_text(program);
    } else {
        auto smodels = emit_smodels(program);
        body         = std::move(smodels.numeric);
    }
    write_file(args.output, body);
    if (!args.map.empty()) {
        write_file(args.map, symbols.format());
    }

    std::cerr << "encoding=" << to_string(encoding) << " ordering=" << to_string(strategy)
              << " rules=" << program.rules().size() << " atoms=" << program.signature().size()
              << " fill_in=" << elim.fill_in.size() << " two_cycles=" << elim.two_cycle_pairs.size() << "\n";

    auto solver = args.solver.empty() ? default_solver() : std::optional<std::string>(args.solver);
    if (!solver) {
        return ok;
    }
    std::ostream& out = args.output.empty() || args.output == "-" ? std::cerr : std::cout;
    auto          run = run_solver(*solver, program, semantic);
    if (!run.satisfiable) {
        out << "solver: unsatisfiable\n";
        return ok;
    }
    out << "solver: " << (run.optimum ? "optimum" : "model") << " found\n";
    report_model(out, problem, program, encoding, semantic, interpretation_of(program, run.atoms));
    return ok;
}

int cmd_hplus(const std::string& input, bool plan, std::size_t bound, bool json) {
    auto problem = load(input);
    if (problem.action_count() > bound) {
        std::cerr << "error: " << problem.action_count() << " actions exceed the oracle bound " << bound << "\n";
        return bound_exceeded;
    }
    auto report = h_plus(problem, bound);
    if (json) {
        nlohmann::json doc;
        doc["h_plus"] = report.h_plus ? nlohmann::json(*report.h_plus) : nlohmann::json("inf");
        if (plan && !report.witness_plans.empty()) {
            auto& steps = doc["plan"] = nlohmann::json::array();
            for (auto a : report.witness_plans.front()) {
                steps.push_back(problem.actions()[a].name);
            }
        }
        std::cout << doc.dump() << "\n";
        return ok;
    }
    std::cout << (report.h_plus ? std::to_string(*report.h_plus) : "inf") << "\n";
    if (plan && !report.witness_plans.empty()) {
        for (auto a : report.witness_plans.front()) {
            std::cout << problem.actions()[a].name << "\n";
        }
    }
    return ok;
}

struct CheckArgs {
    std::string input;
    std::string encoding = "p";
    std::string semantics;
    std::string ordering = "min-degree";
    std::string model;
};

int cmd_check_model(const CheckArgs& args) {
    auto problem  = load(args.input);
    auto encoding = encodings.at(args.encoding);
    auto program  = encode(problem, encoding, orderings.at(args.ordering));
    auto semantic = args.semantics.empty() ? intended_semantics(encoding) : semantics_names.at(args.semantics);

    std::istringstream       tokens(read_file(args.model));
    std::vector<std::string> names;
    for (std::string name; tokens >> name;) {
        names.push_back(name);
    }
    Interpretation model;
    try {
        model = interpretation_of(program, names);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << " is not in the signature of " << to_string(encoding) << "\n";
        return invalid_input;
    }
    return report_model(std::cout, problem, program, encoding, semantic, model) ? ok : check_failed;
}

struct VerifyArgs {
    std::string   input;
    std::uint64_t seed  = 42;
    std::size_t   count = 1;
    std::size_t   bound = 16;
    std::size_t   jobs  = std::max(1u, std::thread::hardware_concurrency());
    InstanceShape shape;
    bool          json = false;
    bool          quiet = false;
};

nlohmann::json to_json(const VerificationReport& report) {
    auto checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return checks;
}

int cmd_verify(const VerifyArgs& args) {
    VerifyOptions options;
    options.max_actions = args.bound;

    std::vector<CampaignEntry> entries;
    if (!args.input.empty()) {
        auto problem = load(args.input);
        if (problem.action_count() > args.bound) {
            std::cerr << "error: " << problem.action_count() << " actions exceed the oracle bound " << args.bound
                      << "\n";
            return bound_exceeded;
        }
        entries.push_back({0, problem.problem, verify_instance(problem, options)});
    } else {
        if (args.shape.max_actions > args.bound) {
            std::cerr << "error: --max-actions exceeds the oracle bound " << args.bound << "\n";
            return bound_exceeded;
        }
        entries = run_campaign(args.seed, args.count, args.shape, options, args.jobs);
    }

    // Tally per check name, keeping first-seen order.
    std::vector<std::string>                                  order;
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
    bool                                                      all = true;
    for (const auto& entry : entries) {
        all = all && entry.report.passed();
        for (const auto& c : entry.report.checks) {
            if (tally.find(c.name) == tally.end()) {
                order.push_back(c.name);
            }
            auto& [pass, total] = tally[c.name];
            pass += c.passed ? 1 : 0;
            ++total;
        }
    }

    if (args.json) {
        nlohmann::json doc;
        doc["passed"]    = all;
        doc["instances"] = entries.size();
        auto& summary = doc["summary"] = nlohmann::json::object();
        for (const auto& name : order) {
            summary[name] = {{"passed", tally[name].first}, {"total", tally[name].second}};
        }
        auto& failures = doc["failures"] = nlohmann::json::array();
        for (const auto& entry : entries) {
            if (!entry.report.passed()) {
                failures.push_back({{"index", entry.index}, {"checks", to_json(entry.report)}});
            }
        }
        std::cout << doc.dump(2) << "\n";
        return all ? ok : check_failed;
    }

    for (const auto& name : order) {
        auto [pass, total] = tally[name];
        std::cout << (pass == total ? "PASS " : "FAIL ") << name << " " << pass << "/" << total << "\n";
    }
    if (!args.quiet) {
        for (const auto& entry : entries) {
            for (const auto& c : entry.report.checks) {
                if (!c.passed) {
                    std::cout << "  instance " << entry.index << " " << c.name << ": " << c.detail << "\n";
                }
            }
        }
    }
    return all ? ok : check_failed;
}

int cmd_stats(const std::string& input, const std::string& ordering_name) {
    auto problem  = load(input);
    auto strategy = orderings.at(ordering_name);
    auto skeleton = dependency_skeleton(problem);
    auto elim     = eliminate(skeleton.graph, make_ordering(skeleton.graph, strategy));
    auto counts   = expected_rule_counts(problem, elim);
    std::cout << "atoms " << problem.atom_count() << "\n"
              << "actions " << problem.action_count() << "\n"
              << "dependency_arcs " << skeleton.dep_pairs.size() << "\n"
              << "fill_in " << elim.fill_in.size() << "\n"
              << "two_cycles " << elim.two_cycle_pairs.size() << "\n"
              << "width " << elim.width << "\n"
              << "rules_p " << counts.p << "\n"
              << "rules_acyc " << counts.acyc << "\n"
              << "rules_pc " << counts.pc << "\n"
              << "rules_pd " << counts.pd << "\n";
    return ok;
}

template <typename Map>
auto keys_of(const Map& map) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : map) {
        keys.push_back(k);
    }
    return keys;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Delete relaxation to logic program compiler"};
    app.require_subcommand(1);

    EncodeArgs encode_args;
    auto*      encode_cmd = app.add_subcommand("encode", "Emit one of the encodings");
    encode_cmd->add_option("input", encode_args.input, "Problem file, - for stdin")->required();
    encode_cmd->add_option("-e,--encoding", encode_args.encoding)->check(CLI::IsMember(keys_of(encodings)));
    encode_cmd->add_option("-f,--format", encode_args.format)->check(CLI::IsMember({"text", "smodels"}));
    encode_cmd->add_option("--ordering", encode_args.ordering)->check(CLI::IsMember(keys_of(orderings)));
    encode_cmd->add_option("-o,--output", encode_args.output, "Output file (default stdout)");
    encode_cmd->add_option("--map", encode_args.map, "Write the symbol table here");
    encode_cmd->add_option("--solver", encode_args.solver,
                           "Solver command to run on the encoding (default $RELAXASP_SOLVER)");

    std::string hplus_input;
    bool        hplus_plan = false, hplus_json = false;
    std::size_t hplus_bound = 16;
    auto*       hplus_cmd   = app.add_subcommand("hplus", "Optimal relaxed plan cost by exhaustive search");
    hplus_cmd->add_option("input", hplus_input)->required();
    hplus_cmd->add_flag("--plan", hplus_plan, "Also print an optimal relaxed plan");
    hplus_cmd->add_option("--bound", hplus_bound, "Largest action count searched");
    hplus_cmd->add_flag("--json", hplus_json);

    CheckArgs check_args;
    auto*     check_cmd = app.add_subcommand("check-model", "Check a model file against an encoding");
    check_cmd->add_option("input", check_args.input)->required();
    check_cmd->add_option("-e,--encoding", check_args.encoding)->check(CLI::IsMember(keys_of(encodings)));
    check_cmd->add_option("-s,--semantics", check_args.semantics, "Default: the encoding's own semantics")
        ->check(CLI::IsMember(keys_of(semantics_names)));
    check_cmd->add_option("--ordering", check_args.ordering)->check(CLI::IsMember(keys_of(orderings)));
    check_cmd->add_option("-m,--model", check_args.model, "Whitespace separated atom names")->required();

    VerifyArgs verify_args;
    auto*      verify_cmd = app.add_subcommand("verify", "Cross-check all encodings against the oracle");
    verify_cmd->add_option("input", verify_args.input, "Problem file; omit for a random campaign");
    verify_cmd->add_option("--seed", verify_args.seed)->capture_default_str();
    verify_cmd->add_option("--count", verify_args.count)->capture_default_str();
    verify_cmd->add_option("--bound", verify_args.bound, "Largest action count searched")->capture_default_str();
    verify_cmd->add_option("-j,--jobs", verify_args.jobs);
    verify_cmd->add_option("--max-atoms", verify_args.shape.max_atoms)->capture_default_str();
    verify_cmd->add_option("--max-actions", verify_args.shape.max_actions)->capture_default_str();
    verify_cmd->add_option("--pre-density", verify_args.shape.pre_density)->capture_default_str();
    verify_cmd->add_option("--add-density", verify_args.shape.add_density)->capture_default_str();
    verify_cmd->add_option("--del-density", verify_args.shape.del_density)->capture_default_str();
    verify_cmd->add_option("--init-density", verify_args.shape.init_density)->capture_default_str();
    verify_cmd->add_option("--goal-density", verify_args.shape.goal_density)->capture_default_str();
    verify_cmd->add_option("--max-cost", verify_args.shape.max_cost)->capture_default_str();
    verify_cmd->add_flag("--json", verify_args.json);
    verify_cmd->add_flag("-q,--quiet", verify_args.quiet, "Only print the per-check tally");

    std::string stats_input, stats_ordering = "min-degree";
    auto*       stats_cmd = app.add_subcommand("stats", "Dependency graph and elimination statistics");
    stats_cmd->add_option("input", stats_input)->required();
    stats_cmd->add_option("--ordering", stats_ordering)->check(CLI::IsMember(keys_of(orderings)));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : invalid_input;
    }

    try {
        if (*encode_cmd) return cmd_encode(encode_args);
        if (*hplus_cmd) return cmd_hplus(hplus_input, hplus_plan, hplus_bound, hplus_json);
        if (*check_cmd) return cmd_check_model(check_args);
        if (*verify_cmd) return cmd_verify(verify_args);
        if (*stats_cmd) return cmd_stats(stats_input, stats_ordering);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_error;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const TooManyActions& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bound_exceeded;
    } catch (const SolverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid_input;
    }
    return ok;
}
