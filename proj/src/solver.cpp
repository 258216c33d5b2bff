#include <relaxasp/solver.hpp>

#include <relaxasp/emitter.hpp>

#include <json.hpp>

#include <array>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <unistd.h>

namespace relaxasp {

std::optional<std::string> default_solver() {
    const char* value = std::getenv("RELAXASP_SOLVER");
    if (value == nullptr || *value == '\0') {
        return std::nullopt;
    }
    return std::string(value);
}

std::string solver_flags(Semantics semantics) {
    return semantics == Semantics::stable ? "" : "--supp-models";
}

namespace {

std::filesystem::path scratch_file() {
    static std::atomic<unsigned> counter{0};
    auto name = "relaxasp-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + ".sm";
    return std::filesystem::temp_directory_path() / name;
}

struct FileGuard {
    std::filesystem::path path;
    ~FileGuard() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
};

std::string capture(const std::string& command) {
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(::popen(command.c_str(), "r"), ::pclose);
    if (!pipe) {
        throw SolverError("cannot start solver: " + command);
    }
    std::string           out;
    std::array<char, 4096> buffer{};
    std::size_t           n = 0;
    while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe.get())) > 0) {
        out.append(buffer.data(), n);
    }
    return out;
}

} // namespace

SolverResult run_solver(const std::string& command, const LogicProgram& program, Semantics semantics) {
    FileGuard file{scratch_file()};
    {
        auto          smodels = emit_smodels(program);
        std::ofstream out(file.path);
        out << smodels.numeric;
        if (!out) {
            throw SolverError("cannot write " + file.path.string());
        }
    }
    auto line = command + " " + solver_flags(semantics) + " --outf=2 --opt-mode=opt '" + file.path.string() +
                "' 2>/dev/null";
    auto output = capture(line);

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(output);
    } catch (const nlohmann::json::exception& e) {
        throw SolverError("unreadable solver output from '" + command + "': " + e.what());
    }
    SolverResult result;
    auto         verdict = doc.value("Result", std::string{});
    if (verdict == "UNSATISFIABLE") {
        return result;
    }
    if (verdict != "SATISFIABLE" && verdict != "OPTIMUM FOUND") {
        throw SolverError("solver reported '" + verdict + "'");
    }
    result.satisfiable = true;
    // Without a minimize statement every model is optimal.
    result.optimum     = verdict == "OPTIMUM FOUND" || program.minimize().empty();
    const auto& calls  = doc.at("Call");
    if (calls.empty() || calls.back().at("Witnesses").empty()) {
        throw SolverError("solver reported a model but printed no witness");
    }
    const auto& best = calls.back().at("Witnesses").back();
    for (const auto& atom : best.at("Value")) {
        result.atoms.push_back(atom.get<std::string>());
    }
    if (best.contains("Costs") && !best.at("Costs").empty()) {
        result.cost = best.at("Costs").front().get<Cost>();
    } else if (program.minimize().empty()) {
        result.cost = 0;
    }
    return result;
}

} // namespace relaxasp
