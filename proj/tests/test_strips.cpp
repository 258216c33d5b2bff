#include "fixtures.hpp"

#include <relaxasp/strips.hpp>
#include <relaxasp/verify.hpp>

#include <catch_amalgamated.hpp>

using namespace relaxasp;

namespace {

std::vector<std::string> names(const StripsProblem& problem, const std::vector<AtomIndex>& atoms) {
    std::vector<std::string> out;
    for (auto p : atoms) {
        out.push_back(problem.atoms[p]);
    }
    return out;
}

ParseErrorKind error_kind(std::string_view text) {
    try {
        (void)parse_problem(text);
    } catch (const ParseError& e) {
        return e.kind();
    }
    FAIL("no parse error for: " << text);
    return ParseErrorKind::syntax;
}

} // namespace

TEST_CASE("parse the two-action cyclic example") {
    auto problem = parse_problem(fixtures::ex1);
    REQUIRE(problem.atoms == std::vector<std::string>{"p", "q"});
    REQUIRE(problem.actions.size() == 2);
    CHECK(problem.init.empty());
    CHECK(names(problem, problem.goal) == std::vector<std::string>{"p"});
    CHECK(problem.actions[0].name == "a");
    CHECK(names(problem, problem.actions[0].pre) == std::vector<std::string>{"p"});
    CHECK(names(problem, problem.actions[1].add) == std::vector<std::string>{"p"});
    CHECK(problem.actions[0].cost == 1);
}

TEST_CASE("empty action section") {
    auto problem = parse_problem("atoms: p\ninit:\ngoal:\nactions:\n");
    CHECK(problem.action_count() == 0);
    CHECK(problem.goal.empty());
    CHECK(is_solvable(relax(problem)));
}

TEST_CASE("costs, comments and blank lines") {
    auto problem = parse_problem("# header\n\natoms: p q  # two\ngoal: q\naction x cost 7\n  add: q p q\n");
    REQUIRE(problem.actions.size() == 1);
    CHECK(problem.actions[0].cost == 7);
    CHECK(problem.actions[0].add == std::vector<AtomIndex>{0, 1});
}

TEST_CASE("parse errors carry distinct kinds and positions") {
    SECTION("undeclared atom names the atom") {
        try {
            (void)parse_problem("atoms: p\naction a\n  pre: r\n");
            FAIL("expected an error");
        } catch (const ParseError& e) {
            CHECK(e.kind() == ParseErrorKind::undeclared_atom);
            CHECK(e.line() == 3);
            CHECK(e.column() == 8);
            CHECK(std::string(e.what()).find("'r'") != std::string::npos);
        }
    }
    CHECK(error_kind("atoms: p p\n") == ParseErrorKind::duplicate_atom);
    CHECK(error_kind("atoms: p\naction a\naction a\n") == ParseErrorKind::duplicate_action);
    CHECK(error_kind("atoms: p\naction a cost -2\n") == ParseErrorKind::negative_cost);
    CHECK(error_kind("atoms: p\naction p\n") == ParseErrorKind::name_clash);
    CHECK(error_kind("atoms: __f\n") == ParseErrorKind::name_clash);
    CHECK(error_kind("goal: p\natoms: p\n") == ParseErrorKind::syntax);
    CHECK(error_kind("atoms: p\npre: p\n") == ParseErrorKind::syntax);
    CHECK(error_kind("atoms: p\naction a cost x\n") == ParseErrorKind::syntax);
    CHECK(error_kind("atoms: p(1)\n") == ParseErrorKind::syntax);
    CHECK(error_kind("atoms: p\ngoal: p\ngoal: p\n") == ParseErrorKind::syntax);
    CHECK(error_kind("atoms: p\naction a\n  add: p\n  add: p\n") == ParseErrorKind::syntax);
    CHECK(error_kind("") == ParseErrorKind::syntax);
}

TEST_CASE("relax compiles the initial state away") {
    auto relaxed = relax(parse_problem("atoms: p q\ninit: p\ngoal: p q\naction a\n  pre: p\n  add: q\n  del: p\n"));
    CHECK(relaxed.atoms() == std::vector<std::string>{"q"});
    CHECK(relaxed.goal() == std::vector<AtomIndex>{0});
    REQUIRE(relaxed.action_count() == 1);
    CHECK(relaxed.actions()[0].pre.empty());
    CHECK(relaxed.actions()[0].add == std::vector<AtomIndex>{0});
    CHECK(relaxed.actions()[0].del.empty());
    CHECK(relaxed.problem.init.empty());
    CHECK(relaxed.atom_origin == std::vector<std::size_t>{1});
    CHECK(relaxed.action_origin == std::vector<std::size_t>{0});
}

TEST_CASE("relax keeps the example unchanged") {
    auto original = parse_problem(fixtures::ex1);
    auto relaxed  = relax(original);
    CHECK(relaxed.problem == original);
}

TEST_CASE("relax keeps vacuous actions and drops self adds") {
    auto relaxed = relax(parse_problem("atoms: p q\ninit: p\naction a\n  add: p\naction b\n  pre: q\n  add: q\n"));
    // p is added by a, so it stays in X but leaves every list.
    CHECK(relaxed.atoms() == std::vector<std::string>{"p", "q"});
    REQUIRE(relaxed.action_count() == 2);
    CHECK(relaxed.actions()[0].add.empty());
    CHECK(relaxed.actions()[1].pre == std::vector<AtomIndex>{1});
    CHECK(relaxed.actions()[1].add.empty());
}

TEST_CASE("reachability") {
    CHECK(reachable_atoms(fixtures::relaxed(fixtures::ex1)).empty());
    CHECK_FALSE(is_solvable(fixtures::relaxed(fixtures::ex1)));
    CHECK(reachable_atoms(fixtures::relaxed(fixtures::chain)) == std::vector<AtomIndex>{0, 1});
    CHECK(is_solvable(fixtures::relaxed(fixtures::chain)));
    CHECK(reachable_atoms(fixtures::relaxed("atoms: p q\ngoal: p\n")).empty());
    CHECK(is_solvable(fixtures::relaxed("atoms: p\n")));
}

TEST_CASE("properties on random problems") {
    InstanceShape shape;
    for (std::size_t i = 0; i < 300; ++i) {
        auto problem = random_problem(7, i, shape);
        INFO("instance " << i << "\n" << format_problem(problem));

        // Print then parse is the identity.
        CHECK(parse_problem(format_problem(problem)) == problem);

        // Relaxing twice changes nothing more.
        auto once  = relax(problem);
        auto twice = relax(once.problem);
        CHECK(twice.problem == once.problem);
        for (const auto& action : once.actions()) {
            CHECK(action.del.empty());
            for (auto p : action.add) {
                CHECK_FALSE(std::binary_search(action.pre.begin(), action.pre.end(), p));
            }
        }

        // Dropping an action never grows the reachable set.
        if (!once.actions().empty()) {
            auto fewer = once;
            fewer.problem.actions.pop_back();
            fewer.action_origin.pop_back();
            auto all  = reachable_atoms(once);
            auto some = reachable_atoms(fewer);
            CHECK(std::includes(all.begin(), all.end(), some.begin(), some.end()));
        }
    }
}
