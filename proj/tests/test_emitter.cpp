#include "fixtures.hpp"

#include <relaxasp/emitter.hpp>
#include <relaxasp/encoders.hpp>
#include <relaxasp/verify.hpp>

#include <catch_amalgamated.hpp>

#include <set>

using namespace relaxasp;

namespace {

LogicProgram program_of(const char* text, Encoding encoding) { return encode(fixtures::relaxed(text), encoding); }

std::string ext(bool text) { return text ? ".lp" : ".sm"; }

} // namespace

TEST_CASE("basic and choice rule lines") {
    auto negated = make_plain_program({{RuleKind::normal, "a", {}, {"b"}}});
    auto out     = emit_smodels(negated);
    CHECK(out.numeric == "1 1 1 1 2\n0\n1 a\n2 b\n0\nB+\n0\nB-\n0\n1\n");
    CHECK(out.symbols.format() == "1 a\n2 b\n");

    auto choice = make_plain_program({{RuleKind::choice, "a", {}, {}}});
    CHECK(emit_smodels(choice).numeric.starts_with("3 1 1 0 0\n0\n"));
}

TEST_CASE("text emission") {
    auto p = program_of(fixtures::ex1, Encoding::p);
    CHECK(emit_text(p) ==
          "p :- not p.\n{a} :- p.\nq :- a.\n{b} :- q.\np :- b.\n#minimize { 1,a : a; 1,b : b }.\n");
    CHECK(emit_text(make_plain_program({})).empty());
    CHECK(emit_smodels(make_plain_program({})).numeric == "0\n0\nB+\n0\nB-\n0\n1\n");
}

TEST_CASE("golden files") {
    struct Case {
        const char* name;
        const char* text;
    };
    for (auto [name, text] : {Case{"ex1", fixtures::ex1}, Case{"chain", fixtures::chain}}) {
        for (auto encoding : {Encoding::p, Encoding::acyc, Encoding::pc, Encoding::pd}) {
            auto program = program_of(text, encoding);
            auto stem    = std::string(name) + "_" + std::string(to_string(encoding));
            INFO(stem);
            CHECK(emit_text(program) == fixtures::golden(stem + ".lp"));
            CHECK(emit_smodels(program).numeric == fixtures::golden(stem + ".sm"));
            CHECK(symbol_table(program).format() == fixtures::golden(stem + ".sym"));
        }
    }
}

TEST_CASE("readers reject malformed input") {
    CHECK_THROWS_AS(parse_text_program("p :- q"), ProgramFormatError);
    CHECK_THROWS_AS(parse_text_program("{p :- q."), ProgramFormatError);
    CHECK_THROWS_AS(parse_smodels("1 1 1 1\n0\n"), ProgramFormatError);
    CHECK_THROWS_AS(parse_smodels("1 1 0 0\n0\n1 a\n0\nB+\n1\n0\nB-\n0\n1\n"), ProgramFormatError);
    CHECK_THROWS_AS(parse_smodels("9 1\n0\n"), ProgramFormatError);
}

TEST_CASE("readers recover atom kinds") {
    auto pc   = program_of(fixtures::ex1, Encoding::pc);
    auto back = parse_smodels(emit_smodels(pc).numeric);
    CHECK(back.find("a").has_value());
    CHECK(back.key(*back.find("a")).kind == AtomKind::action);
    CHECK(back.key(*back.find("p")).kind == AtomKind::state);
    CHECK(back.key(*back.find("ws(a,q)")).kind == AtomKind::well_support);
    CHECK(back.key(*back.find("dep(p,q)")).kind == AtomKind::dependency);
    CHECK(back.key(*back.find("__f")).kind == AtomKind::sentinel);
}

TEST_CASE("round trips on random problems") {
    InstanceShape shape;
    for (std::size_t i = 0; i < 60; ++i) {
        auto problem = relax(random_problem(23, i, shape));
        for (auto encoding : {Encoding::p, Encoding::acyc, Encoding::pc, Encoding::pd}) {
            auto program = encode(problem, encoding);
            INFO("instance " << i << " " << to_string(encoding));
            auto text     = emit_text(program);
            auto smodels  = emit_smodels(program);
            auto from_txt = parse_text_program(text);
            auto from_sm  = parse_smodels(smodels.numeric);
            CHECK(fingerprint(from_txt) == fingerprint(program));
            CHECK(fingerprint(from_sm) == fingerprint(program));
            CHECK(emit_text(from_txt) == text);
            CHECK(emit_smodels(from_sm).numeric == smodels.numeric);

            // Every atom of a rule is in the table exactly once.
            std::set<std::string> names;
            for (const auto& [num, name] : smodels.symbols.entries) {
                CHECK(names.insert(name).second);
            }
            for (auto atom : program.signature()) {
                CHECK(names.count(program.name(atom)) == 1);
            }
        }
    }
}
