#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grouplang/catalog.hpp"
#include "grouplang/grammar_io.hpp"

using namespace grouplang;

TEST_CASE("builtins round-trip through the file format") {
    for (const auto& name : catalog::builtin_names()) {
        auto sys = catalog::builtin(name);
        REQUIRE(sys.has_value());
        CAPTURE(name);
        LSystem back = parse_grammar(print_grammar(*sys));
        CHECK(back == *sys);
        // And printing is stable once more around.
        CHECK(print_grammar(back) == print_grammar(*sys));
    }
}

TEST_CASE("duplicate rule lines accumulate alternatives") {
    const char* text =
        "alphabet: a b\n"
        "terminals: a b\n"
        "axiom: a\n"
        "table t:\n"
        "  a -> b\n"
        "  a -> a b\n"
        "  a -> b\n"
        "control: t*\n";
    auto sys = parse_grammar(text);
    const Table* t = sys.find_table("t");
    REQUIRE(t != nullptr);
    CHECK_FALSE(t->deterministic());
    // The exact duplicate collapses; two distinct alternatives remain.
    CHECK(t->alternatives[sys.alphabet().id("a")].size() == 2);
}

TEST_CASE("tilde denotes the empty replacement and empty axioms are allowed") {
    const char* text =
        "alphabet: a\n"
        "terminals: a\n"
        "axiom:\n"
        "axiom: a\n"
        "table kill:\n"
        "  a -> ~\n"
        "control: kill*\n";
    auto sys = parse_grammar(text);
    CHECK(sys.axioms().size() == 2);
    CHECK(sys.axioms()[0].empty());
    auto res = sys.enumerate(3);
    REQUIRE(res.exhaustive);
    CHECK(res.words == std::set<std::string>{"", "a"});
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_error_at = [](const char* text, std::size_t line) {
        try {
            parse_grammar(text);
            FAIL_CHECK("expected a parse error");
        } catch (const GrammarParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_error_at("alphabet: a\nterminals: a\n junk line\ncontrol:\n", 3);
    expect_error_at("alphabet: a\nterminals: a\ntable t:\n  a = b\ncontrol:\n", 4);
    expect_error_at("alphabet: a\nnonsense: a\n", 2);
    expect_error_at("alphabet: a\nterminals: a\ncontrol: (t\n", 3);
}

TEST_CASE("structural problems surface as parse errors") {
    CHECK_THROWS_AS(parse_grammar("alphabet: a\nterminals: b\ncontrol:\n"), GrammarParseError);
    CHECK_THROWS_AS(parse_grammar("alphabet: a\nterminals: a\n"), GrammarParseError);
    CHECK_THROWS_AS(parse_grammar("terminals: a\ncontrol:\n"), GrammarParseError);
    CHECK_THROWS_AS(
        parse_grammar("alphabet: a\nterminals: a\ntable t:\ntable t:\ncontrol: t\n"),
        GrammarParseError);
}

TEST_CASE("rule lines must be indented under a table") {
    CHECK_THROWS_AS(parse_grammar("alphabet: a\nterminals: a\n  a -> a\ncontrol:\n"),
                    GrammarParseError);
}

TEST_CASE("parsed grammars behave like their constructors") {
    auto ig = catalog::intermediate_growth_system();
    auto parsed = parse_grammar(print_grammar(ig));
    CHECK(parsed.enumerate(6).words == ig.enumerate(6).words);
}
