#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grouplang/batch.hpp"
#include "grouplang/stallings.hpp"

using namespace grouplang::stallings;

namespace {

FreeWord W(std::string_view s) { return FreeWord::parse(s); }

SegmentGraph loop_graph(std::string_view label) { return bouquet({W(label)}); }

} // namespace

TEST_CASE("free words parse, print, reduce") {
    CHECK(W("abA").str() == "abA");
    CHECK(W("x1 x2 X1").str() == "abA");
    CHECK(W("abA").cyclically_reduced().str() == "b");
    CHECK(W("aAb").freely_reduced().str() == "b");
    CHECK(W("ab").inverse().str() == "BA");
    CHECK((W("ab") * W("BA")).empty());
    CHECK_FALSE(W("aA").reduced());
    CHECK(W("ab").reduced());
    CHECK_THROWS_AS(W("a1b"), std::invalid_argument);
}

TEST_CASE("bouquet builds one loop per word") {
    auto g = bouquet({W("ab"), W("a"), W("abA")});
    CHECK(g.num_vertices == 1);
    CHECK(g.edges.size() == 3);
    CHECK(g.total_label_letters() == 6);
    CHECK(g.rank() == 3);
    CHECK_THROWS_AS(bouquet({FreeWord{}}), std::domain_error);
    CHECK_THROWS_AS(bouquet({W("aA")}), std::invalid_argument);
}

TEST_CASE("fold case I merges identical labels") {
    auto g = bouquet({W("ab"), W("ab")});
    auto folded = fold_once(g);
    REQUIRE(folded.has_value());
    CHECK(folded->edges.size() == 1);
    CHECK(folded->edges[0].label.str() == "ab");
    CHECK(folded->num_vertices == 1);
    CHECK(folded->rank() == 1); // a dependent loop vanished
}

TEST_CASE("fold case II splits off the longer label's tail") {
    auto g = bouquet({W("a"), W("ab")});
    auto folded = fold_once(g);
    REQUIRE(folded.has_value());
    // <a, ab> = <a, b>: after one fold the b-tail becomes its own loop.
    CHECK(folded->edges.size() == 2);
    auto done = normalize(*folded);
    CHECK(is_elementary_wedge(done, {1, 2}));
}

TEST_CASE("fold case III introduces a branching vertex") {
    SegmentGraph g;
    g.num_vertices = 3;
    g.edges = {{0, 1, W("ab")}, {0, 2, W("ac")}};
    auto folded = fold_once(g);
    REQUIRE(folded.has_value());
    CHECK(folded->num_vertices == 4);
    CHECK(folded->edges.size() == 3);
    // One segment "a", then branches "b" and "c".
    std::multiset<std::string> labels;
    for (const auto& e : folded->edges) labels.insert(e.label.str());
    CHECK(labels == std::multiset<std::string>{"a", "b", "c"});
    CHECK(folded->total_label_letters() == 3);
}

TEST_CASE("folding a loop against itself strips the conjugator") {
    auto g = loop_graph("abA");
    auto folded = fold_once(g);
    REQUIRE(folded.has_value());
    CHECK(folded->num_vertices == 2);
    CHECK(folded->edges.size() == 2);
    auto done = normalize(*folded);
    CHECK(done.num_vertices == 1);
    REQUIRE(done.edges.size() == 1);
    CHECK(done.edges[0].label.str() == "b");
}

TEST_CASE("already folded graphs report no fold") {
    CHECK_FALSE(fold_once(loop_graph("ab")).has_value());
    CHECK_FALSE(fold_once(bouquet({W("a"), W("b")})).has_value());
    CHECK_FALSE(fold_once(bouquet({W("ab"), W("ba")})).has_value());
}

TEST_CASE("prune removes hanging segments") {
    SegmentGraph g;
    g.num_vertices = 2;
    g.edges = {{0, 0, W("ab")}, {0, 1, W("c")}};
    auto pruned = prune(g);
    CHECK(pruned.num_vertices == 1);
    CHECK(pruned.edges.size() == 1);
    CHECK(pruned.edges[0].label.str() == "ab");
}

TEST_CASE("merge concatenates across degree-two vertices") {
    SegmentGraph g;
    g.num_vertices = 3;
    g.edges = {{0, 1, W("a")}, {1, 2, W("b")}};
    // Vertex 1 has degree 2; vertices 0 and 2 have degree 1 but merge alone
    // must not touch them.
    std::size_t merged = 0;
    auto m = merge(g, &merged);
    CHECK(merged == 1);
    REQUIRE(m.edges.size() == 1);
    CHECK(m.edges[0].label.str() == "ab");
    CHECK(m.num_vertices == 2);
}

TEST_CASE("a lone loop at a degree-two vertex stays untouched") {
    auto g = loop_graph("ab");
    std::size_t merged = 0;
    auto m = merge(g, &merged);
    CHECK(merged == 0);
    CHECK(m.edges.size() == 1);
}

TEST_CASE("normalize produces the folded topological core") {
    auto one = normalize(bouquet({W("a"), W("a")}));
    REQUIRE(one.edges.size() == 1);
    CHECK(one.edges[0].label.str() == "a");

    auto untouched = normalize(bouquet({W("ab"), W("ba")}));
    CHECK(untouched.num_vertices == 1);
    CHECK(untouched.edges.size() == 2);

    auto single = normalize(loop_graph("a"));
    CHECK(single.edges.size() == 1);

    auto conj = normalize(loop_graph("abbA"));
    REQUIRE(conj.edges.size() == 1);
    CHECK(conj.edges[0].label.str() == "bb");

    for (const char* label : {"ab", "abAB", "aabb"}) {
        auto g = normalize(loop_graph(label));
        CHECK(g.folded());
        CHECK(g.topological());
    }
}

TEST_CASE("pinching a vertex into an edge splits it in place") {
    auto g = loop_graph("abab");
    PinchMove move{PinchMove::Kind::VertexEdge, 0, 0, 0, 2, 0, 0};
    auto pinched = apply_pinch(g, move);
    CHECK(pinched.num_vertices == 1);
    REQUIRE(pinched.edges.size() == 2);
    CHECK(pinched.edges[0].label.str() == "ab");
    CHECK(pinched.edges[1].label.str() == "ab");
    CHECK(pinched.total_label_letters() == g.total_label_letters());
}

TEST_CASE("pinching two vertices identifies them") {
    SegmentGraph g;
    g.num_vertices = 2;
    g.edges = {{0, 1, W("a")}};
    auto pinched = apply_pinch(g, {PinchMove::Kind::VertexVertex, 0, 1, 0, 0, 0, 0});
    CHECK(pinched.num_vertices == 1);
    CHECK(pinched.edges[0].from == pinched.edges[0].to);
}

TEST_CASE("pinching two edge interiors creates a degree-four vertex") {
    SegmentGraph g;
    g.num_vertices = 1;
    g.edges = {{0, 0, W("ab")}, {0, 0, W("cd")}};
    auto pinched = apply_pinch(g, {PinchMove::Kind::EdgeEdge, 0, 0, 0, 1, 1, 1});
    CHECK(pinched.num_vertices == 2);
    CHECK(pinched.edges.size() == 4);
    CHECK(pinched.degree(1) == 4);
    CHECK(pinched.total_label_letters() == 4);
}

TEST_CASE("pinching one edge at two interior positions makes a middle loop") {
    auto g = loop_graph("abcd");
    auto pinched = apply_pinch(g, {PinchMove::Kind::EdgeEdge, 0, 0, 0, 1, 0, 3});
    CHECK(pinched.num_vertices == 2);
    REQUIRE(pinched.edges.size() == 3);
    std::multiset<std::string> labels;
    for (const auto& e : pinched.edges) labels.insert(e.label.str());
    CHECK(labels == std::multiset<std::string>{"a", "bc", "d"});
    CHECK(pinched.total_label_letters() == 4);
}

TEST_CASE("pinch positions must be interior") {
    auto g = loop_graph("abab");
    CHECK_THROWS_AS(apply_pinch(g, {PinchMove::Kind::VertexEdge, 0, 0, 0, 0, 0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_pinch(g, {PinchMove::Kind::VertexEdge, 0, 0, 0, 4, 0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_pinch(g, {PinchMove::Kind::VertexVertex, 0, 0, 0, 0, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("pinch enumeration counts") {
    CHECK(enumerate_pinches(loop_graph("a")).empty());
    CHECK(enumerate_pinches(loop_graph("ab")).size() == 1);
    SegmentGraph segment;
    segment.num_vertices = 2;
    segment.edges = {{0, 1, W("a")}};
    CHECK(enumerate_pinches(segment).size() == 1);
    // Loop of length 3: 2 vertex-edge splits plus C(2,2)=1 same-edge pinch.
    CHECK(enumerate_pinches(loop_graph("abc")).size() == 3);
    CHECK(enumerate_pinches(loop_graph("abc"), false).size() == 2);
}

TEST_CASE("pinches raise the rank by one, normalization never raises it") {
    std::mt19937 rng(21);
    const std::vector<std::vector<std::string>> seeds = {
        {"abab"}, {"abAB"}, {"ab", "ba"}, {"aabb"}, {"abc"}, {"abcBC"}};
    for (const auto& seed : seeds) {
        std::vector<FreeWord> words;
        for (const auto& s : seed) words.push_back(W(s));
        SegmentGraph g = normalize(bouquet(words));
        for (int round = 0; round < 2; ++round) {
            const auto moves = enumerate_pinches(g);
            if (moves.empty()) break;
            const auto& move =
                moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
            const SegmentGraph pinched = apply_pinch(g, move);
            CHECK(pinched.rank() == g.rank() + 1);
            CHECK(pinched.total_label_letters() == g.total_label_letters());
            const SegmentGraph next = normalize(pinched);
            CHECK(next.rank() <= pinched.rank());
            CHECK(next.total_label_letters() <= pinched.total_label_letters());
            CHECK(next.connected());
            g = next;
        }
    }
}

TEST_CASE("elementary wedge recognition") {
    CHECK(is_elementary_wedge(bouquet({W("a"), W("b")}), {1, 2}));
    CHECK(is_elementary_wedge(bouquet({W("A"), W("b")}), {1, 2})); // up to inversion
    CHECK_FALSE(is_elementary_wedge(loop_graph("ab"), {1, 2}));
    CHECK_FALSE(is_elementary_wedge(bouquet({W("a")}), {1, 2}));
    CHECK_FALSE(is_elementary_wedge(bouquet({W("a"), W("a")}), {1, 2}));
}

TEST_CASE("primitive-set recognition on the published examples") {
    CHECK(is_primitive_set({W("a"), W("b")}, 2));
    CHECK(is_primitive_set({W("abA")}, 2));
    CHECK_FALSE(is_primitive_set({W("abAB")}, 2));
    CHECK_FALSE(is_primitive_set({W("aa")}, 2));
    CHECK(is_primitive_set({W("a")}, 5));
    CHECK_FALSE(is_primitive_set({W("a"), W("b"), W("ab")}, 2)); // n > k
    CHECK_FALSE(is_primitive_set({W("a"), W("a")}, 2));
    CHECK(is_primitive_set({W("ab"), W("b")}, 2));
    CHECK_THROWS_AS(is_primitive_set({FreeWord{}}, 2), std::domain_error);
    CHECK_THROWS_AS(is_primitive_set({W("aA")}, 2), std::invalid_argument);
}

TEST_CASE("recognition is conjugation invariant") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::vector<std::string> pool = {"a", "ab", "abb", "aab", "abAB", "aa", "bab"};
        const FreeWord w = W(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
        std::vector<int> conj;
        for (int i = std::uniform_int_distribution<int>(1, 3)(rng); i-- > 0;)
            conj.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : 2);
        const FreeWord c = FreeWord(conj);
        const FreeWord conjugated = (c * w * c.inverse()).freely_reduced();
        if (conjugated.empty()) continue;
        CHECK(is_primitive_set({w}, 2) == is_primitive_set({conjugated}, 2));
    }
}

TEST_CASE("whitehead oracle on fixed and randomized inputs") {
    CHECK(whitehead_primitive(W("a"), 2));
    CHECK_FALSE(whitehead_primitive(W("aa"), 2));
    CHECK_FALSE(whitehead_primitive(W("abAB"), 2));
    CHECK(whitehead_primitive(W("ab"), 2));
    CHECK(whitehead_primitive(W("abb"), 2));

    // Images of a generator under random Nielsen moves stay primitive.
    std::mt19937 rng(9);
    struct Move {
        std::vector<FreeWord> image;
    };
    const std::vector<Move> moves = {
        {{W("ab"), W("b")}},  // a -> ab
        {{W("ba"), W("b")}},  // a -> ba
        {{W("a"), W("ba")}},  // b -> ba
        {{W("a"), W("ab")}},  // b -> ab
        {{W("A"), W("b")}},   // invert a
        {{W("b"), W("a")}},   // swap
    };
    for (int trial = 0; trial < 60; ++trial) {
        FreeWord w = W("a");
        for (int step = 0; step < 4; ++step) {
            const auto& m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
            FreeWord next;
            for (int l : w.letters()) {
                const auto& img = m.image[static_cast<std::size_t>(std::abs(l) - 1)];
                next = next * (l > 0 ? img : img.inverse());
            }
            w = next;
        }
        if (w.empty()) continue;
        CHECK(whitehead_primitive(w, 2));
    }
}

TEST_CASE("commutator criterion for bases of F2") {
    CHECK(is_basis_f2(W("a"), W("b")));
    CHECK(is_basis_f2(W("a"), W("ba")));
    CHECK(is_basis_f2(W("b"), W("a")));
    CHECK_FALSE(is_basis_f2(W("a"), W("A")));
    CHECK_FALSE(is_basis_f2(W("a"), W("a")));
    CHECK_FALSE(is_basis_f2(W("ab"), W("ba")));
    CHECK_FALSE(is_basis_f2(W("aa"), W("b")));
}

TEST_CASE("abelianization minor gcd") {
    CHECK(abelianization_minor_gcd({W("a")}, 2) == 1);
    CHECK(abelianization_minor_gcd({W("aa")}, 2) == 2);
    CHECK(abelianization_minor_gcd({W("ab"), W("Ab")}, 2) == 2);
    CHECK(abelianization_minor_gcd({W("abAB")}, 2) == 0);
    CHECK(abelianization_minor_gcd({W("a"), W("b")}, 3) == 1);
    CHECK_THROWS_AS(abelianization_minor_gcd({W("a"), W("b"), W("c")}, 2),
                    std::invalid_argument);
}

TEST_CASE("recognizer agrees with the oracles at unit scale") {
    auto single = grouplang::batch::primitive_agreement(4, 2, false);
    CHECK(single.whitehead_mismatches == 0);
    CHECK(single.gcd_violations == 0);
    CHECK(single.invariants.clean());

    auto pairs = grouplang::batch::basis_pair_agreement(3, false);
    CHECK(pairs.mismatches == 0);
    CHECK(pairs.invariants.clean());
}

TEST_CASE("search invariants hold along a recognizer run") {
    SearchInvariantStats stats;
    PrimitiveSearchOptions opt;
    opt.invariants = &stats;
    CHECK(is_primitive_set({W("abA")}, 2, opt));
    CHECK_FALSE(is_primitive_set({W("abAB")}, 2, opt));
    CHECK(stats.normalizations > 0);
    CHECK(stats.clean());
}

TEST_CASE("successful searches can report their move sequence") {
    PrimitiveSearchOptions opt;
    std::vector<std::string> trace;
    opt.trace = &trace;
    REQUIRE(is_primitive_set({W("ab")}, 2, opt));
    REQUIRE_FALSE(trace.empty());
    CHECK(trace.front().rfind("start from", 0) == 0);
}
