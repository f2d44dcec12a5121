#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <queue>
#include <random>
#include <set>

#include "grouplang/catalog.hpp"
#include "grouplang/grigorchuk.hpp"

using namespace grouplang;
using namespace grouplang::grig;

namespace {

// Brute-force normal form: apply every applicable identity rewrite until no
// rule applies, exploring all orders. Confluence means every terminal word of
// this search is the same.
std::set<std::string> rewrite_closure_normal_forms(const std::string& start) {
    auto rewrites = [](const std::string& w) {
        std::vector<std::string> out;
        auto k4 = [](char c) { return c == 'b' || c == 'c' || c == 'd'; };
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] == w[i + 1]) out.push_back(w.substr(0, i) + w.substr(i + 2));
            else if (k4(w[i]) && k4(w[i + 1])) {
                const char prod = static_cast<char>('b' + 'c' + 'd' - w[i] - w[i + 1]);
                out.push_back(w.substr(0, i) + prod + w.substr(i + 2));
            }
        }
        return out;
    };
    std::set<std::string> seen{start}, terminal;
    std::queue<std::string> work;
    work.push(start);
    while (!work.empty()) {
        const std::string w = work.front();
        work.pop();
        auto nexts = rewrites(w);
        if (nexts.empty()) {
            terminal.insert(w);
            continue;
        }
        for (auto& n : nexts)
            if (seen.insert(n).second) work.push(n);
    }
    return terminal;
}

void for_each_word(int max_len, const std::function<void(const std::string&)>& fn) {
    std::string w;
    auto walk = [&](auto&& self) -> void {
        fn(w);
        if (static_cast<int>(w.size()) >= max_len) return;
        for (char c : {'a', 'b', 'c', 'd'}) {
            w.push_back(c);
            self(self);
            w.pop_back();
        }
    };
    walk(walk);
}

std::string random_word(std::mt19937& rng, int len) {
    static const char letters[] = {'a', 'b', 'c', 'd'};
    std::string w;
    for (int i = 0; i < len; ++i)
        w += letters[std::uniform_int_distribution<int>(0, 3)(rng)];
    return w;
}

} // namespace

TEST_CASE("reduction follows the group identities") {
    CHECK(reduce("bc") == "d");
    CHECK(reduce("") == "");
    CHECK(reduce("abbab") == "b");
    CHECK(reduce("bcddacbabcaa") == "dadad");
    CHECK_THROWS_AS(reduce("abe"), std::invalid_argument);
}

TEST_CASE("reduction computes the unique rewrite normal form") {
    for_each_word(5, [](const std::string& w) {
        const auto terminals = rewrite_closure_normal_forms(w);
        REQUIRE(terminals.size() == 1);
        CHECK(*terminals.begin() == reduce(w));
    });
}

TEST_CASE("reduced words avoid the forbidden factors and reduce is idempotent") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const std::string w = random_word(rng, std::uniform_int_distribution<int>(0, 16)(rng));
        const std::string r = reduce(w);
        CHECK(is_reduced(r));
        CHECK(reduce(r) == r);
        // Parity of the a-count is preserved.
        CHECK(std::count(w.begin(), w.end(), 'a') % 2 ==
              std::count(r.begin(), r.end(), 'a') % 2);
    }
}

TEST_CASE("reduction preserves the group element (tree-action check)") {
    for_each_word(6, [](const std::string& w) {
        const std::string r = reduce(w);
        if (r == w) return;
        for (int depth : {4, 6, 8})
            CHECK(tree_action(w, depth) == tree_action(r, depth));
    });
}

TEST_CASE("level-one stabilizer membership is the parity of a") {
    CHECK(in_g1("b"));
    CHECK_FALSE(in_g1("a"));
    CHECK(in_g1("abab"));
    CHECK(in_g1(""));
}

TEST_CASE("the halving maps act syllable-wise") {
    // Raw images, before any re-reduction.
    CHECK(phi("dadad") == std::pair<std::string, std::string>{"b", "bb"});
    CHECK(phi("d") == std::pair<std::string, std::string>{"", "b"});
    CHECK(phi("abab") == std::pair<std::string, std::string>{"ca", "ac"});
    CHECK(phi("b") == std::pair<std::string, std::string>{"a", "c"});
    CHECK_THROWS_AS(phi("a"), std::domain_error);   // odd a-count
    CHECK_THROWS_AS(phi("bb"), std::domain_error);  // not reduced
}

TEST_CASE("halves are homomorphisms, certified by the tree action") {
    std::mt19937 rng(17);
    int tested = 0;
    while (tested < 60) {
        const std::string u = reduce(random_word(rng, 8));
        const std::string v = reduce(random_word(rng, 8));
        if (!in_g1(u) || !in_g1(v)) continue;
        ++tested;
        const std::string uv = reduce(u + v);
        auto [ul, ur] = phi(u);
        auto [vl, vr] = phi(v);
        auto [uvl, uvr] = phi(uv);
        CHECK(tree_action(uvl, 8) == tree_action(ul + vl, 8));
        CHECK(tree_action(uvr, 8) == tree_action(ur + vr, 8));
    }
}

TEST_CASE("the halving maps contract reduced words") {
    CHECK(contraction_check("dadad"));
    CHECK_THROWS_AS(contraction_check("bb"), std::domain_error);
    std::mt19937 rng(23);
    int tested = 0;
    while (tested < 200) {
        const std::string w = reduce(random_word(rng, 20));
        if (!in_g1(w) || w.size() <= 1) continue;
        ++tested;
        CHECK(contraction_check(w));
    }
}

TEST_CASE("word problem on the published examples") {
    CHECK(is_trivial(""));
    CHECK(is_trivial("dadadada"));
    CHECK_FALSE(is_trivial("bcddacbabcaa"));
    CHECK_FALSE(is_trivial("a"));
    CHECK_FALSE(is_trivial("b"));
    CHECK(is_trivial("bb"));
    CHECK(is_trivial("bcd"));
}

TEST_CASE("tree action of the generators") {
    auto a1 = tree_action("a", 1);
    CHECK(a1.leaf_map == std::vector<std::uint32_t>{1, 0});
    auto id = tree_action("", 5);
    CHECK(id.is_identity());
    // b = (a, c) and c acts trivially at depth 1, so at depth 2 only the left
    // subtree swaps.
    auto b2 = tree_action("b", 2);
    CHECK(b2.leaf_map == std::vector<std::uint32_t>{1, 0, 2, 3});
    CHECK(tree_action("dadadada", 10).is_identity());
    // Involutions: every generator squares to the identity.
    for (const std::string g : {"a", "b", "c", "d"})
        CHECK(tree_action(g + g, 8).is_identity());
}

TEST_CASE("word problem agrees with the tree action on short words") {
    for_each_word(6, [](const std::string& w) {
        const int depth = static_cast<int>(w.size()) + 2;
        CHECK(is_trivial(w) == tree_action(w, depth).is_identity());
    });
}

TEST_CASE("witnesses for the published derivations") {
    auto wa = derive_witness("a");
    CHECK(wa.control_word() == "s s");
    auto wb = derive_witness("b");
    CHECK(wb.control_word() == "s s h_L t");

    auto big = derive_witness("bcddacbabcaa");
    CHECK(bool(catalog::grigorchuk_coword_system().verify(big)));
    bool passes_through_dadad = false;
    for (const auto& [table, form] : big.steps)
        if (form == "dadad") passes_through_dadad = true;
    CHECK(passes_through_dadad);
}

TEST_CASE("witness construction refuses trivial words") {
    CHECK_THROWS_AS(derive_witness(""), std::domain_error);
    CHECK_THROWS_AS(derive_witness("dadadada"), std::domain_error);
    CHECK_THROWS_AS(derive_witness("bb"), std::domain_error);
}

TEST_CASE("witnesses verify for every nontrivial word up to length 5") {
    const auto grammar = catalog::grigorchuk_coword_system();
    for_each_word(5, [&](const std::string& w) {
        if (is_trivial(w)) return;
        auto witness = derive_witness(w);
        CHECK(bool(grammar.verify(witness)));
        CHECK(witness.final_word == w);
    });
}

TEST_CASE("language equivalence report at desk scale") {
    auto tiny = coword_language_equivalence(2);
    CHECK(tiny.total == 21); // empty word plus the 20 words of length 1..2
    CHECK(tiny.failures == 0);

    auto rep = coword_language_equivalence(4);
    CHECK(rep.total == 341);
    CHECK(rep.trivial + rep.nontrivial == rep.total);
    CHECK(rep.witnesses_verified == rep.nontrivial);
    CHECK(rep.failures == 0);
}
