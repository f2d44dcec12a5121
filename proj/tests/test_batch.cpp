#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grouplang/batch.hpp"
#include "grouplang/catalog.hpp"

using namespace grouplang;
using namespace grouplang::batch;

// Every parallel kernel must reproduce its serial reference exactly.

TEST_CASE("word-problem sweep: serial and parallel agree") {
    auto serial = grig_wp_agreement(5, false);
    auto parallel = grig_wp_agreement(5, true);
    CHECK(serial.checked == parallel.checked);
    CHECK(serial.mismatches == parallel.mismatches);
    CHECK(serial.samples == parallel.samples);
    CHECK(serial.checked == 1365); // 1 + 4 + ... + 4^5
    CHECK(serial.mismatches == 0);
}

TEST_CASE("witness sweep: serial and parallel agree") {
    auto serial = grig_witness_sweep(4, false);
    auto parallel = grig_witness_sweep(4, true);
    CHECK(serial.checked == parallel.checked);
    CHECK(serial.mismatches == parallel.mismatches);
    CHECK(serial.mismatches == 0);
}

TEST_CASE("random soundness: the derivation stream is schedule independent") {
    auto serial = grig_random_soundness(500, 64, 40, 42, false);
    auto parallel = grig_random_soundness(500, 64, 40, 42, true);
    CHECK(serial.derivations == 500);
    CHECK(serial.derivations == parallel.derivations);
    CHECK(serial.violations == parallel.violations);
    CHECK(serial.attempts == parallel.attempts);
    CHECK(serial.violations == 0);
}

TEST_CASE("primitive agreement: serial and parallel agree") {
    auto serial = primitive_agreement(4, 2, false);
    auto parallel = primitive_agreement(4, 2, true);
    CHECK(serial.words == parallel.words);
    CHECK(serial.whitehead_mismatches == parallel.whitehead_mismatches);
    CHECK(serial.gcd_violations == parallel.gcd_violations);
    CHECK(serial.samples == parallel.samples);
    CHECK(serial.invariants.normalizations == parallel.invariants.normalizations);
}

TEST_CASE("basis pairs: serial and parallel agree") {
    auto serial = basis_pair_agreement(2, false);
    auto parallel = basis_pair_agreement(2, true);
    CHECK(serial.pairs == parallel.pairs);
    CHECK(serial.mismatches == parallel.mismatches);
}

TEST_CASE("reduced word corpus") {
    auto words = reduced_words(3, 2);
    CHECK(words.size() == 4 + 12 + 36);
    for (const auto& w : words) CHECK(w.reduced());
    auto f3 = reduced_words(2, 3);
    CHECK(f3.size() == 6 + 30);
}

TEST_CASE("enumeration policies agree on the catalog systems") {
    for (const char* name : {"intermediate-growth", "kappa"}) {
        auto sys = catalog::builtin(name);
        REQUIRE(sys.has_value());
        auto serial = sys->enumerate(10, {}, ExecPolicy::Serial);
        auto parallel = sys->enumerate(10, {}, ExecPolicy::Parallel);
        CHECK(serial.words == parallel.words);
        CHECK(serial.exhaustive == parallel.exhaustive);
    }
}
