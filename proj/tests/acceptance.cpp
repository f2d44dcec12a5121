// Acceptance suite: end-to-end checks of the library against independent
// oracles, at fixed sizes and tolerances. Prints one PASS/FAIL line per
// criterion and exits with the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "grouplang/batch.hpp"
#include "grouplang/catalog.hpp"
#include "grouplang/grigorchuk.hpp"
#include "grouplang/growth.hpp"
#include "grouplang/lsystem.hpp"

using namespace grouplang;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > time_limit_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    if (!ok) ++failures;
    std::printf("criterion %d: %-52s %s (%.2fs%s)\n", number, title.c_str(),
                ok ? "PASS" : "FAIL", secs, detail.empty() ? "" : ("; " + detail).c_str());
    std::fflush(stdout);
}

LSystem star_system(const std::string& token) {
    LSystemBuilder b;
    b.alphabet({token, "Z"}).terminals({token}).axiom("Z");
    b.table("grow").rule("Z", token + " Z");
    b.table("stop").rule("Z", "");
    b.control("grow* stop");
    return b.build();
}

std::set<std::string> concat_sets(const std::set<std::string>& a, const std::set<std::string>& b,
                                  std::size_t n) {
    std::set<std::string> out;
    for (const auto& u : a)
        for (const auto& v : b)
            if (u.size() + v.size() <= n) out.insert(u + v);
    return out;
}

} // namespace

int main() {
    criterion(1, "parallel rewriting doubles every symbol at once", 1.0, [](std::string& detail) {
        LSystemBuilder b;
        b.alphabet({"a"}).terminals({"a"}).axiom("a a a");
        b.table("t").rule("a", "a a");
        b.control("t*");
        auto res = b.build().enumerate(48);
        const std::set<std::string> expected = {
            std::string(3, 'a'), std::string(6, 'a'), std::string(12, 'a'), std::string(24, 'a'),
            std::string(48, 'a')};
        detail = std::to_string(res.words.size()) + " words";
        return res.exhaustive && res.words == expected;
    });

    criterion(2, "intermediate-growth grammar matches its language and p(n)", 30.0,
              [](std::string& detail) {
                  auto res = catalog::intermediate_growth_system().enumerate(
                      20, SearchCaps{128, 128, 4'000'000}, ExecPolicy::Parallel);
                  if (!res.exhaustive) {
                      detail = "enumeration not exhaustive";
                      return false;
                  }
                  // Direct membership filter over all {a,b}-words up to 20.
                  std::set<std::string> expected;
                  std::string w;
                  auto walk = [&](auto&& self) -> void {
                      if (!w.empty() && catalog::a_language_contains(w)) expected.insert(w);
                      if (w.size() >= 20) return;
                      for (char c : {'a', 'b'}) {
                          w.push_back(c);
                          self(self);
                          w.pop_back();
                      }
                  };
                  walk(walk);
                  if (res.words != expected) {
                      detail = "language mismatch";
                      return false;
                  }
                  const auto p = growth::partition_counts(20);
                  std::vector<std::uint64_t> counts(21, 0);
                  for (const auto& word : res.words) ++counts[word.size()];
                  for (std::size_t n = 1; n <= 20; ++n)
                      if (counts[n] != p[n]) {
                          detail = "count mismatch at length " + std::to_string(n);
                          return false;
                      }
                  detail = std::to_string(res.words.size()) + " words, f(20)=" +
                           std::to_string(counts[20]) + "=p(20)";
                  return true;
              });

    criterion(3, "crossing-sequence grammar equals the geometric oracle", 10.0,
              [](std::string& detail) {
                  if (catalog::kappa(2, 3) != "hvhhv") {
                      detail = "kappa(2,3) wrong";
                      return false;
                  }
                  auto res = catalog::crossing_sequence_system().enumerate(12);
                  std::set<std::string> expected;
                  for (long m = 1; m <= 12; ++m)
                      for (long n = 0; m + n <= 12; ++n) expected.insert(catalog::kappa(m, n));
                  detail = std::to_string(res.words.size()) + " sequences";
                  return res.exhaustive && res.words == expected;
              });

    criterion(4, "word problem agrees with the tree action on 87381 words", 300.0,
              [](std::string& detail) {
                  if (!grig::is_trivial("dadadada") || grig::is_trivial("bcddacbabcaa")) {
                      detail = "named example misclassified";
                      return false;
                  }
                  auto sweep = batch::grig_wp_agreement(8, true);
                  detail = std::to_string(sweep.checked) + " words, " +
                           std::to_string(sweep.mismatches) + " mismatches";
                  return sweep.mismatches == 0 && sweep.checked == 87381;
              });

    criterion(5, "every nontrivial word of length <= 8 gets a verified witness", 600.0,
              [](std::string& detail) {
                  auto sweep = batch::grig_witness_sweep(8, true);
                  detail = std::to_string(sweep.checked) + " words, " +
                           std::to_string(sweep.mismatches) + " failures";
                  return sweep.mismatches == 0 && sweep.checked == 87381;
              });

    criterion(6, "random grammar derivations only produce nontrivial words", 300.0,
              [](std::string& detail) {
                  auto res = batch::grig_random_soundness(10'000, 64, 40, 0x5eed, true);
                  detail = std::to_string(res.derivations) + " derivations, " +
                           std::to_string(res.violations) + " violations";
                  return res.derivations == 10'000 && res.violations == 0;
              });

    stallings::SearchInvariantStats invariants;
    criterion(7, "primitive-set recognizer agrees with its oracles", 900.0,
              [&invariants](std::string& detail) {
                  auto f2 = batch::primitive_agreement(6, 2, true);
                  auto f3 = batch::primitive_agreement(5, 3, true);
                  auto pairs = batch::basis_pair_agreement(4, true);
                  invariants = f2.invariants;
                  auto add = [&](const stallings::SearchInvariantStats& s) {
                      invariants.normalizations += s.normalizations;
                      invariants.unfolded_results += s.unfolded_results;
                      invariants.non_topological_results += s.non_topological_results;
                      invariants.size_bound_violations += s.size_bound_violations;
                      invariants.post_pinch_prunes += s.post_pinch_prunes;
                  };
                  add(f3.invariants);
                  add(pairs.invariants);
                  detail = std::to_string(f2.words) + " F2 words, " + std::to_string(f3.words) +
                           " F3 words, " + std::to_string(pairs.pairs) + " pairs";
                  return f2.whitehead_mismatches == 0 && f2.gcd_violations == 0 &&
                         f3.whitehead_mismatches == 0 && f3.gcd_violations == 0 &&
                         pairs.mismatches == 0;
              });

    criterion(8, "structural invariants hold along every search", 60.0,
              [&invariants](std::string& detail) {
                  detail = std::to_string(invariants.normalizations) + " normalizations";
                  return invariants.normalizations > 0 && invariants.clean();
              });

    criterion(9, "union and concatenation match set-level operations", 30.0,
              [](std::string& detail) {
                  const std::size_t n = 8;
                  auto ig = catalog::intermediate_growth_system();
                  auto ks = catalog::crossing_sequence_system();
                  auto ts = star_system("t");
                  auto Ts = star_system("T");
                  const std::vector<std::pair<const LSystem*, const LSystem*>> pairs = {
                      {&ig, &ks}, {&ks, &ig}, {&ts, &ks}, {&ig, &ig}, {&ts, &Ts}};
                  for (const auto& [a, b] : pairs) {
                      auto la = a->enumerate(n), lb = b->enumerate(n);
                      if (!la.exhaustive || !lb.exhaustive) {
                          detail = "component enumeration capped";
                          return false;
                      }
                      auto u = union_systems(*a, *b).enumerate(n);
                      std::set<std::string> expect_union = la.words;
                      expect_union.insert(lb.words.begin(), lb.words.end());
                      if (!u.exhaustive || u.words != expect_union) {
                          detail = "union mismatch";
                          return false;
                      }
                      auto c = concat_systems(*a, *b).enumerate(n);
                      if (!c.exhaustive || c.words != concat_sets(la.words, lb.words, n)) {
                          detail = "concatenation mismatch";
                          return false;
                      }
                  }
                  // The combing of the semidirect product: {t* u T*} L.
                  auto combing = catalog::z2_semidirect_combing_system().enumerate(n);
                  auto lk = ks.enumerate(n);
                  auto lt = ts.enumerate(n), lT = Ts.enumerate(n);
                  std::set<std::string> prefixes = lt.words;
                  prefixes.insert(lT.words.begin(), lT.words.end());
                  if (!combing.exhaustive ||
                      combing.words != concat_sets(prefixes, lk.words, n)) {
                      detail = "combing mismatch";
                      return false;
                  }
                  detail = "5 pairs plus the combing";
                  return true;
              });

    if (failures == 0)
        std::printf("acceptance: all 9 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures;
}
