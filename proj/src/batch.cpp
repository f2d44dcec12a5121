#include "grouplang/batch.hpp"

#include <algorithm>
#include <random>

#include "grouplang/catalog.hpp"
#include "grouplang/grigorchuk.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace grouplang::batch {

namespace {

// Words over {a,b,c,d} of one fixed length, indexed base 4.
std::string grig_word_at(std::uint64_t index, int len) {
    static const char letters[] = {'a', 'b', 'c', 'd'};
    std::string w(static_cast<std::size_t>(len), 'a');
    for (int i = len - 1; i >= 0; --i) {
        w[static_cast<std::size_t>(i)] = letters[index & 3];
        index >>= 2;
    }
    return w;
}

template <typename Fn>
void parallel_index_loop(std::uint64_t count, bool parallel, Fn&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256) if (parallel)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i)
        body(static_cast<std::uint64_t>(i));
#ifndef _OPENMP
    (void)parallel;
#endif
}

void keep_first_samples(std::vector<std::string>& samples, std::size_t limit = 8) {
    std::sort(samples.begin(), samples.end());
    if (samples.size() > limit) samples.resize(limit);
}

} // namespace

SweepResult grig_wp_agreement(int max_len, bool parallel) {
    SweepResult result;
    // Length 0: the empty word is trivial and acts trivially.
    result.checked = 1;

    for (int len = 1; len <= max_len; ++len) {
        const int depth = len + 2;
        const std::uint64_t count = 1ull << (2 * len);
        std::uint64_t mism = 0;
        std::vector<std::string> samples;
#ifdef _OPENMP
#pragma omp parallel if (parallel) reduction(+ : mism)
#endif
        {
            std::vector<std::string> local;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 64) nowait
#endif
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
                const std::string w = grig_word_at(static_cast<std::uint64_t>(i), len);
                const bool trivial = grig::is_trivial(w);
                const bool acts_trivially = grig::tree_action(w, depth).is_identity();
                if (trivial != acts_trivially) {
                    ++mism;
                    if (local.size() < 8) local.push_back(w);
                }
            }
#ifdef _OPENMP
#pragma omp critical
#endif
            samples.insert(samples.end(), local.begin(), local.end());
        }
        result.checked += count;
        result.mismatches += mism;
        result.samples.insert(result.samples.end(), samples.begin(), samples.end());
    }
    keep_first_samples(result.samples);
    return result;
}

SweepResult grig_witness_sweep(int max_len, bool parallel) {
    SweepResult result;
    const LSystem grammar = catalog::grigorchuk_coword_system();
    result.checked = 1; // the empty word: trivial, no witness expected

    for (int len = 1; len <= max_len; ++len) {
        const std::uint64_t count = 1ull << (2 * len);
        std::uint64_t mism = 0;
        std::vector<std::string> samples;
#ifdef _OPENMP
#pragma omp parallel if (parallel) reduction(+ : mism)
#endif
        {
            std::vector<std::string> local;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 64) nowait
#endif
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
                const std::string w = grig_word_at(static_cast<std::uint64_t>(i), len);
                bool ok;
                if (grig::is_trivial(w)) {
                    ok = false;
                    try {
                        (void)grig::derive_witness(w);
                    } catch (const std::domain_error&) {
                        ok = true; // correctly refused
                    }
                } else {
                    try {
                        ok = bool(grammar.verify(grig::derive_witness(w)));
                    } catch (const std::exception&) {
                        ok = false;
                    }
                }
                if (!ok) {
                    ++mism;
                    if (local.size() < 8) local.push_back(w);
                }
            }
#ifdef _OPENMP
#pragma omp critical
#endif
            samples.insert(samples.end(), local.begin(), local.end());
        }
        result.checked += count;
        result.mismatches += mism;
        result.samples.insert(result.samples.end(), samples.begin(), samples.end());
    }
    keep_first_samples(result.samples);
    return result;
}

namespace {

// One random control-accepted derivation of the co-word grammar. Returns the
// terminal word, or nullopt when the walk left a nonterminal symbol behind or
// overflowed the sentential bound.
std::optional<std::string> random_derivation(const LSystem& sys, std::mt19937_64& rng,
                                             std::size_t max_sentential,
                                             std::size_t max_control) {
    const auto& dfa = sys.automaton();
    if (dfa.empty_language()) return std::nullopt;
    const int num_tables = static_cast<int>(sys.tables().size());

    Word form = sys.axioms().front();
    int state = dfa.start();
    std::size_t steps = 0;
    while (true) {
        std::vector<int> options; // usable table moves
        for (int t = 0; t < num_tables; ++t)
            if (dfa.next(state, t) >= 0) options.push_back(t);
        const bool may_stop = dfa.accepting(state);
        if (steps >= max_control && !may_stop) return std::nullopt;

        // Stop with probability 1/4 at accepting states, always at the cap.
        if (may_stop &&
            (steps >= max_control || options.empty() ||
             std::uniform_int_distribution<int>(0, 3)(rng) == 0))
            break;
        if (options.empty()) return std::nullopt;

        const int t = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
        const Table& table = sys.tables()[static_cast<std::size_t>(t)];
        Word next;
        for (char cc : form) {
            const auto c = static_cast<SymbolId>(static_cast<unsigned char>(cc));
            if (!table.has_rule(c)) {
                next.push_back(cc);
                continue;
            }
            const auto& alts = table.alternatives[c];
            next += alts[std::uniform_int_distribution<std::size_t>(0, alts.size() - 1)(rng)];
        }
        if (next.size() > max_sentential) return std::nullopt;
        form = std::move(next);
        state = dfa.next(state, t);
        ++steps;
    }
    if (!sys.is_terminal_word(form)) return std::nullopt;
    return sys.render(form);
}

} // namespace

RandomSoundnessResult grig_random_soundness(std::uint64_t target_derivations,
                                            std::size_t max_sentential, std::size_t max_control,
                                            std::uint64_t seed, bool parallel) {
    RandomSoundnessResult result;
    const LSystem grammar = catalog::grigorchuk_coword_system();
    std::uint64_t derivations = 0, violations = 0, attempts = 0;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel) \
    reduction(+ : derivations, violations, attempts)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(target_derivations); ++i) {
        // One RNG stream per target index keeps the outcome independent of
        // the thread schedule.
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(i));
        while (true) {
            ++attempts;
            auto word = random_derivation(grammar, rng, max_sentential, max_control);
            if (!word) continue;
            ++derivations;
            if (grig::is_trivial(*word)) ++violations;
            break;
        }
    }
    result.derivations = derivations;
    result.violations = violations;
    result.attempts = attempts;
    return result;
}

std::vector<stallings::FreeWord> reduced_words(int max_len, int k) {
    std::vector<stallings::FreeWord> out;
    std::vector<int> current;
    auto emit = [&](auto&& self) -> void {
        if (!current.empty()) out.push_back(stallings::FreeWord(current));
        if (static_cast<int>(current.size()) >= max_len) return;
        for (int g = 1; g <= k; ++g) {
            for (int l : {g, -g}) {
                if (!current.empty() && current.back() == -l) continue;
                current.push_back(l);
                self(self);
                current.pop_back();
            }
        }
    };
    emit(emit);
    return out;
}

AgreementResult primitive_agreement(int max_len, int k, bool parallel) {
    AgreementResult result;
    const auto words = reduced_words(max_len, k);
    result.words = words.size();
    std::uint64_t wh_mism = 0, gcd_bad = 0;
    std::vector<std::string> samples;
    std::vector<stallings::SearchInvariantStats> stats_per_thread;
#ifdef _OPENMP
    stats_per_thread.resize(static_cast<std::size_t>(omp_get_max_threads()));
#else
    stats_per_thread.resize(1);
#endif

#ifdef _OPENMP
#pragma omp parallel if (parallel) reduction(+ : wh_mism, gcd_bad)
#endif
    {
#ifdef _OPENMP
        auto& stats = stats_per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#else
        auto& stats = stats_per_thread[0];
#endif
        std::vector<std::string> local;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 32) nowait
#endif
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(words.size()); ++i) {
            const auto& w = words[static_cast<std::size_t>(i)];
            stallings::PrimitiveSearchOptions opt;
            opt.invariants = &stats;
            const bool rec = stallings::is_primitive_set({w}, k, opt);
            const bool oracle = stallings::whitehead_primitive(w, k);
            if (rec != oracle) {
                ++wh_mism;
                if (local.size() < 8) local.push_back(w.str());
            }
            if (rec && stallings::abelianization_minor_gcd({w}, k) != 1) ++gcd_bad;
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        samples.insert(samples.end(), local.begin(), local.end());
    }

    result.whitehead_mismatches = wh_mism;
    result.gcd_violations = gcd_bad;
    for (const auto& s : stats_per_thread) {
        result.invariants.normalizations += s.normalizations;
        result.invariants.unfolded_results += s.unfolded_results;
        result.invariants.non_topological_results += s.non_topological_results;
        result.invariants.size_bound_violations += s.size_bound_violations;
        result.invariants.post_pinch_prunes += s.post_pinch_prunes;
    }
    result.samples = samples;
    keep_first_samples(result.samples);
    return result;
}

PairAgreementResult basis_pair_agreement(int max_len, bool parallel) {
    PairAgreementResult result;
    const auto words = reduced_words(max_len, 2);
    const std::uint64_t total = static_cast<std::uint64_t>(words.size()) * words.size();
    result.pairs = total;
    std::uint64_t mism = 0;
    std::vector<std::string> samples;
    std::vector<stallings::SearchInvariantStats> stats_per_thread;
#ifdef _OPENMP
    stats_per_thread.resize(static_cast<std::size_t>(omp_get_max_threads()));
#else
    stats_per_thread.resize(1);
#endif

#ifdef _OPENMP
#pragma omp parallel if (parallel) reduction(+ : mism)
#endif
    {
#ifdef _OPENMP
        auto& stats = stats_per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#else
        auto& stats = stats_per_thread[0];
#endif
        std::vector<std::string> local;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 64) nowait
#endif
        for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
            const auto i = static_cast<std::size_t>(idx) / words.size();
            const auto j = static_cast<std::size_t>(idx) % words.size();
            stallings::PrimitiveSearchOptions opt;
            opt.invariants = &stats;
            const bool rec = stallings::is_primitive_set({words[i], words[j]}, 2, opt);
            const bool oracle = stallings::is_basis_f2(words[i], words[j]);
            if (rec != oracle) {
                ++mism;
                if (local.size() < 8) local.push_back(words[i].str() + "#" + words[j].str());
            }
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        samples.insert(samples.end(), local.begin(), local.end());
    }

    result.mismatches = mism;
    for (const auto& s : stats_per_thread) {
        result.invariants.normalizations += s.normalizations;
        result.invariants.unfolded_results += s.unfolded_results;
        result.invariants.non_topological_results += s.non_topological_results;
        result.invariants.size_bound_violations += s.size_bound_violations;
        result.invariants.post_pinch_prunes += s.post_pinch_prunes;
    }
    result.samples = samples;
    keep_first_samples(result.samples);
    return result;
}

} // namespace grouplang::batch
