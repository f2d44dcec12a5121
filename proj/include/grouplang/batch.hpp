#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grouplang/stallings.hpp"

namespace grouplang::batch {

// Corpus sweeps over all words up to a length bound. Each has an OpenMP
// kernel and the same code path runs serially when `parallel` is false; the
// two must agree exactly (the serial run is the reference).

struct SweepResult {
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
    std::vector<std::string> samples; // first few offending words, sorted
};

// Word problem vs. the tree-action oracle at depth |w|+2, over all words of
// length <= max_len on {a,b,c,d}.
SweepResult grig_wp_agreement(int max_len, bool parallel);

// derive_witness + grammar verification for every nontrivial word of length
// <= max_len; counts words whose witness fails (or trivial words that get
// one).
SweepResult grig_witness_sweep(int max_len, bool parallel);

struct RandomSoundnessResult {
    std::uint64_t derivations = 0; // control-accepted derivations that ended terminal
    std::uint64_t violations = 0;  // produced words representing the identity
    std::uint64_t attempts = 0;
};

// Random control-accepted derivations of the co-word grammar; every terminal
// word produced must be nontrivial in the group.
RandomSoundnessResult grig_random_soundness(std::uint64_t target_derivations,
                                            std::size_t max_sentential,
                                            std::size_t max_control, std::uint64_t seed,
                                            bool parallel);

struct AgreementResult {
    std::uint64_t words = 0;
    std::uint64_t whitehead_mismatches = 0;
    std::uint64_t gcd_violations = 0; // recognizer YES with minor gcd != 1
    stallings::SearchInvariantStats invariants;
    std::vector<std::string> samples;
};

// Recognizer vs. Whitehead oracle (and the abelianization necessary
// condition) over all freely reduced words of length <= max_len in F_k.
AgreementResult primitive_agreement(int max_len, int k, bool parallel);

struct PairAgreementResult {
    std::uint64_t pairs = 0;
    std::uint64_t mismatches = 0;
    stallings::SearchInvariantStats invariants;
    std::vector<std::string> samples;
};

// Recognizer vs. the commutator basis criterion over all reduced pairs of
// length <= max_len in F_2.
PairAgreementResult basis_pair_agreement(int max_len, bool parallel);

// All freely reduced words of length 1..max_len in F_k, in a fixed order.
std::vector<stallings::FreeWord> reduced_words(int max_len, int k);

} // namespace grouplang::batch
