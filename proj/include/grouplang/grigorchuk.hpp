#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grouplang/lsystem.hpp"

namespace grouplang::grig {

class WitnessConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Words live over the involutive generators {a, b, c, d}. Inverse letters are
// never needed since every generator squares to the identity.

bool valid_word(std::string_view w);

// True iff w avoids aa, bb, cc, dd and every two-letter factor from {b,c,d}
// (the alternating form).
bool is_reduced(std::string_view w);

// The unique reduced word equal to w in the group: a left-to-right stack scan
// treating {1, b, c, d} as the Klein four-group and cancelling aa.
std::string reduce(std::string_view w);

// Membership in the level-one stabilizer: the number of a's is even.
bool in_g1(std::string_view w);

// The halving homomorphisms on reduced words with an even a-count, computed
// syllable-wise: b,c -> a, d -> 1, aba -> c, aca -> d, ada -> b on the left;
// b -> c, c -> d, d -> b, aba -> a, aca -> a, ada -> 1 on the right.
// Returned images are the raw syllable-wise concatenations (not re-reduced).
std::pair<std::string, std::string> phi(std::string_view w);

// |reduce(phi_i(w))| < |w|/2 + 1 for both halves; requires w reduced, in G1,
// |w| > 1.
bool contraction_check(std::string_view w);

// The word problem: reduce; empty -> trivial; odd a-count -> nontrivial;
// single letter -> nontrivial; otherwise recurse on both halves.
bool is_trivial(std::string_view w);

// Action of a word on the depth-truncated binary tree, as a permutation of
// the 2^depth leaves. Leaf index bit i (from the most significant) selects
// the child at level i+1.
struct TreeAction {
    int depth = 0;
    std::vector<std::uint32_t> leaf_map;

    bool is_identity() const;
    bool operator==(const TreeAction& o) const = default;
};

TreeAction tree_action(std::string_view w, int depth);

// A verified derivation of w in the co-word grammar, built by running the
// word-problem recursion down to a seed with an odd a-count and replaying the
// chain upward through the seed/placeholder/invert/unreduce/tidy phases.
// Throws std::domain_error for words representing the identity.
DerivationWitness derive_witness(std::string_view w);

struct EquivalenceReport {
    std::size_t total = 0;
    std::size_t trivial = 0;
    std::size_t nontrivial = 0;
    std::size_t witnesses_verified = 0;
    std::size_t failures = 0; // nontrivial words lacking a verifying witness,
                              // or trivial words for which one was produced
};

// Desk-scale check of grammar soundness/completeness over all words of
// length <= max_len.
EquivalenceReport coword_language_equivalence(int max_len);

} // namespace grouplang::grig
