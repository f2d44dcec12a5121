#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grouplang::stallings {

// A word in the free group F(x1..xk): letters are nonzero ints, +g for the
// generator g, -g for its inverse. Text syntax: 'a'..'z' are generators
// 1..26 with uppercase inverses, or space-separated x1/X1 tokens.
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<int> letters);
    static FreeWord parse(std::string_view text);

    const std::vector<int>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int max_generator() const;

    bool reduced() const;
    FreeWord freely_reduced() const;
    FreeWord cyclically_reduced() const;
    FreeWord inverse() const;
    FreeWord operator*(const FreeWord& o) const; // concatenation, then free reduction
    bool operator==(const FreeWord& o) const = default;
    bool operator<(const FreeWord& o) const { return letters_ < o.letters_; }

    std::string str() const;

private:
    std::vector<int> letters_;
};

// A graph whose edges carry nonempty reduced free-group words. Vertices are
// dense ids 0..num_vertices-1; an edge read against its orientation
// contributes the inverse label.
struct SegEdge {
    int from = 0;
    int to = 0;
    FreeWord label;
    bool operator==(const SegEdge& o) const = default;
};

struct SegmentGraph {
    int num_vertices = 0;
    std::vector<SegEdge> edges;

    int degree(int v) const;
    std::size_t total_label_letters() const;
    // Topological rank |E| - |V| + 1 of a connected graph.
    int rank() const { return static_cast<int>(edges.size()) - num_vertices + 1; }
    bool connected() const;
    std::set<int> label_generators() const;
    // No vertex carries two edge-ends whose outgoing labels share a first
    // letter.
    bool folded() const;
    // Every vertex has degree >= 3, except a lone vertex or a single
    // vertex-with-loop.
    bool topological() const;
    std::string canonical_encoding() const;
    std::string describe() const;
};

// One vertex with a loop per input word.
SegmentGraph bouquet(const std::vector<FreeWord>& words);

// Applies one fold at some unfolded vertex (case decided by the maximal
// common prefix of the two offending outgoing labels); nullopt when folded.
std::optional<SegmentGraph> fold_once(const SegmentGraph& g);

// Removes degree-1 vertices (with their edges) until none remain.
SegmentGraph prune(SegmentGraph g, std::size_t* removed = nullptr);
// Concatenates across degree-2 vertices, skipping the lone vertex-with-loop.
SegmentGraph merge(SegmentGraph g, std::size_t* merged = nullptr);

struct NormalizeStats {
    std::size_t folds = 0;
    std::size_t prunes = 0;
    std::size_t merges = 0;
};

// Exhaustive folding with pruning and merging: the folded topological core.
SegmentGraph normalize(SegmentGraph g, NormalizeStats* stats = nullptr);

// Identification of two points of the graph: two distinct vertices, a vertex
// and an interior point of a label, or two interior points (possibly of the
// same edge at distinct positions). Split positions satisfy 1 <= p <= |label|-1.
struct PinchMove {
    enum class Kind { VertexVertex, VertexEdge, EdgeEdge };
    Kind kind = Kind::VertexVertex;
    int v = 0, v2 = 0;       // VertexVertex; v also used by VertexEdge
    int edge = 0, pos = 0;   // VertexEdge / EdgeEdge first split
    int edge2 = 0, pos2 = 0; // EdgeEdge second split
    std::string describe(const SegmentGraph& g) const;
};

SegmentGraph apply_pinch(const SegmentGraph& g, const PinchMove& move);
std::vector<PinchMove> enumerate_pinches(const SegmentGraph& g, bool same_edge = true);

// True iff g is a single vertex with one loop per generator, each labeled by
// a distinct single generator (up to inversion) and covering `generators`.
bool is_elementary_wedge(const SegmentGraph& g, const std::set<int>& generators);

// Structural invariants observed while searching (all counters should stay
// zero except `normalizations`).
struct SearchInvariantStats {
    std::size_t normalizations = 0;
    std::size_t unfolded_results = 0;
    std::size_t non_topological_results = 0;
    std::size_t size_bound_violations = 0;  // |E| <= 3r-3, |V| <= 2r-2 for rank > 1
    std::size_t post_pinch_prunes = 0;      // pruning needed after the first normalize

    bool clean() const {
        return unfolded_results == 0 && non_topological_results == 0 &&
               size_bound_violations == 0 && post_pinch_prunes == 0;
    }
};

struct PrimitiveSearchOptions {
    bool allow_same_edge_pinch = true;
    SearchInvariantStats* invariants = nullptr;
    std::vector<std::string>* trace = nullptr; // filled with the witnessing
                                               // move sequence on success
};

// Backtracking realization of the pinch-and-fold recognizer: W is a
// primitive set of F_k iff some sequence of pinches and folds with exactly
// (effective rank - |W|) pinches reaches the elementary wedge.
bool is_primitive_set(const std::vector<FreeWord>& words, int k,
                      const PrimitiveSearchOptions& options = {});

// Independent oracle: classical Whitehead peak reduction for a single word.
bool whitehead_primitive(const FreeWord& w, int k);

// (g, h) is a basis of F2 iff [g, h] is conjugate to [a, b] or [b, a].
bool is_basis_f2(const FreeWord& g, const FreeWord& h);

// Gcd of all n x n minors of the exponent-sum matrix (0 if all vanish);
// a primitive set always has gcd 1.
long long abelianization_minor_gcd(const std::vector<FreeWord>& words, int k);

} // namespace grouplang::stallings
