#include "grouplang/stallings.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace grouplang::stallings {

// ---------------------------------------------------------------------------
// FreeWord.

FreeWord::FreeWord(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int l : letters_)
        if (l == 0) throw std::invalid_argument("free-group letters must be nonzero");
}

FreeWord FreeWord::parse(std::string_view text) {
    std::vector<int> letters;
    if (text.find_first_of("0123456789") != std::string_view::npos) {
        std::istringstream in{std::string(text)};
        std::string tok;
        while (in >> tok) {
            if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X'))
                throw std::invalid_argument("bad free-group token: " + tok);
            const int idx = std::stoi(tok.substr(1));
            if (idx <= 0) throw std::invalid_argument("bad generator index in: " + tok);
            letters.push_back(tok[0] == 'x' ? idx : -idx);
        }
        return FreeWord(std::move(letters));
    }
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c >= 'a' && c <= 'z')
            letters.push_back(c - 'a' + 1);
        else if (c >= 'A' && c <= 'Z')
            letters.push_back(-(c - 'A' + 1));
        else
            throw std::invalid_argument(std::string("bad free-group letter: ") + c);
    }
    return FreeWord(std::move(letters));
}

int FreeWord::max_generator() const {
    int m = 0;
    for (int l : letters_) m = std::max(m, std::abs(l));
    return m;
}

bool FreeWord::reduced() const {
    for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
        if (letters_[i] == -letters_[i + 1]) return false;
    return true;
}

FreeWord FreeWord::freely_reduced() const {
    std::vector<int> out;
    for (int l : letters_) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return FreeWord(std::move(out));
}

FreeWord FreeWord::cyclically_reduced() const {
    std::vector<int> out = freely_reduced().letters_;
    std::size_t lo = 0, hi = out.size();
    while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
        ++lo;
        --hi;
    }
    return FreeWord(std::vector<int>(out.begin() + static_cast<std::ptrdiff_t>(lo),
                                     out.begin() + static_cast<std::ptrdiff_t>(hi)));
}

FreeWord FreeWord::inverse() const {
    std::vector<int> out(letters_.rbegin(), letters_.rend());
    for (int& l : out) l = -l;
    return FreeWord(std::move(out));
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
    std::vector<int> out = letters_;
    for (int l : o.letters_) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return FreeWord(std::move(out));
}

std::string FreeWord::str() const {
    if (max_generator() <= 26) {
        std::string out;
        for (int l : letters_)
            out += static_cast<char>(l > 0 ? 'a' + l - 1 : 'A' - l - 1);
        return out;
    }
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += (letters_[i] > 0 ? "x" : "X") + std::to_string(std::abs(letters_[i]));
    }
    return out;
}

// ---------------------------------------------------------------------------
// SegmentGraph basics.

namespace {

struct EdgeEnd {
    int edge;
    bool forward; // the end at i(edge) when true, at t(edge) when false
};

int out_first_letter(const SegmentGraph& g, const EdgeEnd& end) {
    const auto& label = g.edges[static_cast<std::size_t>(end.edge)].label.letters();
    return end.forward ? label.front() : -label.back();
}

std::vector<EdgeEnd> ends_at(const SegmentGraph& g, int v) {
    std::vector<EdgeEnd> out;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (g.edges[i].from == v) out.push_back({static_cast<int>(i), true});
        if (g.edges[i].to == v) out.push_back({static_cast<int>(i), false});
    }
    return out;
}

FreeWord subword(const FreeWord& w, std::size_t lo, std::size_t hi) {
    return FreeWord(std::vector<int>(w.letters().begin() + static_cast<std::ptrdiff_t>(lo),
                                     w.letters().begin() + static_cast<std::ptrdiff_t>(hi)));
}

std::size_t common_prefix(const FreeWord& a, const FreeWord& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::size_t p = 0;
    while (p < n && a.letters()[p] == b.letters()[p]) ++p;
    return p;
}

void flip_edge(SegEdge& e) {
    std::swap(e.from, e.to);
    e.label = e.label.inverse();
}

// Replaces vertex id `dead` with `survivor` and compacts the id range.
void identify_vertices(SegmentGraph& g, int survivor, int dead) {
    if (survivor == dead) return;
    for (auto& e : g.edges) {
        if (e.from == dead) e.from = survivor;
        if (e.to == dead) e.to = survivor;
        if (e.from > dead) --e.from;
        if (e.to > dead) --e.to;
    }
    --g.num_vertices;
}

void drop_vertex(SegmentGraph& g, int dead) {
    for (auto& e : g.edges) {
        if (e.from > dead) --e.from;
        if (e.to > dead) --e.to;
    }
    --g.num_vertices;
}

} // namespace

int SegmentGraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges) {
        if (e.from == v) ++d;
        if (e.to == v) ++d;
    }
    return d;
}

std::size_t SegmentGraph::total_label_letters() const {
    std::size_t n = 0;
    for (const auto& e : edges) n += e.label.size();
    return n;
}

bool SegmentGraph::connected() const {
    if (num_vertices == 0) return true;
    std::vector<bool> seen(static_cast<std::size_t>(num_vertices), false);
    std::vector<int> work{0};
    seen[0] = true;
    while (!work.empty()) {
        const int v = work.back();
        work.pop_back();
        for (const auto& e : edges) {
            for (const int u : {e.from == v ? e.to : -1, e.to == v ? e.from : -1}) {
                if (u >= 0 && !seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    work.push_back(u);
                }
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::set<int> SegmentGraph::label_generators() const {
    std::set<int> out;
    for (const auto& e : edges)
        for (int l : e.label.letters()) out.insert(std::abs(l));
    return out;
}

bool SegmentGraph::folded() const {
    for (int v = 0; v < num_vertices; ++v) {
        std::set<int> firsts;
        for (const auto& end : ends_at(*this, v))
            if (!firsts.insert(out_first_letter(*this, end)).second) return false;
    }
    return true;
}

bool SegmentGraph::topological() const {
    if (num_vertices == 1 && edges.empty()) return true;
    if (num_vertices == 1 && edges.size() == 1 && edges[0].from == edges[0].to) return true;
    for (int v = 0; v < num_vertices; ++v)
        if (degree(v) < 3) return false;
    return true;
}

std::string SegmentGraph::canonical_encoding() const {
    auto encode_with = [&](const std::vector<int>& relabel) {
        std::vector<std::string> items;
        for (const auto& e : edges) {
            const int a = relabel[static_cast<std::size_t>(e.from)];
            const int b = relabel[static_cast<std::size_t>(e.to)];
            std::string fwd = std::to_string(a) + ">" + std::to_string(b) + ":" + e.label.str();
            std::string bwd =
                std::to_string(b) + ">" + std::to_string(a) + ":" + e.label.inverse().str();
            items.push_back(std::min(fwd, bwd));
        }
        std::sort(items.begin(), items.end());
        std::string out = "V" + std::to_string(num_vertices);
        for (const auto& s : items) out += ";" + s;
        return out;
    };

    std::string best;
    for (int root = 0; root < num_vertices; ++root) {
        std::vector<int> relabel(static_cast<std::size_t>(num_vertices), -1);
        int next_id = 0;
        std::vector<int> queue{root};
        relabel[static_cast<std::size_t>(root)] = next_id++;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int v = queue[qi];
            std::vector<std::pair<std::string, int>> nbrs;
            for (const auto& end : ends_at(*this, v)) {
                const auto& e = edges[static_cast<std::size_t>(end.edge)];
                const int far = end.forward ? e.to : e.from;
                const FreeWord out_label = end.forward ? e.label : e.label.inverse();
                nbrs.emplace_back(out_label.str(), far);
            }
            std::sort(nbrs.begin(), nbrs.end());
            for (const auto& [lbl, far] : nbrs) {
                (void)lbl;
                if (relabel[static_cast<std::size_t>(far)] < 0) {
                    relabel[static_cast<std::size_t>(far)] = next_id++;
                    queue.push_back(far);
                }
            }
        }
        for (auto& r : relabel)
            if (r < 0) r = next_id++;
        std::string enc = encode_with(relabel);
        if (best.empty() || enc < best) best = enc;
    }
    if (best.empty()) best = "V0";
    return best;
}

std::string SegmentGraph::describe() const {
    std::ostringstream out;
    out << num_vertices << " vertices:";
    for (const auto& e : edges) out << " " << e.from << "-[" << e.label.str() << "]->" << e.to;
    return out.str();
}

SegmentGraph bouquet(const std::vector<FreeWord>& words) {
    SegmentGraph g;
    g.num_vertices = 1;
    for (const auto& w : words) {
        if (w.empty()) throw std::domain_error("bouquet requires nonempty words");
        if (!w.reduced()) throw std::invalid_argument("bouquet requires freely reduced words");
        g.edges.push_back({0, 0, w});
    }
    return g;
}

// ---------------------------------------------------------------------------
// Folding.

std::optional<SegmentGraph> fold_once(const SegmentGraph& g_in) {
    for (int v = 0; v < g_in.num_vertices; ++v) {
        const auto ends = ends_at(g_in, v);
        for (std::size_t i = 0; i < ends.size(); ++i) {
            for (std::size_t j = i + 1; j < ends.size(); ++j) {
                if (out_first_letter(g_in, ends[i]) != out_first_letter(g_in, ends[j])) continue;
                SegmentGraph g = g_in;

                if (ends[i].edge == ends[j].edge) {
                    // Both ends of one loop share a prefix, so the label has
                    // the shape u m u^-1; split off the conjugating segment.
                    const auto idx = static_cast<std::size_t>(ends[i].edge);
                    const FreeWord w = g.edges[idx].label;
                    const std::size_t p = common_prefix(w, w.inverse());
                    if (p == 0 || 2 * p >= w.size()) continue;
                    const int nv = g.num_vertices++;
                    g.edges[idx] = {nv, nv, subword(w, p, w.size() - p)};
                    g.edges.push_back({v, nv, subword(w, 0, p)});
                    return g;
                }

                auto& e1 = g.edges[static_cast<std::size_t>(ends[i].edge)];
                auto& e2 = g.edges[static_cast<std::size_t>(ends[j].edge)];
                if (!ends[i].forward) flip_edge(e1);
                if (!ends[j].forward) flip_edge(e2);
                const FreeWord l1 = e1.label, l2 = e2.label;
                const std::size_t p = common_prefix(l1, l2);

                if (p == l1.size() && p == l2.size()) {
                    // Case I: identical labels. Drop one edge and identify the
                    // far endpoints.
                    const int t1 = e1.to, t2 = e2.to;
                    g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(ends[j].edge));
                    if (t1 != t2) identify_vertices(g, std::min(t1, t2), std::max(t1, t2));
                    return g;
                }
                if (p == l1.size()) {
                    // Case II: l1 is a proper prefix of l2; the tail hangs off
                    // e1's far endpoint.
                    e2 = {e1.to, e2.to, subword(l2, p, l2.size())};
                    return g;
                }
                if (p == l2.size()) {
                    e1 = {e2.to, e1.to, subword(l1, p, l1.size())};
                    return g;
                }
                // Case III: proper common prefix; route both suffixes through
                // a fresh vertex.
                const int nv = g.num_vertices++;
                const int t1 = e1.to, t2 = e2.to;
                e1 = {nv, t1, subword(l1, p, l1.size())};
                e2 = {nv, t2, subword(l2, p, l2.size())};
                g.edges.push_back({v, nv, subword(l1, 0, p)});
                return g;
            }
        }
    }
    return std::nullopt;
}

SegmentGraph prune(SegmentGraph g, std::size_t* removed) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.num_vertices; ++v) {
            if (g.degree(v) > 1 || g.num_vertices <= 1) continue;
            for (std::size_t i = 0; i < g.edges.size(); ++i) {
                if (g.edges[i].from == v || g.edges[i].to == v) {
                    g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(i));
                    break;
                }
            }
            drop_vertex(g, v);
            if (removed) ++*removed;
            changed = true;
            break;
        }
    }
    return g;
}

SegmentGraph merge(SegmentGraph g, std::size_t* merged) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.num_vertices && !changed; ++v) {
            if (g.degree(v) != 2) continue;
            const auto ends = ends_at(g, v);
            if (ends.size() != 2 || ends[0].edge == ends[1].edge) continue; // lone loop
            auto e1 = g.edges[static_cast<std::size_t>(ends[0].edge)];
            auto e2 = g.edges[static_cast<std::size_t>(ends[1].edge)];
            if (ends[0].forward) flip_edge(e1); // orient e1 into v
            if (!ends[1].forward) flip_edge(e2);
            // At a folded vertex the junction is reduced; otherwise skip and
            // let folding run first.
            if (e1.label.letters().back() == -e2.label.letters().front()) continue;
            std::vector<int> letters = e1.label.letters();
            letters.insert(letters.end(), e2.label.letters().begin(), e2.label.letters().end());
            SegEdge m{e1.from, e2.to, FreeWord(std::move(letters))};
            std::vector<std::size_t> dead{static_cast<std::size_t>(ends[0].edge),
                                          static_cast<std::size_t>(ends[1].edge)};
            std::sort(dead.rbegin(), dead.rend());
            for (std::size_t d : dead)
                g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(d));
            g.edges.push_back(m);
            drop_vertex(g, v);
            if (merged) ++*merged;
            changed = true;
        }
    }
    return g;
}

SegmentGraph normalize(SegmentGraph g, NormalizeStats* stats) {
    NormalizeStats local;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        while (auto folded = fold_once(g)) {
            g = std::move(*folded);
            ++local.folds;
            progressed = true;
        }
        std::size_t removed = 0;
        g = prune(std::move(g), &removed);
        local.prunes += removed;
        std::size_t merges = 0;
        g = merge(std::move(g), &merges);
        local.merges += merges;
        progressed = progressed || removed > 0 || merges > 0;
    }
    if (stats) *stats = local;
    return g;
}

// ---------------------------------------------------------------------------
// Pinches.

std::string PinchMove::describe(const SegmentGraph& g) const {
    std::ostringstream out;
    switch (kind) {
    case Kind::VertexVertex:
        out << "pinch vertices " << v << " and " << v2;
        break;
    case Kind::VertexEdge:
        out << "pinch vertex " << v << " into edge "
            << g.edges[static_cast<std::size_t>(edge)].label.str() << " at " << pos;
        break;
    case Kind::EdgeEdge:
        out << "pinch edge " << g.edges[static_cast<std::size_t>(edge)].label.str() << " at "
            << pos << " with edge " << g.edges[static_cast<std::size_t>(edge2)].label.str()
            << " at " << pos2;
        break;
    }
    return out.str();
}

SegmentGraph apply_pinch(const SegmentGraph& g_in, const PinchMove& move) {
    SegmentGraph g = g_in;
    auto check_pos = [&](int edge, int pos) {
        const auto& label = g.edges.at(static_cast<std::size_t>(edge)).label;
        if (pos < 1 || static_cast<std::size_t>(pos) >= label.size())
            throw std::invalid_argument("pinch split position must be interior");
    };
    switch (move.kind) {
    case PinchMove::Kind::VertexVertex: {
        if (move.v == move.v2) throw std::invalid_argument("vertex pinch needs distinct vertices");
        identify_vertices(g, std::min(move.v, move.v2), std::max(move.v, move.v2));
        return g;
    }
    case PinchMove::Kind::VertexEdge: {
        check_pos(move.edge, move.pos);
        const auto e = g.edges[static_cast<std::size_t>(move.edge)];
        const auto p = static_cast<std::size_t>(move.pos);
        g.edges[static_cast<std::size_t>(move.edge)] = {e.from, move.v, subword(e.label, 0, p)};
        g.edges.push_back({move.v, e.to, subword(e.label, p, e.label.size())});
        return g;
    }
    case PinchMove::Kind::EdgeEdge: {
        check_pos(move.edge, move.pos);
        check_pos(move.edge2, move.pos2);
        if (move.edge == move.edge2) {
            if (move.pos >= move.pos2)
                throw std::invalid_argument("same-edge pinch needs distinct ordered positions");
            const auto e = g.edges[static_cast<std::size_t>(move.edge)];
            const auto p1 = static_cast<std::size_t>(move.pos);
            const auto p2 = static_cast<std::size_t>(move.pos2);
            const int nv = g.num_vertices++;
            g.edges[static_cast<std::size_t>(move.edge)] = {e.from, nv, subword(e.label, 0, p1)};
            g.edges.push_back({nv, nv, subword(e.label, p1, p2)});
            g.edges.push_back({nv, e.to, subword(e.label, p2, e.label.size())});
            return g;
        }
        const auto e1 = g.edges[static_cast<std::size_t>(move.edge)];
        const auto e2 = g.edges[static_cast<std::size_t>(move.edge2)];
        const auto p1 = static_cast<std::size_t>(move.pos);
        const auto p2 = static_cast<std::size_t>(move.pos2);
        const int nv = g.num_vertices++;
        g.edges[static_cast<std::size_t>(move.edge)] = {e1.from, nv, subword(e1.label, 0, p1)};
        g.edges[static_cast<std::size_t>(move.edge2)] = {e2.from, nv, subword(e2.label, 0, p2)};
        g.edges.push_back({nv, e1.to, subword(e1.label, p1, e1.label.size())});
        g.edges.push_back({nv, e2.to, subword(e2.label, p2, e2.label.size())});
        return g;
    }
    }
    throw std::logic_error("unreachable");
}

std::vector<PinchMove> enumerate_pinches(const SegmentGraph& g, bool same_edge) {
    std::vector<PinchMove> out;
    for (int v = 0; v < g.num_vertices; ++v)
        for (int v2 = v + 1; v2 < g.num_vertices; ++v2)
            out.push_back({PinchMove::Kind::VertexVertex, v, v2, 0, 0, 0, 0});
    for (int v = 0; v < g.num_vertices; ++v)
        for (std::size_t e = 0; e < g.edges.size(); ++e)
            for (std::size_t p = 1; p < g.edges[e].label.size(); ++p)
                out.push_back({PinchMove::Kind::VertexEdge, v, 0, static_cast<int>(e),
                               static_cast<int>(p), 0, 0});
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (same_edge) {
            for (std::size_t p = 1; p < g.edges[e].label.size(); ++p)
                for (std::size_t p2 = p + 1; p2 < g.edges[e].label.size(); ++p2)
                    out.push_back({PinchMove::Kind::EdgeEdge, 0, 0, static_cast<int>(e),
                                   static_cast<int>(p), static_cast<int>(e),
                                   static_cast<int>(p2)});
        }
        for (std::size_t e2 = e + 1; e2 < g.edges.size(); ++e2)
            for (std::size_t p = 1; p < g.edges[e].label.size(); ++p)
                for (std::size_t p2 = 1; p2 < g.edges[e2].label.size(); ++p2)
                    out.push_back({PinchMove::Kind::EdgeEdge, 0, 0, static_cast<int>(e),
                                   static_cast<int>(p), static_cast<int>(e2),
                                   static_cast<int>(p2)});
    }
    return out;
}

bool is_elementary_wedge(const SegmentGraph& g, const std::set<int>& generators) {
    if (g.num_vertices != 1 || g.edges.size() != generators.size()) return false;
    std::set<int> seen;
    for (const auto& e : g.edges) {
        if (e.label.size() != 1) return false;
        if (!seen.insert(std::abs(e.label.letters()[0])).second) return false;
    }
    return seen == generators;
}

// ---------------------------------------------------------------------------
// The recognizer.

namespace {

struct PrimitiveSearch {
    int n;
    const PrimitiveSearchOptions& opt;
    std::unordered_set<std::string> failed; // canonical encoding + pinches used
    bool first_normalize_done = false;

    void observe(const SegmentGraph& g, const NormalizeStats& stats) {
        if (!opt.invariants) return;
        auto& inv = *opt.invariants;
        ++inv.normalizations;
        if (!g.folded()) ++inv.unfolded_results;
        if (!g.topological()) ++inv.non_topological_results;
        const int r = g.rank();
        if (r > 1 && (static_cast<int>(g.edges.size()) > 3 * r - 3 ||
                      g.num_vertices > 2 * r - 2))
            ++inv.size_bound_violations;
        if (first_normalize_done && stats.prunes > 0) ++inv.post_pinch_prunes;
    }

    bool search(const SegmentGraph& g, int used) {
        const auto letters = g.label_generators();
        const int keff = static_cast<int>(letters.size());
        const int remaining = keff - n - used;
        if (remaining < 0) return false;
        // Rank minus total label letters never decreases under folds and
        // pinches, and the wedge has rank equal to its letter count.
        if (g.rank() > static_cast<int>(g.total_label_letters())) return false;
        if (remaining == 0) return is_elementary_wedge(g, letters);

        const std::string key = g.canonical_encoding() + "#" + std::to_string(used);
        if (failed.count(key)) return false;

        for (const auto& move : enumerate_pinches(g, opt.allow_same_edge_pinch)) {
            SegmentGraph pinched = apply_pinch(g, move);
            NormalizeStats stats;
            SegmentGraph next = normalize(std::move(pinched), &stats);
            observe(next, stats);
            if (search(next, used + 1)) {
                if (opt.trace) {
                    opt.trace->push_back("fold/merge to " + next.describe());
                    opt.trace->push_back(move.describe(g));
                }
                return true;
            }
        }
        failed.insert(key);
        return false;
    }
};

} // namespace

bool is_primitive_set(const std::vector<FreeWord>& words, int k,
                      const PrimitiveSearchOptions& options) {
    if (words.empty()) throw std::domain_error("primitive-set query requires at least one word");
    for (const auto& w : words) {
        if (w.empty()) throw std::domain_error("primitive-set query words must be nonempty");
        if (!w.reduced())
            throw std::invalid_argument("primitive-set query words must be freely reduced");
        if (w.max_generator() > k)
            throw std::invalid_argument("word uses a generator beyond the ambient rank");
    }
    const int n = static_cast<int>(words.size());
    if (n > k) return false;

    std::set<int> gens;
    for (const auto& w : words)
        for (int l : w.letters()) gens.insert(std::abs(l));
    if (static_cast<int>(gens.size()) < n) return false;

    PrimitiveSearch search{n, options, {}, false};
    NormalizeStats stats;
    SegmentGraph g = normalize(bouquet(words), &stats);
    search.observe(g, stats);
    search.first_normalize_done = true;
    const bool found = search.search(g, 0);
    if (found && options.trace) {
        options.trace->push_back("start from " + g.describe());
        std::reverse(options.trace->begin(), options.trace->end());
    }
    return found;
}

// ---------------------------------------------------------------------------
// Oracles.

namespace {

// Type-II Whitehead automorphisms with multiplier a: every generator g with
// gen(g) != gen(a) maps to one of g, g*a, a^-1*g, a^-1*g*a; the multiplier's
// generator is fixed.
struct WhiteheadAuto {
    std::vector<FreeWord> image; // indexed by generator-1
};

std::vector<WhiteheadAuto> whitehead_autos(int k) {
    std::vector<int> multipliers;
    for (int g = 1; g <= k; ++g) {
        multipliers.push_back(g);
        multipliers.push_back(-g);
    }
    std::vector<WhiteheadAuto> out;
    for (int a : multipliers) {
        const int ag = std::abs(a);
        std::vector<int> others;
        for (int g = 1; g <= k; ++g)
            if (g != ag) others.push_back(g);
        const std::size_t combos = static_cast<std::size_t>(1) << (2 * others.size());
        for (std::size_t mask = 0; mask < combos; ++mask) {
            WhiteheadAuto wa;
            wa.image.resize(static_cast<std::size_t>(k));
            wa.image[static_cast<std::size_t>(ag - 1)] = FreeWord({ag});
            bool identity = true;
            for (std::size_t i = 0; i < others.size(); ++i) {
                const int g = others[i];
                const unsigned choice = (mask >> (2 * i)) & 3u;
                std::vector<int> img;
                if (choice & 1u) img.push_back(-a);
                img.push_back(g);
                if (choice & 2u) img.push_back(a);
                if (choice != 0) identity = false;
                wa.image[static_cast<std::size_t>(g - 1)] = FreeWord(std::move(img));
            }
            if (!identity) out.push_back(std::move(wa));
        }
    }
    return out;
}

FreeWord apply_auto(const WhiteheadAuto& wa, const FreeWord& w) {
    FreeWord out;
    for (int l : w.letters()) {
        const auto& img = wa.image[static_cast<std::size_t>(std::abs(l) - 1)];
        out = out * (l > 0 ? img : img.inverse());
    }
    return out;
}

bool cyclic_equal(const FreeWord& a, const FreeWord& b) {
    if (a.size() != b.size()) return false;
    const auto n = a.size();
    if (n == 0) return true;
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            ok = a.letters()[(i + shift) % n] == b.letters()[i];
        if (ok) return true;
    }
    return false;
}

long long cofactor_det(const std::vector<std::vector<long long>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    long long det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<long long>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<long long> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        const long long term = m[0][j] * cofactor_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

} // namespace

bool whitehead_primitive(const FreeWord& w_in, int k) {
    if (w_in.empty()) return false;
    if (!w_in.reduced()) throw std::invalid_argument("whitehead oracle requires a reduced word");
    if (w_in.max_generator() > k)
        throw std::invalid_argument("word uses a generator beyond the ambient rank");
    const auto autos = whitehead_autos(k);
    FreeWord cur = w_in.cyclically_reduced();
    while (cur.size() > 1) {
        FreeWord best = cur;
        for (const auto& wa : autos) {
            FreeWord img = apply_auto(wa, cur).cyclically_reduced();
            if (img.size() < best.size()) best = img;
        }
        if (best.size() >= cur.size()) return false;
        cur = best;
    }
    return cur.size() == 1;
}

bool is_basis_f2(const FreeWord& g, const FreeWord& h) {
    const FreeWord gr = g.freely_reduced(), hr = h.freely_reduced();
    const FreeWord comm = (gr * hr * gr.inverse() * hr.inverse()).cyclically_reduced();
    return cyclic_equal(comm, FreeWord({1, 2, -1, -2})) ||
           cyclic_equal(comm, FreeWord({2, 1, -2, -1}));
}

long long abelianization_minor_gcd(const std::vector<FreeWord>& words, int k) {
    const std::size_t n = words.size();
    if (static_cast<int>(n) > k) throw std::invalid_argument("more words than the ambient rank");
    std::vector<std::vector<long long>> mat(n,
                                            std::vector<long long>(static_cast<std::size_t>(k), 0));
    for (std::size_t i = 0; i < n; ++i)
        for (int l : words[i].letters())
            mat[i][static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;

    std::vector<std::size_t> cols(n);
    long long g = 0;
    auto choose = [&](auto&& self, std::size_t idx, std::size_t from) -> void {
        if (idx == n) {
            std::vector<std::vector<long long>> minor(n, std::vector<long long>(n));
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) minor[r][c] = mat[r][cols[c]];
            g = std::gcd(g, cofactor_det(minor));
            return;
        }
        for (std::size_t c = from; c < static_cast<std::size_t>(k); ++c) {
            cols[idx] = c;
            self(self, idx + 1, c + 1);
        }
    };
    choose(choose, 0, 0);
    return std::abs(g);
}

} // namespace grouplang::stallings
