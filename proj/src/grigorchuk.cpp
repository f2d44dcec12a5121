#include "grouplang/grigorchuk.hpp"

#include <algorithm>
#include <optional>

#include "grouplang/catalog.hpp"

namespace grouplang::grig {

namespace {

bool is_k4(char c) { return c == 'b' || c == 'c' || c == 'd'; }

// Product of two nontrivial Klein-four elements; 0 encodes the identity.
char k4_product(char x, char y) {
    if (x == y) return 0;
    return static_cast<char>('b' + 'c' + 'd' - x - y);
}

void require_word(std::string_view w) {
    if (!valid_word(w))
        throw std::invalid_argument("word must be over the generators a, b, c, d");
}

const LSystem& coword_system() {
    static const LSystem sys = catalog::grigorchuk_coword_system();
    return sys;
}

} // namespace

bool valid_word(std::string_view w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == 'a' || is_k4(c); });
}

bool is_reduced(std::string_view w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == w[i + 1]) return false;
        if (is_k4(w[i]) && is_k4(w[i + 1])) return false;
    }
    return true;
}

std::string reduce(std::string_view w) {
    require_word(w);
    std::string stack;
    for (char c : w) {
        if (c == 'a') {
            if (!stack.empty() && stack.back() == 'a')
                stack.pop_back();
            else
                stack.push_back('a');
            continue;
        }
        if (!stack.empty() && is_k4(stack.back())) {
            const char prod = k4_product(stack.back(), c);
            stack.pop_back();
            if (prod != 0) stack.push_back(prod);
        } else {
            stack.push_back(c);
        }
    }
    return stack;
}

bool in_g1(std::string_view w) {
    require_word(w);
    return std::count(w.begin(), w.end(), 'a') % 2 == 0;
}

namespace {

// Syllables of a reduced word with an even a-count: single letters from
// {b,c,d} and a-conjugated triples axa, paired greedily left to right.
struct Syllable {
    char core;
    bool conjugated;
};

std::vector<Syllable> split_syllables(std::string_view w) {
    std::vector<Syllable> out;
    std::size_t i = 0;
    while (i < w.size()) {
        if (w[i] == 'a') {
            if (i + 2 >= w.size() || !is_k4(w[i + 1]) || w[i + 2] != 'a')
                throw std::domain_error("word is not an alternating form with an even a-count");
            out.push_back({w[i + 1], true});
            i += 3;
        } else {
            out.push_back({w[i], false});
            ++i;
        }
    }
    return out;
}

char phi_left(const Syllable& s) {
    if (!s.conjugated) return s.core == 'd' ? 0 : 'a'; // b,c -> a; d -> 1
    switch (s.core) {                                  // aba -> c; aca -> d; ada -> b
    case 'b': return 'c';
    case 'c': return 'd';
    default: return 'b';
    }
}

char phi_right(const Syllable& s) {
    if (!s.conjugated) {
        switch (s.core) { // b -> c; c -> d; d -> b
        case 'b': return 'c';
        case 'c': return 'd';
        default: return 'b';
        }
    }
    return s.core == 'd' ? 0 : 'a'; // aba, aca -> a; ada -> 1
}

} // namespace

std::pair<std::string, std::string> phi(std::string_view w) {
    require_word(w);
    if (!is_reduced(w)) throw std::domain_error("phi requires a reduced word");
    if (!in_g1(w)) throw std::domain_error("phi requires an even number of a's");
    std::string left, right;
    for (const auto& s : split_syllables(w)) {
        if (const char x = phi_left(s)) left.push_back(x);
        if (const char x = phi_right(s)) right.push_back(x);
    }
    return {std::move(left), std::move(right)};
}

bool contraction_check(std::string_view w) {
    if (!is_reduced(w) || !in_g1(w) || w.size() <= 1)
        throw std::domain_error("contraction check requires a reduced G1 word of length > 1");
    auto [l, r] = phi(w);
    const double bound = 0.5 * static_cast<double>(w.size()) + 1.0;
    return static_cast<double>(reduce(l).size()) < bound &&
           static_cast<double>(reduce(r).size()) < bound;
}

bool is_trivial(std::string_view w) {
    const std::string red = reduce(w);
    if (red.empty()) return true;
    if (!in_g1(red)) return false;
    if (red.size() == 1) return false;
    auto [l, r] = phi(red);
    return is_trivial(l) && is_trivial(r);
}

bool TreeAction::is_identity() const {
    for (std::size_t i = 0; i < leaf_map.size(); ++i)
        if (leaf_map[i] != i) return false;
    return true;
}

namespace {

// Image of a leaf under one generator; bit (depth-1) selects the level-1
// child.
std::uint32_t apply_generator(char g, std::uint32_t leaf, int depth) {
    if (depth == 0) return leaf;
    const std::uint32_t top = 1u << (depth - 1);
    const bool right = (leaf & top) != 0;
    const std::uint32_t rest = leaf & (top - 1);
    switch (g) {
    case 'a':
        return leaf ^ top;
    case 'b': // (a, c)
        return (right ? top : 0u) | apply_generator(right ? 'c' : 'a', rest, depth - 1);
    case 'c': // (a, d)
        return (right ? top : 0u) | apply_generator(right ? 'd' : 'a', rest, depth - 1);
    case 'd': // (1, b)
        return right ? top | apply_generator('b', rest, depth - 1) : leaf;
    default:
        throw std::invalid_argument("unknown generator");
    }
}

} // namespace

TreeAction tree_action(std::string_view w, int depth) {
    require_word(w);
    if (depth < 1 || depth > 24) throw std::invalid_argument("tree depth out of range");
    TreeAction act;
    act.depth = depth;
    const std::uint32_t n = 1u << depth;
    act.leaf_map.resize(n);
    for (std::uint32_t leaf = 0; leaf < n; ++leaf) {
        std::uint32_t x = leaf;
        for (char g : w) x = apply_generator(g, x, depth);
        act.leaf_map[leaf] = x;
    }
    return act;
}

// ---------------------------------------------------------------------------
// Constructive completeness: building grammar witnesses.

namespace {

// One level of the word-problem recursion, oriented for generation:
// image_raw is the literal syllable-wise image of preimage_reduced, and the
// previous level's reduced word equals reduce(image_raw).
struct ChainLevel {
    bool left;
    std::string preimage_reduced;
    std::string image_raw;
};

// Finds a recursion branch from `v` (reduced) down to a seed with an odd
// a-count. Returns levels in generation order, or nullopt when v is trivial.
std::optional<std::vector<ChainLevel>> find_chain(const std::string& v, int guard) {
    if (guard < 0) throw WitnessConstructionError("word-problem chain search exceeded its bound");
    if (!in_g1(v)) return std::vector<ChainLevel>{};
    if (v.empty()) return std::nullopt;
    auto [l, r] = phi(v);
    for (int side = 0; side < 2; ++side) {
        const bool left = side == 0;
        const std::string& raw = left ? l : r;
        if (auto chain = find_chain(reduce(raw), guard - 1)) {
            chain->push_back({left, v, raw});
            return chain;
        }
    }
    return std::nullopt;
}

// One elementary reduction event, recorded while rewriting a word to normal
// form.
struct ReduceEvent {
    bool cancel;     // xx -> empty (otherwise a Klein-four merge xy -> z)
    std::size_t pos; // index of the pair in the word it was applied to
    char x, y;
};

// Applies leftmost elementary reductions until none remain, recording each.
std::vector<ReduceEvent> reduction_trace(std::string_view w, std::string* normal_form) {
    std::string cur(w);
    std::vector<ReduceEvent> events;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const char x = cur[i], y = cur[i + 1];
            if (x == y) {
                events.push_back({true, i, x, y});
                cur.erase(i, 2);
                changed = true;
                break;
            }
            if (is_k4(x) && is_k4(y)) {
                events.push_back({false, i, x, y});
                const char m = k4_product(x, y);
                cur.erase(i, 2);
                cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(i), m);
                changed = true;
                break;
            }
        }
    }
    if (normal_form) *normal_form = cur;
    return events;
}

// Tracks the unreduce phase: the current sentential form over {a,b,c,d,#},
// one recorded grammar step per u-application.
struct UnreduceBuilder {
    std::string z;
    std::vector<std::string> forms;

    std::size_t letter_index(std::size_t k) const {
        std::size_t seen = 0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (z[i] == '#') continue;
            if (seen == k) return i;
            ++seen;
        }
        throw WitnessConstructionError("letter index out of range during unreduce");
    }

    std::size_t letter_count() const {
        return z.size() - static_cast<std::size_t>(std::count(z.begin(), z.end(), '#'));
    }

    // Undo a Klein-four merge: the letter at position `pos` becomes x#y.
    void undo_merge(std::size_t pos, char x, char y) {
        const std::size_t i = letter_index(pos);
        z.replace(i, 1, std::string{x, '#', y});
        forms.push_back(z);
    }

    // Undo a cancellation: insert x#x at the junction before letter `pos`,
    // reusing a marker already in that gap when one exists.
    void undo_cancel(std::size_t pos, char x) {
        const std::size_t gap_end = pos < letter_count() ? letter_index(pos) : z.size();
        std::size_t gap_begin = gap_end;
        while (gap_begin > 0 && z[gap_begin - 1] == '#') --gap_begin;
        std::size_t marker;
        if (gap_begin < gap_end) {
            marker = gap_begin;
        } else if (gap_end < z.size()) {
            z.insert(z.begin() + static_cast<std::ptrdiff_t>(gap_end), '#');
            forms.push_back(z);
            marker = gap_end;
        } else {
            if (z.empty())
                throw WitnessConstructionError("cannot place a marker in an empty form");
            z.push_back('#');
            forms.push_back(z);
            marker = z.size() - 1;
        }
        z.replace(marker, 1, std::string{x, '#', x});
        forms.push_back(z);
    }
};

// Decorated image: the raw image letters with '@' at each erased syllable.
std::string decorate_with_placeholders(const std::string& preimage_reduced, bool left) {
    std::string out;
    for (const auto& s : split_syllables(preimage_reduced)) {
        const char img = left ? phi_left(s) : phi_right(s);
        out.push_back(img == 0 ? '@' : img);
    }
    return out;
}

std::string seed_form(std::string_view prefix, bool odd) {
    std::string out;
    for (char c : prefix) {
        out.push_back(c);
        out.push_back(' ');
    }
    out += odd ? "S1" : "S0";
    return out;
}

} // namespace

DerivationWitness derive_witness(std::string_view w_in) {
    require_word(w_in);
    const std::string w(w_in);
    auto chain_opt = find_chain(reduce(w), 4 * static_cast<int>(w.size()) + 64);
    if (!chain_opt) throw std::domain_error("word represents the identity; it has no witness");
    const auto& chain = *chain_opt;

    DerivationWitness witness;
    witness.axiom = "S0";
    witness.final_word = w;

    // Phase 1: spell the seed (the deepest raw image, or w itself when its
    // reduction already has an odd a-count).
    const std::string seed = chain.empty() ? w : chain.front().image_raw;
    {
        bool odd = false;
        std::string prefix;
        for (char c : seed) {
            prefix.push_back(c);
            if (c == 'a') odd = !odd;
            witness.steps.emplace_back("s", seed_form(prefix, odd));
        }
        if (!odd) throw WitnessConstructionError("seed word has an even a-count");
        witness.steps.emplace_back("s", seed);
    }

    for (std::size_t k = 0; k < chain.size(); ++k) {
        const ChainLevel& level = chain[k];

        // p*: insert '@' placeholders into the current raw image, one per
        // step, right to left so earlier positions stay put.
        const std::string decorated =
            decorate_with_placeholders(level.preimage_reduced, level.left);
        std::string cur = level.image_raw;
        for (std::size_t i = decorated.size(); i-- > 0;) {
            if (decorated[i] != '@') continue;
            const auto marks_left = static_cast<std::size_t>(std::count(
                decorated.begin(), decorated.begin() + static_cast<std::ptrdiff_t>(i), '@'));
            cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(i - marks_left), '@');
            witness.steps.emplace_back("p", cur);
        }
        if (cur != decorated) throw WitnessConstructionError("placeholder insertion went wrong");

        // One inversion step turns the decorated image into the preimage.
        witness.steps.emplace_back(level.left ? "h_L" : "h_R", level.preimage_reduced);

        // u* t: unreduce toward the next level's raw image (or w itself).
        const std::string& target = k + 1 < chain.size() ? chain[k + 1].image_raw : w;
        std::string normal;
        const auto events = reduction_trace(target, &normal);
        if (normal != level.preimage_reduced)
            throw WitnessConstructionError("reduction trace does not close the chain");
        UnreduceBuilder ub{level.preimage_reduced, {}};
        for (auto it = events.rbegin(); it != events.rend(); ++it) {
            if (it->cancel)
                ub.undo_cancel(it->pos, it->x);
            else
                ub.undo_merge(it->pos, it->x, it->y);
        }
        for (const auto& f : ub.forms) witness.steps.emplace_back("u", f);
        std::string tidied = ub.z;
        tidied.erase(std::remove(tidied.begin(), tidied.end(), '#'), tidied.end());
        if (tidied != target) throw WitnessConstructionError("unreduce missed its target");
        witness.steps.emplace_back("t", target);
    }

    auto check = coword_system().verify(witness);
    if (!check)
        throw WitnessConstructionError("constructed witness failed verification: " + check.reason);
    return witness;
}

EquivalenceReport coword_language_equivalence(int max_len) {
    EquivalenceReport report;
    std::string word;
    auto visit = [&](auto&& self) -> void {
        ++report.total;
        if (is_trivial(word)) {
            ++report.trivial;
            try {
                (void)derive_witness(word);
                ++report.failures; // a witness for a trivial word would be unsound
            } catch (const std::domain_error&) {
            }
        } else {
            ++report.nontrivial;
            try {
                auto witness = derive_witness(word);
                if (coword_system().verify(witness))
                    ++report.witnesses_verified;
                else
                    ++report.failures;
            } catch (const std::exception&) {
                ++report.failures;
            }
        }
        if (static_cast<int>(word.size()) >= max_len) return;
        for (char c : {'a', 'b', 'c', 'd'}) {
            word.push_back(c);
            self(self);
            word.pop_back();
        }
    };
    visit(visit);
    return report;
}

} // namespace grouplang::grig
