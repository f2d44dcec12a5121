#include "grouplang/catalog.hpp"

#include <stdexcept>

namespace grouplang::catalog {

LSystem intermediate_growth_system() {
    LSystemBuilder b;
    b.alphabet({"a", "b", "q", "q'"}).terminals({"a", "b"}).axiom("q");
    b.table("h_a").rule("q", "q a q'");
    b.table("h_b").rule("q", "q b").rule("q'", "q' b");
    b.table("h_$").rule("q", "").rule("q'", "");
    b.control("(h_a|h_b)* h_a h_$");
    return b.build();
}

bool a_language_contains(std::string_view word) {
    if (word.empty() || word.front() != 'a') return false;
    long prev = -1;
    std::size_t i = 0;
    while (i < word.size()) {
        if (word[i] != 'a') return false;
        ++i;
        long run = 0;
        while (i < word.size() && word[i] == 'b') {
            ++run;
            ++i;
        }
        if (run < prev) return false;
        prev = run;
    }
    return true;
}

std::string kappa(long m, long n) {
    if (m <= 0 || n < 0) throw std::domain_error("kappa requires m > 0 and n >= 0");
    std::string out;
    out.reserve(static_cast<std::size_t>(m + n));
    long i = 1, j = 1;
    while (i <= m) {
        // Horizontal event j precedes vertical event i iff j*m <= i*n;
        // the epsilon-perturbed endpoint resolves ties in favor of h.
        if (j <= n && j * m <= i * n) {
            out += 'h';
            ++j;
        } else {
            out += 'v';
            ++i;
        }
    }
    return out;
}

LSystem crossing_sequence_system() {
    LSystemBuilder b;
    b.alphabet({"v", "h", "q"}).terminals({"v", "h"}).axiom("q");
    b.table("phi_q").rule("q", "q v");
    b.table("phi_v").rule("v", "h v");
    b.table("phi_h").rule("h", "v h");
    b.table("phi_s").rule("q", "v");
    b.control("phi_q* phi_s (phi_v|phi_h)*");
    return b.build();
}

namespace {

// { x^j : j >= 0 } for a single terminal token x.
LSystem star_system(const std::string& token) {
    LSystemBuilder b;
    b.alphabet({token, "Z"}).terminals({token}).axiom("Z");
    b.table("grow").rule("Z", token + " Z");
    b.table("stop").rule("Z", "");
    b.control("grow* stop");
    return b.build();
}

} // namespace

LSystem z2_semidirect_combing_system(const std::string& t_token,
                                     const std::string& t_inverse_token) {
    if (t_token == t_inverse_token)
        throw ValidationError("the stable-letter token and its inverse must differ");
    for (const auto& tok : {t_token, t_inverse_token})
        if (tok == "q" || tok == "v" || tok == "h")
            throw ValidationError("stable-letter token clashes with the crossing alphabet: " +
                                  tok);
    LSystem prefix = union_systems(star_system(t_token), star_system(t_inverse_token));
    return concat_systems(prefix, crossing_sequence_system());
}

LSystem grigorchuk_coword_system() {
    LSystemBuilder b;
    b.alphabet({"S0", "S1", "a", "b", "c", "d", "@", "#"}).terminals({"a", "b", "c", "d"});
    b.axiom("S0");
    // Generate seeds: words with an odd number of a's.
    b.table("s")
        .rule("S0", "a S1")
        .rule("S0", "b S0")
        .rule("S0", "c S0")
        .rule("S0", "d S0")
        .rule("S1", "a S0")
        .rule("S1", "b S1")
        .rule("S1", "c S1")
        .rule("S1", "d S1")
        .rule("S1", "");
    // Insert placeholders for syllables erased by the halving maps.
    b.table("p");
    for (const std::string x : {"a", "b", "c", "d"}) {
        b.rule(x, x);
        b.rule(x, "@ " + x);
        b.rule(x, x + " @");
    }
    // Invert the left half-map.
    b.table("h_L")
        .rule("a", "b")
        .rule("a", "c")
        .rule("b", "a d a")
        .rule("c", "a b a")
        .rule("d", "a c a")
        .rule("@", "d");
    // Invert the right half-map.
    b.table("h_R")
        .rule("a", "a b a")
        .rule("a", "a c a")
        .rule("b", "d")
        .rule("c", "b")
        .rule("d", "c")
        .rule("@", "a d a");
    // Unreduce: reintroduce subwords that cancel under the group identities,
    // with '#' marking each reduction site.
    b.table("u")
        .rule("a", "a")
        .rule("a", "# a")
        .rule("a", "a #")
        .rule("b", "b")
        .rule("b", "# b")
        .rule("b", "b #")
        .rule("b", "c # d")
        .rule("b", "d # c")
        .rule("c", "c")
        .rule("c", "# c")
        .rule("c", "c #")
        .rule("c", "b # d")
        .rule("c", "d # b")
        .rule("d", "d")
        .rule("d", "# d")
        .rule("d", "d #")
        .rule("d", "b # c")
        .rule("d", "c # b")
        .rule("#", "#")
        .rule("#", "a # a")
        .rule("#", "b # b")
        .rule("#", "c # c")
        .rule("#", "d # d");
    // Tidy: drop the reduction markers.
    b.table("t").rule("#", "");
    b.control("s* (p* (h_L|h_R) u* t)*");
    return b.build();
}

std::set<std::string> k_phi_u_words(const std::function<std::size_t(std::size_t)>& phi,
                                    const std::set<std::size_t>& U, std::size_t max_k) {
    std::set<std::string> out;
    for (std::size_t k : U) {
        if (k < 1 || k > max_k) continue;
        std::string block = "b" + std::string(phi(k), 'a');
        std::string word;
        for (std::size_t i = 0; i < k; ++i) word += block;
        out.insert(std::move(word));
    }
    return out;
}

std::optional<LSystem> builtin(std::string_view name) {
    if (name == "intermediate-growth") return intermediate_growth_system();
    if (name == "kappa") return crossing_sequence_system();
    if (name == "grigorchuk-coword") return grigorchuk_coword_system();
    if (name == "z2-semidirect") return z2_semidirect_combing_system();
    return std::nullopt;
}

std::vector<std::string> builtin_names() {
    return {"intermediate-growth", "kappa", "grigorchuk-coword", "z2-semidirect"};
}

} // namespace grouplang::catalog
