#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "grouplang/lsystem.hpp"

namespace grouplang::catalog {

// The EDT0L system generating A = { a b^{i_1} a b^{i_2} ... a b^{i_k} :
// 0 <= i_1 <= ... <= i_k, k >= 1 }, a language of intermediate growth.
// Extended alphabet {a, b, q, q'}, start symbol q.
LSystem intermediate_growth_system();

// Direct membership test for the language A above.
bool a_language_contains(std::string_view word);

// Crossing sequence of the segment from the origin to (m, n + epsilon):
// an 'h' for every horizontal grid line crossed and a 'v' for every vertical
// one, ties resolved by exact arithmetic (h first when j*m <= i*n).
std::string kappa(long m, long n);

// The EDT0L system generating { kappa(m, n) : m > 0, n >= 0 } over {v, h}.
LSystem crossing_sequence_system();

// Asynchronous-combing language for Z^2 x| Z: { t^j : j >= 0 } united with
// { T^j : j >= 0 }, concatenated with the crossing-sequence language.
// Built from the union/concatenation combinators.
LSystem z2_semidirect_combing_system(const std::string& t_token = "t",
                                     const std::string& t_inverse_token = "T");

// The eight-symbol ET0L system whose language is the set of words over
// {a, b, c, d} that represent nontrivial elements of the Grigorchuk group.
LSystem grigorchuk_coword_system();

// K(phi, U) = { (b a^{phi(k)})^k : k in U }, listed for 1 <= k <= max_k.
std::set<std::string> k_phi_u_words(const std::function<std::size_t(std::size_t)>& phi,
                                    const std::set<std::size_t>& U, std::size_t max_k);

// CLI builtin names: intermediate-growth, kappa, grigorchuk-coword,
// z2-semidirect.
std::optional<LSystem> builtin(std::string_view name);
std::vector<std::string> builtin_names();

} // namespace grouplang::catalog
