#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grouplang/lsystem.hpp"

namespace grouplang::growth {

class NonExhaustiveEnumeration : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GrowthSeries {
    std::vector<std::uint64_t> counts; // counts[n] = number of words of length n
    std::string source;
};

// Per-length word counts from an exhaustive enumeration; refuses (throws)
// when the enumeration cannot be certified exhaustive within the caps.
GrowthSeries growth_of_system(const LSystem& sys, std::size_t n_max, const SearchCaps& caps = {},
                              ExecPolicy policy = ExecPolicy::Serial);

// p(0..n_max) by the classic coin-style dynamic program.
std::vector<std::uint64_t> partition_counts(std::size_t n_max);

// Where the two-sided bound n^alpha < f(n) < beta^n holds, plus the
// successive-ratio trend.
struct BoundReport {
    double alpha = 0;
    double beta = 0;
    std::vector<std::size_t> lower_holds; // n with n^alpha < f(n)
    std::vector<std::size_t> upper_holds; // n with f(n) < beta^n
    std::vector<double> ratios;           // f(n+1)/f(n) where defined
};

BoundReport intermediate_growth_report(const GrowthSeries& f, double alpha, double beta);

// Growth of K(phi, U): f(n) = #{ k in U : k * (1 + phi(k)) = n }.
GrowthSeries k_phi_u_growth(const std::function<std::size_t(std::size_t)>& phi,
                            const std::function<bool(std::size_t)>& in_U, std::size_t n_max);

std::string to_csv(const GrowthSeries& series);

} // namespace grouplang::growth
