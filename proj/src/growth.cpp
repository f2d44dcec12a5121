#include "grouplang/growth.hpp"

#include <cmath>
#include <sstream>

namespace grouplang::growth {

GrowthSeries growth_of_system(const LSystem& sys, std::size_t n_max, const SearchCaps& caps,
                              ExecPolicy policy) {
    auto res = sys.enumerate(n_max, caps, policy);
    if (!res.exhaustive)
        throw NonExhaustiveEnumeration(
            "enumeration hit a search cap; partial growth counts would be misleading");
    GrowthSeries out;
    out.counts.assign(n_max + 1, 0);
    for (const auto& w : res.words) {
        // Length in symbols: spaced words count tokens, plain words count chars.
        std::size_t len = 0;
        if (w.find(' ') == std::string::npos) {
            len = w.size();
        } else {
            std::istringstream in(w);
            std::string tok;
            while (in >> tok) ++len;
        }
        if (len <= n_max) ++out.counts[len];
    }
    out.source = "enumeration";
    return out;
}

std::vector<std::uint64_t> partition_counts(std::size_t n_max) {
    std::vector<std::uint64_t> p(n_max + 1, 0);
    p[0] = 1;
    for (std::size_t part = 1; part <= n_max; ++part)
        for (std::size_t n = part; n <= n_max; ++n) p[n] += p[n - part];
    return p;
}

BoundReport intermediate_growth_report(const GrowthSeries& f, double alpha, double beta) {
    BoundReport report;
    report.alpha = alpha;
    report.beta = beta;
    for (std::size_t n = 1; n < f.counts.size(); ++n) {
        const auto count = static_cast<double>(f.counts[n]);
        if (std::pow(static_cast<double>(n), alpha) < count) report.lower_holds.push_back(n);
        if (count < std::pow(beta, static_cast<double>(n))) report.upper_holds.push_back(n);
    }
    for (std::size_t n = 0; n + 1 < f.counts.size(); ++n) {
        if (f.counts[n] == 0) continue;
        report.ratios.push_back(static_cast<double>(f.counts[n + 1]) /
                                static_cast<double>(f.counts[n]));
    }
    return report;
}

GrowthSeries k_phi_u_growth(const std::function<std::size_t(std::size_t)>& phi,
                            const std::function<bool(std::size_t)>& in_U, std::size_t n_max) {
    GrowthSeries out;
    out.counts.assign(n_max + 1, 0);
    out.source = "k-phi-u";
    for (std::size_t k = 1; k <= n_max; ++k) {
        if (!in_U(k)) continue;
        const std::size_t len = k * (1 + phi(k));
        if (len <= n_max) ++out.counts[len];
    }
    return out;
}

std::string to_csv(const GrowthSeries& series) {
    std::ostringstream out;
    out << "n,count\n";
    for (std::size_t n = 0; n < series.counts.size(); ++n) out << n << ',' << series.counts[n] << '\n';
    return out.str();
}

} // namespace grouplang::growth
