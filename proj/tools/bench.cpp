// Benchmark comparing the serial reference paths against the OpenMP kernels:
// corpus sweeps and breadth-first enumeration. Results of the two paths are
// checked for equality before timings are reported.

#include <chrono>
#include <cstdio>
#include <string>

#include "grouplang/batch.hpp"
#include "grouplang/catalog.hpp"
#include "grouplang/lsystem.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename Fn>
double time_of(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void report(const std::string& name, double serial, double parallel, bool equal) {
    std::printf("%-34s %9.3fs %9.3fs %6.2fx  %s\n", name.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, equal ? "results equal" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both columns run serially\n");
#endif
    std::printf("%-34s %10s %10s %7s\n", "kernel", "serial", "parallel", "speedup");

    {
        grouplang::batch::SweepResult a, b;
        const double ts = time_of([&] { a = grouplang::batch::grig_wp_agreement(7, false); });
        const double tp = time_of([&] { b = grouplang::batch::grig_wp_agreement(7, true); });
        report("grig word problem sweep (len 7)", ts, tp,
               a.checked == b.checked && a.mismatches == b.mismatches);
    }
    {
        grouplang::batch::SweepResult a, b;
        const double ts = time_of([&] { a = grouplang::batch::grig_witness_sweep(7, false); });
        const double tp = time_of([&] { b = grouplang::batch::grig_witness_sweep(7, true); });
        report("grig witness sweep (len 7)", ts, tp,
               a.checked == b.checked && a.mismatches == b.mismatches);
    }
    {
        grouplang::batch::RandomSoundnessResult a, b;
        const double ts = time_of(
            [&] { a = grouplang::batch::grig_random_soundness(4000, 64, 40, 7, false); });
        const double tp = time_of(
            [&] { b = grouplang::batch::grig_random_soundness(4000, 64, 40, 7, true); });
        report("grig random derivations (4000)", ts, tp,
               a.derivations == b.derivations && a.violations == b.violations &&
                   a.attempts == b.attempts);
    }
    {
        grouplang::batch::AgreementResult a, b;
        const double ts = time_of([&] { a = grouplang::batch::primitive_agreement(5, 3, false); });
        const double tp = time_of([&] { b = grouplang::batch::primitive_agreement(5, 3, true); });
        report("primitive agreement (F3, len 5)", ts, tp,
               a.words == b.words && a.whitehead_mismatches == b.whitehead_mismatches);
    }
    {
        const auto sys = grouplang::catalog::intermediate_growth_system();
        grouplang::EnumerationResult a, b;
        const grouplang::SearchCaps caps{512, 128, 4'000'000};
        const double ts = time_of(
            [&] { a = sys.enumerate(24, caps, grouplang::ExecPolicy::Serial); });
        const double tp = time_of(
            [&] { b = sys.enumerate(24, caps, grouplang::ExecPolicy::Parallel); });
        report("enumerate intermediate (len 24)", ts, tp,
               a.words == b.words && a.exhaustive == b.exhaustive);
    }
    return 0;
}
