// Benchmark: OpenMP kernels against their serial references.
//
//   theta_all vs theta_all_serial   (segmented sieve + per-class sums)
//   parallel character zero scan vs one-character-at-a-time loop

#include <chrono>
#include <cstdio>
#include <vector>

#include "antk/chars.hpp"
#include "antk/primes.hpp"
#include "antk/zeros.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bench_theta(double x, int64_t q) {
    auto t0 = Clock::now();
    auto serial = antk::primes::theta_all_serial(x, q);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    auto parallel = antk::primes::theta_all(x, q);
    double tp = seconds_since(t0);
    double maxdiff = 0.0;
    for (int64_t a = 0; a < q; ++a) {
        maxdiff = std::max(maxdiff, std::abs(serial.by_class[static_cast<std::size_t>(a)] -
                                             parallel.by_class[static_cast<std::size_t>(a)]));
    }
    std::printf("theta_all x=%.0e q=%lld: serial %.3fs, parallel %.3fs (x%.2f), max class diff %.3g\n",
                x, static_cast<long long>(q), ts, tp, ts / tp, maxdiff);
}

void bench_scan(int64_t qmax, double T) {
    std::vector<antk::chars::DirichletCharacter> prims;
    for (int64_t q = 1; q <= qmax; ++q) {
        auto g = antk::chars::character_group(q);
        for (const auto& chi : g.characters())
            if (chi.is_primitive()) prims.push_back(chi);
    }
    auto t0 = Clock::now();
    std::size_t serial_zeros = 0;
    for (const auto& chi : prims)
        serial_zeros += antk::zeros::critical_line_zeros(chi, T).records.size();
    double ts = seconds_since(t0);

    t0 = Clock::now();
    std::vector<std::size_t> counts(prims.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < prims.size(); ++i) {
        counts[i] = antk::zeros::critical_line_zeros(prims[i], T).records.size();
    }
    double tp = seconds_since(t0);
    std::size_t parallel_zeros = 0;
    for (auto c : counts) parallel_zeros += c;
    std::printf("zero scan q<=%lld T=%.0f: serial %.3fs (%zu zeros), parallel %.3fs (%zu zeros), x%.2f\n",
                static_cast<long long>(qmax), T, ts, serial_zeros, tp, parallel_zeros, ts / tp);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel kernels run serially\n");
#endif
    bench_theta(1e7, 7);
    bench_theta(5e7, 101);
    bench_scan(10, 30.0);
    return 0;
}
