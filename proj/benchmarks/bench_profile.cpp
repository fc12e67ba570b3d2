// Compares the straightforward serial profile against the deduplicating
// kernel, and the kernel against itself across worker counts. The counts must
// agree; the timings show what the dedup and the OpenMP split buy.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "strucprof/families.hpp"
#include "strucprof/profile.hpp"

using namespace strucprof;
using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
    const int l = argc > 1 ? std::atoi(argv[1]) : 8;
    const int n_max = argc > 2 ? std::atoi(argv[2]) : 7;
#ifdef _OPENMP
    const int hw = omp_get_max_threads();
#else
    const int hw = 1;
#endif
    std::printf("host: half-graph prefix %d (%d vertices), n <= %d, %d hardware threads\n",
                l, 2 * l, n_max, hw);
    std::printf("%4s %12s %14s %14s %14s\n", "n", "reference/s", "kernel-1t/s",
                "kernel-mt/s", "count");
    const RelStructure host = ten_graph(2, l);
    for (int n = 0; n <= n_max; ++n) {
        auto t0 = Clock::now();
        const std::uint64_t ref = profile_exact_reference(host, n);
        const double t_ref = seconds_since(t0);
        t0 = Clock::now();
        const std::uint64_t one = profile_exact(host, n, 1);
        const double t_one = seconds_since(t0);
        t0 = Clock::now();
        const std::uint64_t many = profile_exact(host, n, hw);
        const double t_many = seconds_since(t0);
        if (ref != one || one != many) {
            std::printf("MISMATCH at n=%d: %llu %llu %llu\n", n,
                        static_cast<unsigned long long>(ref),
                        static_cast<unsigned long long>(one),
                        static_cast<unsigned long long>(many));
            return 1;
        }
        std::printf("%4d %12.4f %14.4f %14.4f %14llu\n", n, t_ref, t_one, t_many,
                    static_cast<unsigned long long>(ref));
    }
    return 0;
}
