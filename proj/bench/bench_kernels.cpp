// Benchmark comparing the OpenMP-parallel kernels against their serial
// reference implementations.  Prints wall times and speedups.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cycdes/cyclic.hpp"
#include "cycdes/exceptional.hpp"
#include "cycdes/gens.hpp"
#include "cycdes/schur.hpp"
#include "cycdes/skew.hpp"

using namespace cycdes;

namespace {

double time_of(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

void report(const std::string& name, double serial, double parallel) {
    std::printf("%-38s %10.3fs %10.3fs %9.2fx\n", name.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run the serial code.\n\n");
#endif
    std::printf("%-38s %11s %11s %10s\n", "kernel", "serial", "parallel", "speedup");

    {
        const int n = 12;
        DegreeContext ctx(n);
        SkewShape shape = parse_shape("5,4,3");
        FiberTable a(n), b(n);
        double ts = time_of([&] { a = fiber_table_inner_serial(ctx, shape); });
        double tp = time_of([&] { b = fiber_table_inner(ctx, shape); });
        report("fiber table, inner route (n=12)", ts, tp);
        if (!(a == b)) std::printf("  MISMATCH between routes!\n");
    }
    {
        const int n = 11;
        SnDistributions a, b;
        double ts = time_of([&] { a = sn_multivariate_serial(n); });
        double tp = time_of([&] { b = sn_multivariate(n); });
        report("symmetric group distributions (n=11)", ts, tp);
        if (a.des != b.des || a.cdes != b.cdes) std::printf("  MISMATCH between routes!\n");
    }
    {
        const int m = 6, n = 9;
        std::vector<std::int64_t> a, b;
        double ts = time_of([&] { a = word_cdes_distribution_serial(m, n); });
        double tp = time_of([&] { b = word_cdes_distribution(m, n); });
        report("word distributions (m=6, n=9)", ts, tp);
        if (a != b) std::printf("  MISMATCH between routes!\n");
    }
    return 0;
}
