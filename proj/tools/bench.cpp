// Times the OpenMP tree Laplacian against the serial reference on a
// radially seeded ball and reports speedup per repetition.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "mvp/tree.hpp"

using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
    CLI::App app{"Tree Laplacian benchmark: OpenMP kernel vs serial reference"};
    long q = 3;
    int radius = 10, reps = 3, threads = 0;
    app.add_option("--q", q, "branching number")->check(CLI::Range(2l, 64l));
    app.add_option("--radius", radius, "ball radius")->check(CLI::Range(1, 16));
    app.add_option("--reps", reps, "repetitions")->check(CLI::PositiveNumber);
    app.add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (threads > 0)
        omp_set_num_threads(threads);
#endif

    mvp::TreeFn f = mvp::TreeFn::make_zeroed(q, radius);
    f.at(0, 0) = mvp::Rational(1);
    for (int l = 1; l <= radius; ++l) {
        mvp::Rational v = mvp::rat_pow(mvp::Rational(1, q * q), l);
        std::size_t sz = f.level_size(l);
        for (std::size_t w = 0; w < sz; ++w)
            f.at(l, w) = v;
    }

    std::printf("q=%ld radius=%d vertices=%zu\n", q, radius, f.values.size());
    std::printf("%-6s %12s %12s %9s %7s\n", "rep", "serial[s]", "openmp[s]", "speedup",
                "equal");
    for (int r = 1; r <= reps; ++r) {
        auto t0 = Clock::now();
        mvp::TreeFn a = mvp::tree_laplacian_serial(f);
        double ts = seconds_since(t0);

        t0 = Clock::now();
        mvp::TreeFn b = mvp::tree_laplacian(f);
        double tp = seconds_since(t0);

        bool equal = (a.values == b.values);
        std::printf("%-6d %12.4f %12.4f %9.2f %7s\n", r, ts, tp, ts / tp,
                    equal ? "yes" : "NO");
        if (!equal)
            return 1;
    }
    return 0;
}
