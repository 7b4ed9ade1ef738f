// Serial-vs-parallel timing for the enumeration kernels.

#include "polytrope/fans.hpp"
#include "polytrope/geometry.hpp"
#include "polytrope/util.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace polytrope;

namespace {

template <typename F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %9.3fs %9.3fs   x%.2f\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    bool with_n5 = false;
    for (int i = 1; i < argc; ++i) with_n5 = with_n5 || std::strcmp(argv[i], "--n5") == 0;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#endif
    std::printf("%-28s %10s %10s\n", "kernel", "serial", "parallel");

    FanContext ctx4(4);
    EnumerateOptions opt;
    opt.seed = 7;

    {
        std::vector<SignVector> a, b;
        const double ts = timed([&] { a = brute_force_chambers_serial(ctx4); });
        const double tp = timed([&] { b = brute_force_chambers(ctx4); });
        row("brute force chambers n=4", ts, tp);
        if (a.size() != b.size()) std::printf("  MISMATCH %zu vs %zu\n", a.size(), b.size());
    }
    {
        EnumerationResult rs, rp;
        const double ts = timed([&] { rs = enumerate_maximal_serial(ctx4, opt); });
        const double tp = timed([&] { rp = enumerate_maximal(ctx4, opt); });
        row("enumerate maximal n=4", ts, tp);
        if (rs.records.size() != rp.records.size()) std::printf("  MISMATCH\n");
    }
    {
        EnumerationResult all = enumerate_all_cones(ctx4, opt);
        BoundaryPartition split = filter_boundary(all.records);
        std::map<int, long long> hs, hp;
        const double ts = timed([&] { hs = classify_serial(split.kept); });
        const double tp = timed([&] { hp = classify(split.kept); });
        row("classify 1013 witnesses", ts, tp);
        if (hs != hp) std::printf("  MISMATCH\n");
    }
    if (with_n5) {
        FanContext ctx5(5);
        EnumerationResult r;
        const double tp = timed([&] { r = enumerate_maximal(ctx5, opt); });
        std::printf("%-28s %10s %9.3fs   (%lld classes)\n", "enumerate maximal n=5", "-", tp,
                    r.stats.classes);
    }
    return 0;
}
