// Serial reference kernels against the OpenMP sweeps on the full corpus.
// Usage: bench_sweeps [workers] [filtration-height]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "aptrans/corpus.hpp"
#include "aptrans/sweeps.hpp"

using namespace aptrans;

namespace {

template <class F>
double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void line(const char* name, double serial, double parallel, bool same) {
    std::printf("%-12s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const int workers = argc > 1 ? std::atoi(argv[1]) : available_workers();
    const std::int64_t height = argc > 2 ? std::atoll(argv[2]) : 6;
    const auto corpus = parameter_corpus();
    std::printf("corpus %zu parameters, %d workers\n", corpus.size(), workers);

    std::vector<UniquenessRow> us, up;
    const double u1 = seconds([&] { us = sweep_uniqueness_serial(corpus, {}); });
    const double u2 = seconds([&] { up = sweep_uniqueness(corpus, {}, workers); });
    line("uniqueness", u1, u2, us == up);

    std::vector<TwistedRow> ts, tp;
    const double t1 = seconds([&] { ts = sweep_twisted_serial(6, 3, 100, 1); });
    const double t2 = seconds([&] { tp = sweep_twisted(6, 3, 100, 1, workers); });
    line("twisted", t1, t2, ts == tp);

    std::vector<FiltrationRow> fs, fp;
    const double f1 = seconds([&] { fs = sweep_filtration_serial(corpus, height); });
    const double f2 = seconds([&] { fp = sweep_filtration(corpus, height, workers); });
    line("filtration", f1, f2, fs == fp);
    return us == up && ts == tp && fs == fp ? 0 : 1;
}
