// Serial reference vs OpenMP kernel for the stats harness and the even-cycle scan.
#include <sr/cycles.hpp>
#include <sr/experiments.hpp>
#include <sr/matching.hpp>
#include <sr/transforms.hpp>

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <sstream>

namespace {

template <class F>
auto best_of(int reps, F && f) -> double
{
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count());
    }
    return best;
}

void report(const char * name, double serial, double parallel, bool same)
{
    std::printf("%-22s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name, serial, parallel,
            serial / parallel, same ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Serial vs OpenMP timings"};
    int n = 30, samples = 200, scan_n = 200, reps = 3;
    app.add_option("--stats-n", n, "Instance size for the stats harness");
    app.add_option("--samples", samples, "Instances for the stats harness");
    app.add_option("--scan-n", scan_n, "Instance size for the even-cycle scan");
    app.add_option("--reps", reps, "Repetitions; the best time is reported");
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d\n", omp_get_max_threads());

    sr::StatsConfig config{{n}, samples, 1};
    std::vector<sr::AggregateRow> a, b;
    double ts = best_of(reps, [&] { a = sr::run_stats_serial(config); });
    double tp = best_of(reps, [&] { b = sr::run_stats(config); });
    std::ostringstream ca, cb;
    sr::write_csv(ca, a);
    sr::write_csv(cb, b);
    report("stats harness", ts, tp, ca.str() == cb.str());

    auto inst = sr::random_instance(scan_n, sr::Seed{1});
    auto pairs = sr::stable_pairs(sr::construct_IT(inst).derived);
    std::vector<sr::Cycle> x, y;
    ts = best_of(reps, [&] { x = sr::even_stable_cycles(inst, pairs); });
    tp = best_of(reps, [&] { y = sr::even_stable_cycles_parallel(inst, pairs); });
    report("even-cycle scan", ts, tp, x == y);
    return 0;
}
