// Times the OpenMP enumeration kernels against their serial references on a
// few representative workloads and checks that both sides agree exactly.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "patternlab/enumerate.hpp"
#include "patternlab/transfer.hpp"

using namespace patternlab;

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

int failures = 0;

void row(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-28s %9.3fs %9.3fs %7.2fx  %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, equal ? "match" : "MISMATCH");
    if (!equal) ++failures;
}

}  // namespace

int main(int argc, char** argv) {
    const int threads = argc > 1 ? std::atoi(argv[1]) : 0;
#ifdef _OPENMP
    std::printf("threads: %d (max %d)\n", threads > 0 ? threads : omp_get_max_threads(),
                omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel kernels run serially\n");
#endif
    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

    EnumerateOptions opts;
    opts.threads = threads;
    opts.budget = 2'000'000'000ULL;

    {
        const PatternSet s{Pattern("123")};
        double t0 = now();
        const CountTable a = count_words_serial(s, 4, 10, opts);
        double t1 = now();
        const CountTable b = count_words(s, 4, 10, opts);
        double t2 = now();
        row("count_words 123 k=4 n=10", t1 - t0, t2 - t1, a.by_r == b.by_r);
    }
    {
        const PatternSet s{Pattern("12"), Pattern("21")};
        double t0 = now();
        const CountTable a = count_words_serial(s, 3, 12, opts);
        double t1 = now();
        const CountTable b = count_words(s, 3, 12, opts);
        double t2 = now();
        row("count_words {12,21} k=3 n=12", t1 - t0, t2 - t1, a.by_r == b.by_r);
    }
    {
        const AutomatonGraph g = build_automaton(Pattern("123"), 4);
        double t0 = now();
        const BigInt a = count_avoiders_bruteforce_serial(g, 14, opts);
        double t1 = now();
        const BigInt b = count_avoiders_bruteforce(g, 14, opts);
        double t2 = now();
        row("pruned avoiders 123 k=4 n=14", t1 - t0, t2 - t1,
            a == b && a == count_avoiders(g, 14));
    }
    {
        const PatternSet s{Pattern("132")};
        double t0 = now();
        const CountTable a = count_perms_serial(s, 9, opts);
        double t1 = now();
        const CountTable b = count_perms(s, 9, opts);
        double t2 = now();
        row("count_perms 132 n=9", t1 - t0, t2 - t1, a.by_r == b.by_r);
    }
    {
        const AutomatonGraph g = build_automaton(Pattern("132"), 4);
        double t0 = now();
        const SimulationResult a = simulate(g, 40, 2'000'000, 7, 1);
        double t1 = now();
        const SimulationResult b = simulate(g, 40, 2'000'000, 7, threads);
        double t2 = now();
        row("simulate 132 k=4 n=40", t1 - t0, t2 - t1, a.hits == b.hits);
    }
    return failures == 0 ? 0 : 1;
}
