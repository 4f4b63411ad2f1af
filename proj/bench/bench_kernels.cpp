// Benchmark of the OpenMP enumeration kernel against the serial reference,
// plus the finite scans. Usage: bench_kernels [cutoff].

#include "cubiczeta/finite_checks.hpp"
#include "cubiczeta/orbits.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace cubiczeta;

namespace {

template <class F>
double time_once(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    long long cutoff = argc > 1 ? std::atoll(argv[1]) : 3000;

    size_t n_ref = 0, n_par = 0;
    double t_ref = time_once([&] { n_ref = enumerate_orbits_reference(cutoff).size(); });
    double t_par1 = time_once([&] { n_par = enumerate_orbits(cutoff, {1}).size(); });
#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    double t_parn = time_once([&] { n_par = enumerate_orbits(cutoff, {threads}).size(); });

    std::printf("enumeration to |disc| <= %lld\n", cutoff);
    std::printf("  serial reference : %8.3fs  (%zu orbits)\n", t_ref, n_ref);
    std::printf("  kernel, 1 thread : %8.3fs  (%zu orbits)\n", t_par1, n_par);
    std::printf("  kernel, %d thread%s: %8.3fs  speedup %.2fx vs reference\n", threads,
                threads == 1 ? " " : "s", t_parn, t_ref / t_parn);
    if (n_ref != n_par) {
        std::printf("MISMATCH between kernels!\n");
        return 1;
    }

    double t16 = time_once([] { check_lemma_mod16(); });
    double t32 = time_once([] { check_partition_mod32(); });
    std::printf("finite scans: mod-16 %.3fs, mod-32 %.3fs\n", t16, t32);
    return 0;
}
