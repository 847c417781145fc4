// Benchmark: serial reference vs OpenMP verification kernels.
//
// Workloads: the seeded ball census over D(5,11) for the mu=3 product code,
// and the exhaustive partition check repeated over D(2,1).

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "doob/product.hpp"
#include "doob/verify.hpp"

using namespace doob;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

template <typename F>
double timed(F&& f) {
    const auto t0 = clock_type::now();
    f();
    return seconds_since(t0);
}

}  // namespace

int main(int argc, char** argv) {
    uint64_t samples = 200000;
    int repeats = 50;
    if (argc > 1) samples = std::stoull(argv[1]);
    if (argc > 2) repeats = std::stoi(argv[2]);

#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "openmp: not enabled in this build\n";
#endif

    {
        const ProductCodeSpec S = product_for_mu(3, 5);
        const MixedAmbient amb{S.ambient_m(), S.ambient_n(), 0};
        const MixedPredicate member = [S](const MixedVertex& v) {
            static thread_local DoobVertex scratch;
            from_mixed_into(v, scratch);
            return product_membership(S, scratch);
        };
        bool ok_serial = false, ok_parallel = false;
        const double ts = timed([&] { ok_serial = verify_sampled_serial(member, amb, samples, 1).pass(); });
        const double tp = timed([&] { ok_parallel = verify_sampled(member, amb, samples, 1).pass(); });
        std::cout << "sampled census, D(5,11) product, N=" << samples << "\n"
                  << "  serial:   " << ts << " s (" << (ok_serial ? "pass" : "FAIL") << ")\n"
                  << "  openmp:   " << tp << " s (" << (ok_parallel ? "pass" : "FAIL") << ")\n"
                  << "  speedup:  " << (tp > 0 ? ts / tp : 0.0) << "x\n";
        if (ok_serial != ok_parallel) {
            std::cerr << "verdict mismatch between serial and parallel kernels\n";
            return 1;
        }
    }

    {
        const CheckMatrixE M = build_check_matrix(0, 1);
        const MixedAmbient amb{2, 1, 0};
        const MixedPredicate member = [M](const MixedVertex& v) {
            return is_codeword(M, from_mixed(v));
        };
        uint64_t acc_s = 0, acc_p = 0;
        const double ts = timed([&] {
            for (int i = 0; i < repeats; ++i) acc_s += verify_exhaustive_serial(member, amb).codeword_count;
        });
        const double tp = timed([&] {
            for (int i = 0; i < repeats; ++i) acc_p += verify_exhaustive(member, amb).codeword_count;
        });
        std::cout << "exhaustive partition, D(2,1) x" << repeats << "\n"
                  << "  serial:   " << ts << " s\n"
                  << "  openmp:   " << tp << " s\n";
        if (acc_s != acc_p) {
            std::cerr << "codeword-count mismatch between serial and parallel kernels\n";
            return 1;
        }
    }
    return 0;
}
