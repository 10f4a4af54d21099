// Serial vs OpenMP timings for oracle complex assembly and homology.
#include "lpt/oracle.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>

using namespace lpt;

namespace {

template <class F>
double seconds(F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main()
{
    const TupleSpec specs[] = {
        TupleSpec({2, 2, 2}, Torsion::finite(6)),
        TupleSpec({1, 2, 2}, Torsion::finite(6)),
        TupleSpec({2, 2, 2}, Torsion::finite(4)),
        TupleSpec({2, 2}, Torsion::finite(12)),
    };
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-14s %-4s %8s %10s %10s %10s %10s\n", "spec", "mode", "cells", "build_s", "build_p", "homol_s",
                "homol_p");
    for (const auto& spec : specs) {
        for (const auto& mode : {CoeffMode::integers(), CoeffMode::prime_field(2)}) {
            QuotientComplex a = product_quotient_complex_serial(spec);
            QuotientComplex b = product_quotient_complex(spec);
            const double bs = seconds([&] { a = product_quotient_complex_serial(spec); });
            const double bp = seconds([&] { b = product_quotient_complex(spec); });
            HomologyResult hs{mode, {}, {}}, hp{mode, {}, {}};
            const double hs_t = seconds([&] { hs = homology_serial(a, mode); });
            const double hp_t = seconds([&] { hp = homology(b, mode); });
            if (hs.betti != hp.betti || !(hs.integral == hp.integral)) {
                std::fprintf(stderr, "serial and parallel results differ for %s\n", spec.to_string().c_str());
                return 1;
            }
            std::printf("%-14s %-4s %8zu %10.4f %10.4f %10.4f %10.4f\n", spec.to_string().c_str(),
                        coeff_mode_name(mode).c_str(), a.size(), bs, bp, hs_t, hp_t);
        }
    }
    return 0;
}
