#include "lpt/oracle.hpp"

#include <stdexcept>

namespace lpt {

namespace {

struct BoundaryData {
    long rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1
};

BoundaryData analyze(const SparseMatrix& m, const CoeffMode& mode)
{
    BoundaryData out;
    if (m.nonzeros() == 0)
        return out;
    if (mode.kind() == CoeffRing::Kind::PrimeField) {
        out.rank = rank_mod_p(m, mode.characteristic());
        return out;
    }
    for (const auto& f : invariant_factors(m)) {
        ++out.rank;
        if (f > 1)
            out.torsion.push_back(f);
    }
    return out;
}

HomologyResult assemble(const QuotientComplex& c, const CoeffMode& mode, bool parallel)
{
    const auto degrees = static_cast<long>(c.boundary.size());
    std::vector<BoundaryData> data(static_cast<std::size_t>(degrees));
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (long d = 0; d < degrees; ++d)
        data[static_cast<std::size_t>(d)] = analyze(c.boundary[static_cast<std::size_t>(d)], mode);

    HomologyResult result{mode, {}, {}};
    for (long d = 0; d < degrees; ++d) {
        const long outgoing = data[static_cast<std::size_t>(d)].rank;
        const long incoming = d + 1 < degrees ? data[static_cast<std::size_t>(d + 1)].rank : 0;
        const long betti = c.ranks[static_cast<std::size_t>(d)] - outgoing - incoming;
        result.betti.push_back(betti);
        if (mode.kind() == CoeffRing::Kind::Integers) {
            if (betti > 0)
                result.integral.add_free(static_cast<int>(d), betti);
            if (d + 1 < degrees)
                for (const auto& f : data[static_cast<std::size_t>(d + 1)].torsion)
                    result.integral.add_torsion(static_cast<int>(d), f);
        }
    }
    return result;
}

}  // namespace

HomologyResult homology(const QuotientComplex& c, CoeffMode mode)
{
    return assemble(c, mode, true);
}

HomologyResult homology_serial(const QuotientComplex& c, CoeffMode mode)
{
    return assemble(c, mode, false);
}

GradedAbGroup cohomology_from_homology(const GradedAbGroup& h)
{
    GradedAbGroup out;
    for (const auto& [d, e] : h.entries()) {
        if (e.free_rank > 0)
            out.add_free(d, e.free_rank);
        for (const auto& f : e.torsion)
            out.add_torsion(d + 1, f);
    }
    return out.normalized();
}

OracleReport compare_with_theory(const TupleSpec& spec, CoeffMode mode, std::size_t cap)
{
    const QuotientComplex complex = product_quotient_complex(spec, cap);
    const HomologyResult h = homology(complex, mode);
    const GradedAbGroup theory = graded_groups(CohomologyRing::build(spec, mode)).normalized();

    OracleReport report{spec, mode, complex.size(), {}, true};
    if (mode.kind() == CoeffRing::Kind::Integers) {
        const GradedAbGroup oracle = cohomology_from_homology(h.integral);
        for (int d = 0; d <= spec.dim(); ++d) {
            const GroupEntry a = oracle.at(d);
            const GroupEntry b = theory.at(d);
            const bool ok = a.free_rank == b.free_rank && a.torsion == b.torsion;
            report.degrees.push_back({d, oracle.degree_string(d), theory.degree_string(d), ok});
            report.match = report.match && ok;
        }
    } else {
        for (int d = 0; d <= spec.dim(); ++d) {
            const long a = h.betti[static_cast<std::size_t>(d)];
            const long b = theory.at(d).free_rank;
            const bool ok = a == b && theory.at(d).torsion.empty();
            report.degrees.push_back({d, std::to_string(a), std::to_string(b), ok});
            report.match = report.match && ok;
        }
    }
    return report;
}

}  // namespace lpt
