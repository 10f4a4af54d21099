#include "lpt/splittings.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpt {

long clifford_module_dimension(int k)
{
    static constexpr long kBase[] = {2, 4, 4, 8, 8, 8, 8, 16};
    if (k < 1)
        throw std::invalid_argument("Clifford index must be positive");
    if (k > 100)
        throw std::overflow_error("Clifford module dimension too large");
    long a = kBase[(k - 1) % 8];
    for (int i = 0; i < (k - 1) / 8; ++i)
        a *= 16;
    return a;
}

bool clifford_admits(int k, long m)
{
    if (m <= 0)
        return false;
    return m % clifford_module_dimension(k) == 0;
}

CartesianSplitting cartesian_split(const TupleSpec& spec)
{
    const int n1 = spec.n1();
    const Torsion t = spec.t();
    std::vector<FactorStatus> factors;
    std::vector<int> split_dims;
    std::vector<int> remaining{n1};
    for (int i = 2; i <= spec.r(); ++i) {
        const int ni = spec.n_at(i);
        std::string rules;
        auto fire = [&](const char* name) { rules += (rules.empty() ? "" : "+") + std::string(name); };
        if (n1 == 0)
            fire("n1=0");
        if (n1 == 1 && ni % 2 == 1)
            fire("n1=1,n_i-odd");
        if (t.is_finite() && t.order() == 2 && clifford_admits(2 * n1 + 1, 2L * ni + 2))
            fire("t=2,clifford");
        if (rules.empty()) {
            factors.push_back({i, 2 * ni + 1, SplitStatus::Unknown, kNoInvariantMapKnown});
            remaining.push_back(ni);
        } else {
            factors.push_back({i, 2 * ni + 1, SplitStatus::Splits, rules});
            split_dims.push_back(2 * ni + 1);
        }
    }
    return CartesianSplitting{factors, split_dims, TupleSpec(remaining, t)};
}

C2 mu1(const C2& z, const C2& w)
{
    const std::complex<double> i(0.0, 1.0);
    return {i * std::conj(z[0]) * w[0] + z[1] * std::conj(w[1]),
            -std::conj(z[1]) * w[0] - i * z[0] * std::conj(w[1])};
}

std::vector<std::complex<double>> mu_k(const C2& z, std::span<const std::complex<double>> w)
{
    if (w.size() % 2 != 0)
        throw std::invalid_argument("mu_k needs an even number of complex coordinates");
    std::vector<std::complex<double>> out;
    out.reserve(w.size());
    for (std::size_t b = 0; b < w.size(); b += 2) {
        C2 block = mu1(z, {w[b], w[b + 1]});
        out.push_back(block[0]);
        out.push_back(block[1]);
    }
    return out;
}

std::vector<WedgeSummand> wedge_decomposition(const TupleSpec& spec, int k)
{
    if (k < 0)
        throw std::invalid_argument("bundle multiple k must be non-negative");
    const int r = spec.r();
    const int n1 = spec.n1();
    std::vector<std::vector<int>> subsets;
    for (std::uint64_t mask = 0; mask < (1ULL << (r - 1)); ++mask) {
        std::vector<int> sigma;
        for (int i = 2; i <= r; ++i)
            if (mask >> (i - 2) & 1ULL)
                sigma.push_back(i);
        subsets.push_back(std::move(sigma));
    }
    std::sort(subsets.begin(), subsets.end());
    std::vector<WedgeSummand> out;
    for (auto& sigma : subsets) {
        const int r_sigma = static_cast<int>(sigma.size()) + 1;
        long size = n1;
        for (int i : sigma)
            size += spec.n_at(i);
        const int top = static_cast<int>(size + k + r_sigma - 1);
        const int bottom = static_cast<int>(size - n1 + k + r_sigma - 2);
        out.push_back({std::move(sigma), 2 - r_sigma, {spec.t(), top, bottom}});
    }
    return out;
}

GradedAbGroup stunted_cohomology(Torsion t, int top, int bottom, CoeffMode mode)
{
    if (bottom < -1 || bottom >= top)
        throw std::invalid_argument("stunted space needs -1 <= bottom < top");
    GradedAbGroup g;
    if (t.is_infinite()) {
        for (int a = bottom + 1; a <= top; ++a)
            if (a > 0)
                g.add_free(2 * a, 1);
        return g;
    }
    // Cells e^j for lo <= j <= hi; the coboundary e^{odd} -> e^{even} is
    // multiplication by t, the other one vanishes.
    const int lo = bottom < 0 ? 1 : 2 * bottom + 2;
    const int hi = 2 * top + 1;
    const long order = t.order();
    const bool integral = mode.kind() == CoeffRing::Kind::Integers;
    const bool t_invertible =
        mode.kind() == CoeffRing::Kind::Rationals ||
        (mode.kind() == CoeffRing::Kind::PrimeField && order % mode.characteristic() != 0);
    for (int j = lo; j <= hi; ++j) {
        const bool incoming = j % 2 == 0 && j - 1 >= lo;
        const bool outgoing = j % 2 == 1 && j + 1 <= hi;
        if (integral) {
            if (outgoing)
                continue;  // multiplication by t is injective on Z
            if (incoming)
                g.add_torsion(j, BigInt(order));
            else
                g.add_free(j, 1);
        } else if (t_invertible) {
            if (!outgoing && !incoming)
                g.add_free(j, 1);
        } else {
            g.add_free(j, 1);
        }
    }
    return g;
}

PoincareSeries thom_reduced_poincare(const BundleSpec& bundle, CoeffMode mode)
{
    PoincareSeries base = poincare_polynomial(CohomologyRing::build(bundle.base, mode));
    return base.shifted(2 * bundle.k);
}

WedgeCheck verify_wedge(const TupleSpec& spec, int k, CoeffMode mode)
{
    if (!is_field(mode))
        throw std::invalid_argument("wedge bookkeeping compares Poincare series over a field");
    PoincareSeries wedge;
    for (const auto& s : wedge_decomposition(spec, k)) {
        GradedAbGroup g = stunted_cohomology(s.stunted.t, s.stunted.top, s.stunted.bottom, mode);
        wedge = wedge + PoincareSeries::from_group(g).shifted(s.shift);
    }
    PoincareSeries thom = k > 0 ? thom_reduced_poincare({k, spec}, mode)
                                : poincare_polynomial(CohomologyRing::build(spec, mode)).reduced();
    thom = thom.shifted(1);
    WedgeCheck check{wedge == thom, std::nullopt, wedge, thom};
    if (!check.ok) {
        PoincareSeries diff = wedge;
        for (const auto& [d, c] : thom.terms())
            diff.add(d, -c);
        check.first_mismatch = diff.terms().begin()->first;
    }
    return check;
}

}  // namespace lpt
