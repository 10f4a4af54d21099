// Cartesian sphere-factor splittings, the normed map mu_1, and the wedge
// decomposition of the suspension into stunted lens/projective spaces.
#pragma once

#include "lpt/cohomology.hpp"

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lpt {

/// Minimal dimension a_k of a nontrivial real Cliff(k)-module.
long clifford_module_dimension(int k);
/// a_k | m, i.e. R^m carries a Cliff(k)-module structure.
bool clifford_admits(int k, long m);

enum class SplitStatus { Splits, Unknown };

struct FactorStatus {
    int index;  // 2..r
    int sphere_dim;
    SplitStatus status;
    /// Rule that produced the splitting, or the machine-readable reason
    /// code for UNKNOWN.
    std::string rule;
};

inline constexpr const char* kNoInvariantMapKnown = "no-invariant-map-known";

struct CartesianSplitting {
    std::vector<FactorStatus> factors;
    /// Sphere dimensions split off, in index order.
    std::vector<int> split_factors;
    TupleSpec remainder;
};

CartesianSplitting cartesian_split(const TupleSpec& spec);

using C2 = std::array<std::complex<double>, 2>;

/// mu_1(z, w) = (i conj(z1) w1 + z2 conj(w2), -conj(z2) w1 - i z1 conj(w2)).
C2 mu1(const C2& z, const C2& w);
/// mu_k(z, w_1..w_k) = (mu_1(z, w_1), ..., mu_1(z, w_k)); w has size 2k.
std::vector<std::complex<double>> mu_k(const C2& z, std::span<const std::complex<double>> w);

struct StuntedSpace {
    Torsion t;
    int top;
    int bottom;  // -1 means the base point
};

struct WedgeSummand {
    /// Indices in {2..r}, ascending.
    std::vector<int> sigma;
    /// 2 - r_sigma; may be negative (formal desuspension).
    int shift;
    StuntedSpace stunted;
};

/// One summand per subset of {2..r}, subsets in lexicographic order.
std::vector<WedgeSummand> wedge_decomposition(const TupleSpec& spec, int k);

/// Reduced cohomology of CP_(top)(t) / CP_(bottom)(t), from its cell
/// structure (one cell per degree for finite t, even degrees for t = inf).
GradedAbGroup stunted_cohomology(Torsion t, int top, int bottom, CoeffMode mode);

struct WedgeCheck {
    bool ok;
    /// Lowest degree where the two sides differ.
    std::optional<int> first_mismatch;
    PoincareSeries wedge_side;
    PoincareSeries thom_side;
};

/// Compares sum_sigma s^{shift} P~(stunted) with s P~(T(k gamma)), where
/// P~(T(k gamma)) = s^{2k} P(CP_n(t)) for k > 0 and P~(CP_n(t)) for k = 0.
/// Field modes only.
WedgeCheck verify_wedge(const TupleSpec& spec, int k, CoeffMode mode);

/// Reduced Poincare series of the Thom space T(k gamma) (field modes).
PoincareSeries thom_reduced_poincare(const BundleSpec& bundle, CoeffMode mode);

}  // namespace lpt
