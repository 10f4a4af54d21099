// Graded cohomology rings of lens product spaces over Z, Q and F_p.
//
// The ring is presented as B (x) Lambda[x_2, ..., x_r] where B is the ring
// of the base CP_(n1)(t), deg x_i = 2 n_i + 1 and x_i^2 = 0. Every product
// of basis monomials is a signed basis monomial or zero, so linear
// combinations are plain maps from monomial to coefficient.
#pragma once

#include "lpt/algebra.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lpt {

/// Coefficients for cohomology: Z, Q or F_p.
using CoeffMode = CoeffRing;

/// Accepts Z, Q, F2, Fp and F:p.
CoeffMode parse_coeff_mode(const std::string& text);
/// "Z", "Q", "F2", "F:3", ... (the spelling parse_coeff_mode accepts).
std::string coeff_mode_name(const CoeffMode& mode);
inline bool is_field(const CoeffMode& mode) { return mode.kind() != CoeffRing::Kind::Integers; }

/// How the base ring B is presented for a given (t, mode).
enum class Presentation {
    Projective,    // t = inf: Z[z]/(z^{n1+1})
    IntegralLens,  // finite t over Z: z^a of order t, plus a free omega
    TInvertible,   // Q or F_p with p not dividing t: {1, omega}
    PrimaryLens,   // F_p with p | t: y (deg 1) and z (deg 2)
};

struct BasePart {
    enum class Kind : std::uint8_t { ZPow, Omega, YZ };

    Kind kind = Kind::ZPow;
    int eps = 0;  // power of y, YZ only
    int a = 0;    // power of z

    static BasePart zpow(int a) { return {Kind::ZPow, 0, a}; }
    static BasePart omega() { return {Kind::Omega, 0, 0}; }
    static BasePart yz(int eps, int a) { return {Kind::YZ, eps, a}; }

    auto operator<=>(const BasePart&) const = default;
};

struct BasisMonomial {
    BasePart base;
    /// Bit i set means x_i is a factor (2 <= i <= r).
    std::uint64_t exterior = 0;

    auto operator<=>(const BasisMonomial&) const = default;
};

using Combination = std::map<BasisMonomial, BigInt>;

class CohomologyRing {
public:
    /// Throws std::invalid_argument when t is infinite and the mode is
    /// not Z, Q or a prime field (never, in practice) or on bad tuples.
    static CohomologyRing build(const TupleSpec& spec, CoeffMode mode);

    const TupleSpec& spec() const { return spec_; }
    const CoeffMode& mode() const { return mode_; }
    Presentation presentation() const { return presentation_; }
    /// nu_p(t) for the PrimaryLens presentation, otherwise 0.
    int primary_exponent() const { return primary_exponent_; }
    /// True when y^2 = z (p = 2 and nu_2(t) = 1).
    bool y_squared_is_z() const;

    /// Basis ordered by degree.
    const std::vector<BasisMonomial>& basis() const { return basis_; }
    std::vector<BasisMonomial> basis_in_degree(int degree) const;
    bool contains(const BasisMonomial& m) const;
    int degree(const BasisMonomial& m) const;
    int base_degree(const BasePart& b) const;
    /// Order of the cyclic group spanned by m in INT mode; nullopt when free
    /// (and always nullopt in field modes).
    std::optional<long> torsion_order(const BasisMonomial& m) const;

    BasisMonomial unit() const;
    /// Ring generators: z or y and z or omega, followed by x_2 .. x_r.
    std::vector<BasisMonomial> generators() const;
    std::vector<std::string> relations() const;
    std::string name(const BasisMonomial& m) const;
    std::string to_string(const Combination& c) const;

    /// Signed product of two basis monomials; nullopt when it vanishes.
    std::optional<std::pair<BasisMonomial, int>> multiply_monomials(const BasisMonomial& a,
                                                                    const BasisMonomial& b) const;
    /// Rejects monomials outside the basis with std::invalid_argument.
    Combination multiply(const BasisMonomial& a, const BasisMonomial& b) const;
    Combination multiply(const Combination& a, const Combination& b) const;
    /// Reduces coefficients (mod p, or mod the torsion order) and drops zeros.
    void normalize(Combination& c) const;
    Combination single(const BasisMonomial& m, const BigInt& coeff = 1) const;

private:
    CohomologyRing(TupleSpec spec, CoeffMode mode);

    std::optional<std::pair<BasePart, int>> multiply_base(const BasePart& a, const BasePart& b) const;
    bool base_is_odd(const BasePart& b) const;
    int exterior_parity(std::uint64_t mask) const;

    TupleSpec spec_;
    CoeffMode mode_;
    Presentation presentation_;
    int primary_exponent_ = 0;
    std::vector<BasisMonomial> basis_;
    std::map<BasisMonomial, int> degree_of_;
};

/// The k-fold Whitney sum of the canonical line bundle over CP_n(t).
struct BundleSpec {
    int k;
    TupleSpec base;
};

GradedAbGroup graded_groups(const CohomologyRing& ring);
/// Field modes only; throws std::invalid_argument for Z.
PoincareSeries poincare_polynomial(const CohomologyRing& ring);

/// Injective map p*: H(CP_m(t)) -> H(CP_n(t)) for m obtained by keeping the
/// coordinates in `kept` (1-based, must contain 1), and its retraction j*
/// on the image.
class RestrictionMap {
public:
    RestrictionMap(const TupleSpec& full, CoeffMode mode, std::vector<int> kept);

    const CohomologyRing& source() const { return source_; }
    const CohomologyRing& target() const { return target_; }
    const std::vector<int>& kept() const { return kept_; }
    BasisMonomial apply(const BasisMonomial& m) const;
    /// j* on the image of p*; nullopt for monomials outside the image.
    std::optional<BasisMonomial> section(const BasisMonomial& m) const;
    std::vector<BasisMonomial> image() const;

private:
    std::vector<int> kept_;
    CohomologyRing source_;
    CohomologyRing target_;
};

RestrictionMap restriction_p(const TupleSpec& full, CoeffMode mode, std::vector<int> kept);

/// Effect of pi*: CP_n(t') -> CP_n(t) on generators.
struct ProjectionRule {
    long t;
    Torsion t_prime;
    /// Multiple of omega that omega' pulls back to; absent when t' = inf.
    std::optional<long> omega_factor;
    std::string describe() const;
};

/// Requires finite t with t | t' or t' = inf.
ProjectionRule projection_pi_star(long t, Torsion t_prime);

/// Reduction H(-; Z) -> H(-; F_p) on basis monomials.
class ReductionMap {
public:
    ReductionMap(const CohomologyRing& integral, long p);

    const CohomologyRing& source() const { return source_; }
    const CohomologyRing& target() const { return target_; }
    Combination apply(const BasisMonomial& m) const;

private:
    CohomologyRing source_;
    CohomologyRing target_;
};

ReductionMap change_coefficients(const CohomologyRing& integral, long p);

/// Longest nonzero product of positive-degree classes (field modes).
int cup_length(const CohomologyRing& ring);
/// Longest nonzero product of generator differences g(x)1 - 1(x)g in the
/// tensor square (field modes).
int zero_divisor_cup_length(const CohomologyRing& ring);

}  // namespace lpt
