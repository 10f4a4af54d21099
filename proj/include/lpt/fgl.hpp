// Formal group laws over an ungraded coefficient ring and their t-series.
#pragma once

#include "lpt/algebra.hpp"

#include <map>
#include <utility>

namespace lpt {

enum class LawKind { Additive, Multiplicative, Custom };

std::string to_string(LawKind kind);

class FormalGroupLaw {
public:
    using Coefficients = std::map<std::pair<int, int>, Rational>;

    /// F(x, y) = x + y.
    static FormalGroupLaw additive(CoeffRing ring = CoeffRing::integers());
    /// F(x, y) = x + y + u x y; u must be a unit of the ring.
    static FormalGroupLaw multiplicative(const Rational& unit,
                                         CoeffRing ring = CoeffRing::integers());
    /// Coefficients a_ij for i + j <= precision. Validated for the unit
    /// axiom, commutativity and associativity up to precision; throws
    /// std::invalid_argument on failure.
    static FormalGroupLaw custom(Coefficients coefficients, int precision,
                                 CoeffRing ring = CoeffRing::integers());

    LawKind kind() const { return kind_; }
    const CoeffRing& ring() const { return ring_; }
    /// Largest total degree the law is known to; -1 for exact polynomial laws.
    int precision() const { return precision_; }
    Rational coefficient(int i, int j) const;
    const Coefficients& coefficients() const { return coeffs_; }

    /// F(x(z), y(z)) for series without constant term.
    TruncPoly apply(const TruncPoly& x, const TruncPoly& y) const;

private:
    FormalGroupLaw(LawKind kind, CoeffRing ring, Coefficients coeffs, int precision);

    LawKind kind_;
    CoeffRing ring_;
    Coefficients coeffs_;
    int precision_;
};

struct TSeries {
    TruncPoly series;
    long t;
    LawKind kind;
};

/// [t](z) by the recursion [1](z) = z, [k](z) = F([k-1](z), z).
TSeries t_series(const FormalGroupLaw& law, long t, int precision);

}  // namespace lpt
