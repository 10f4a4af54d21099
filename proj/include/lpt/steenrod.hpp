// Mod-2 Steenrod squares on lens product spaces, Stiefel-Whitney classes of
// the tangent bundle, and the orientability / Spin predicates.
#pragma once

#include "lpt/cohomology.hpp"

#include <map>
#include <mutex>

namespace lpt {

/// Sq on an F_2 cohomology ring. Generators act by
///   Sq(y) = y + y^2, Sq(z) = z + z^2, Sq(w) = w, Sq(x_i) = (1+z)^{n_i+1} x_i
/// and monomials by the Cartan formula. Values are computed a degree at a
/// time on first use and cached.
class SteenrodTable {
public:
    /// Throws std::invalid_argument unless the ring is over F_2.
    explicit SteenrodTable(CohomologyRing ring);
    SteenrodTable(const SteenrodTable& other);

    const CohomologyRing& ring() const { return ring_; }

    Combination total_sq(const BasisMonomial& m) const;
    Combination sq(int k, const BasisMonomial& m) const;
    Combination sq(int k, const Combination& c) const;
    /// Sq of a generator, before any Cartan expansion.
    Combination generator_square(const BasisMonomial& g) const;

private:
    Combination compute_total(const BasisMonomial& m) const;
    Combination power(const Combination& c, int exponent) const;

    CohomologyRing ring_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::map<BasisMonomial, Combination>> by_degree_;
};

Combination total_sq(const CohomologyRing& ring, const BasisMonomial& m);
Combination sq_k(const CohomologyRing& ring, const BasisMonomial& m, int k);

/// W(tau) = (1+z)^{|n|+r} in F_2[z]/(z^{n1+1}); the constant 1 when z does
/// not survive mod 2 (odd t or n1 = 0). The coefficient of z^j is w_{2j}.
TruncPoly stiefel_whitney_total(const TupleSpec& spec);

bool is_orientable(const TupleSpec& spec);
/// w_2 = 0. For even or infinite t this is "n1 = 0 or |n|+r even".
bool is_spin(const TupleSpec& spec);

}  // namespace lpt
