#include "lpt/steenrod.hpp"

#include <stdexcept>

namespace lpt {

SteenrodTable::SteenrodTable(CohomologyRing ring) : ring_(std::move(ring))
{
    if (ring_.mode().kind() != CoeffRing::Kind::PrimeField || ring_.mode().characteristic() != 2)
        throw std::invalid_argument("Steenrod squares need F2 coefficients");
}

SteenrodTable::SteenrodTable(const SteenrodTable& other) : ring_(other.ring_)
{
    std::lock_guard lock(other.mutex_);
    by_degree_ = other.by_degree_;
}

Combination SteenrodTable::power(const Combination& c, int exponent) const
{
    Combination acc = ring_.single(ring_.unit());
    for (int i = 0; i < exponent; ++i)
        acc = ring_.multiply(acc, c);
    return acc;
}

Combination SteenrodTable::generator_square(const BasisMonomial& g) const
{
    const BasisMonomial one = ring_.unit();
    if (g.exterior != 0) {
        int i = 2;
        while (!(g.exterior >> i & 1ULL))
            ++i;
        Combination factor = ring_.single(one);
        if (ring_.presentation() != Presentation::TInvertible && ring_.spec().n1() >= 1) {
            // (1+z)^{n_i+1}, truncated by the ring relation z^{n1+1} = 0.
            TruncPoly binom = binom_mod2_expand(static_cast<unsigned long>(ring_.spec().n_at(i) + 1),
                                                ring_.spec().n1());
            const BasePart z = ring_.presentation() == Presentation::PrimaryLens ? BasePart::yz(0, 1)
                                                                                 : BasePart::zpow(1);
            Combination zc = ring_.single({z, 0});
            factor = {};
            for (int j = 0; j <= binom.precision(); ++j)
                if (binom.coeff(j) != 0)
                    for (const auto& [m, c] : power(zc, j))
                        factor[m] += c;
            ring_.normalize(factor);
        }
        return ring_.multiply(factor, ring_.single({one.base, g.exterior}));
    }
    Combination self = ring_.single(g);
    if (g.base.kind == BasePart::Kind::Omega || ring_.degree(g) == 0)
        return self;
    // y and z: Sq(g) = g + g^2.
    Combination out = self;
    for (const auto& [m, c] : ring_.multiply(self, self))
        out[m] += c;
    ring_.normalize(out);
    return out;
}

Combination SteenrodTable::compute_total(const BasisMonomial& m) const
{
    const BasisMonomial one = ring_.unit();
    Combination acc = ring_.single(one);
    const BasePart& b = m.base;
    switch (b.kind) {
    case BasePart::Kind::Omega:
        acc = ring_.single({b, 0});
        break;
    case BasePart::Kind::ZPow:
        if (b.a > 0)
            acc = power(generator_square({BasePart::zpow(1), 0}), b.a);
        break;
    case BasePart::Kind::YZ:
        if (b.eps)
            acc = generator_square({BasePart::yz(1, 0), 0});
        if (b.a > 0)
            acc = ring_.multiply(acc, power(generator_square({BasePart::yz(0, 1), 0}), b.a));
        break;
    }
    for (int i = 2; i <= ring_.spec().r(); ++i)
        if (m.exterior >> i & 1ULL)
            acc = ring_.multiply(acc, generator_square({one.base, 1ULL << i}));
    return acc;
}

Combination SteenrodTable::total_sq(const BasisMonomial& m) const
{
    const int d = ring_.degree(m);
    std::lock_guard lock(mutex_);
    auto it = by_degree_.find(d);
    if (it == by_degree_.end()) {
        std::map<BasisMonomial, Combination> table;
        for (const auto& b : ring_.basis_in_degree(d))
            table[b] = compute_total(b);
        it = by_degree_.emplace(d, std::move(table)).first;
    }
    return it->second.at(m);
}

Combination SteenrodTable::sq(int k, const BasisMonomial& m) const
{
    if (k < 0)
        return {};
    const int target = ring_.degree(m) + k;
    Combination out;
    for (const auto& [b, c] : total_sq(m))
        if (ring_.degree(b) == target)
            out[b] = c;
    return out;
}

Combination SteenrodTable::sq(int k, const Combination& c) const
{
    Combination out;
    for (const auto& [m, coeff] : c)
        for (const auto& [b, v] : sq(k, m))
            out[b] += coeff * v;
    ring_.normalize(out);
    return out;
}

Combination total_sq(const CohomologyRing& ring, const BasisMonomial& m)
{
    return SteenrodTable(ring).total_sq(m);
}

Combination sq_k(const CohomologyRing& ring, const BasisMonomial& m, int k)
{
    return SteenrodTable(ring).sq(k, m);
}

namespace {

bool z_survives_mod2(const TupleSpec& spec)
{
    if (spec.n1() == 0)
        return false;
    return spec.t().is_infinite() || spec.t().order() % 2 == 0;
}

}  // namespace

TruncPoly stiefel_whitney_total(const TupleSpec& spec)
{
    if (!z_survives_mod2(spec))
        return TruncPoly::constant(CoeffRing::prime_field(2), 0, 1);
    return binom_mod2_expand(static_cast<unsigned long>(spec.size_sum() + spec.r()), spec.n1());
}

bool is_orientable(const TupleSpec&)
{
    // w1 lives in degree 1 and W(tau) only has classes in even degrees.
    return true;
}

bool is_spin(const TupleSpec& spec)
{
    return stiefel_whitney_total(spec).coeff(1) == 0;
}

}  // namespace lpt
