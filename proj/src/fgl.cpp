#include "lpt/fgl.hpp"

#include <array>
#include <stdexcept>

namespace lpt {

std::string to_string(LawKind kind)
{
    switch (kind) {
    case LawKind::Additive:
        return "additive";
    case LawKind::Multiplicative:
        return "multiplicative";
    case LawKind::Custom:
        return "custom";
    }
    return "?";
}

namespace {

// Truncated polynomials in three variables, used only for the
// associativity check of custom laws.
class Trivariate {
public:
    using Key = std::array<int, 3>;

    Trivariate(const CoeffRing& ring, int precision) : ring_(&ring), precision_(precision) {}

    static Trivariate variable(const CoeffRing& ring, int precision, int which)
    {
        Trivariate v(ring, precision);
        Key k{0, 0, 0};
        k[static_cast<std::size_t>(which)] = 1;
        v.terms_[k] = 1;
        return v;
    }

    void add_term(const Key& k, const Rational& c)
    {
        if (k[0] + k[1] + k[2] > precision_)
            return;
        Rational v = ring_->normalize(terms_[k] + c);
        if (v == 0)
            terms_.erase(k);
        else
            terms_[k] = v;
    }

    Trivariate operator*(const Trivariate& o) const
    {
        Trivariate out(*ring_, precision_);
        for (const auto& [ka, ca] : terms_)
            for (const auto& [kb, cb] : o.terms_)
                out.add_term({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
        return out;
    }

    Trivariate& operator+=(const Trivariate& o)
    {
        for (const auto& [k, c] : o.terms_)
            add_term(k, c);
        return *this;
    }

    Trivariate scaled(const Rational& c) const
    {
        Trivariate out(*ring_, precision_);
        for (const auto& [k, v] : terms_)
            out.add_term(k, v * c);
        return out;
    }

    bool operator==(const Trivariate& o) const { return terms_ == o.terms_; }

private:
    const CoeffRing* ring_;
    int precision_;
    std::map<Key, Rational> terms_;
};

Trivariate apply_trivariate(const FormalGroupLaw::Coefficients& coeffs, const CoeffRing& ring,
                            int precision, const Trivariate& x, const Trivariate& y)
{
    // Powers are cached since the coefficient map is sparse but arbitrary.
    std::vector<Trivariate> xp{Trivariate(ring, precision)}, yp{Trivariate(ring, precision)};
    xp[0].add_term({0, 0, 0}, 1);
    yp[0].add_term({0, 0, 0}, 1);
    for (int i = 1; i <= precision; ++i) {
        xp.push_back(xp.back() * x);
        yp.push_back(yp.back() * y);
    }
    Trivariate out(ring, precision);
    for (const auto& [ij, c] : coeffs) {
        auto [i, j] = ij;
        if (i + j > precision)
            continue;
        out += (xp[static_cast<std::size_t>(i)] * yp[static_cast<std::size_t>(j)]).scaled(c);
    }
    return out;
}

}  // namespace

FormalGroupLaw::FormalGroupLaw(LawKind kind, CoeffRing ring, Coefficients coeffs, int precision)
    : kind_(kind), ring_(ring), precision_(precision)
{
    for (auto& [ij, c] : coeffs) {
        Rational v = ring_.normalize(c);
        if (v != 0)
            coeffs_[ij] = v;
    }
}

FormalGroupLaw FormalGroupLaw::additive(CoeffRing ring)
{
    return FormalGroupLaw(LawKind::Additive, ring, {{{1, 0}, 1}, {{0, 1}, 1}}, -1);
}

FormalGroupLaw FormalGroupLaw::multiplicative(const Rational& unit, CoeffRing ring)
{
    if (!ring.is_unit(unit))
        throw std::invalid_argument("multiplicative law needs a unit, got " + unit.get_str() +
                                    " over " + ring.name());
    return FormalGroupLaw(LawKind::Multiplicative, ring,
                          {{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, unit}}, -1);
}

FormalGroupLaw FormalGroupLaw::custom(Coefficients coefficients, int precision, CoeffRing ring)
{
    if (precision < 1)
        throw std::invalid_argument("custom law precision must be at least 1");
    FormalGroupLaw law(LawKind::Custom, ring, std::move(coefficients), precision);
    for (const auto& [ij, c] : law.coeffs_)
        if (ij.first + ij.second > precision || ij.first < 0 || ij.second < 0)
            throw std::invalid_argument("coefficient outside the truncation range");
    if (law.coefficient(0, 0) != 0 || law.coefficient(1, 0) != 1 || law.coefficient(0, 1) != 1)
        throw std::invalid_argument("unit axiom fails: need a00 = 0, a10 = a01 = 1");
    for (int i = 2; i <= precision; ++i)
        if (law.coefficient(i, 0) != 0 || law.coefficient(0, i) != 0)
            throw std::invalid_argument("unit axiom fails: F(x,0) != x");
    for (const auto& [ij, c] : law.coeffs_)
        if (law.coefficient(ij.second, ij.first) != c)
            throw std::invalid_argument("law is not commutative");

    Trivariate x = Trivariate::variable(law.ring_, precision, 0);
    Trivariate y = Trivariate::variable(law.ring_, precision, 1);
    Trivariate z = Trivariate::variable(law.ring_, precision, 2);
    Trivariate xy = apply_trivariate(law.coeffs_, law.ring_, precision, x, y);
    Trivariate yz = apply_trivariate(law.coeffs_, law.ring_, precision, y, z);
    Trivariate left = apply_trivariate(law.coeffs_, law.ring_, precision, xy, z);
    Trivariate right = apply_trivariate(law.coeffs_, law.ring_, precision, x, yz);
    if (!(left == right))
        throw std::invalid_argument("law is not associative up to the given precision");
    return law;
}

Rational FormalGroupLaw::coefficient(int i, int j) const
{
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? Rational(0) : it->second;
}

TruncPoly FormalGroupLaw::apply(const TruncPoly& x, const TruncPoly& y) const
{
    if (x.coeff(0) != 0 || y.coeff(0) != 0)
        throw std::invalid_argument("formal group law arguments must have zero constant term");
    int n = std::min(x.precision(), y.precision());
    if (precision_ >= 0 && n > precision_)
        throw std::invalid_argument("requested precision exceeds the law's precision");
    std::vector<TruncPoly> xp{TruncPoly::constant(ring_, n, 1)};
    std::vector<TruncPoly> yp{TruncPoly::constant(ring_, n, 1)};
    TruncPoly out(ring_, n);
    for (const auto& [ij, c] : coeffs_) {
        auto [i, j] = ij;
        // x and y have no constant term, so x^i y^j vanishes past precision.
        if (i + j > n)
            continue;
        while (static_cast<int>(xp.size()) <= i)
            xp.push_back(xp.back() * x.truncated(n));
        while (static_cast<int>(yp.size()) <= j)
            yp.push_back(yp.back() * y.truncated(n));
        out = out + (xp[static_cast<std::size_t>(i)] * yp[static_cast<std::size_t>(j)]).scaled(c);
    }
    return out;
}

TSeries t_series(const FormalGroupLaw& law, long t, int precision)
{
    if (t < 1)
        throw std::invalid_argument("t-series needs t >= 1");
    TruncPoly z = TruncPoly::monomial(law.ring(), precision, 1);
    TruncPoly acc = z;
    for (long k = 2; k <= t; ++k)
        acc = law.apply(acc, z);
    return TSeries{acc, t, law.kind()};
}

}  // namespace lpt
