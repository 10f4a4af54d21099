#include "lpt/invariants.hpp"

#include "lpt/steenrod.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpt {

std::string TriState::serialize() const
{
    switch (value) {
    case Value::True:
        return "true";
    case Value::False:
        return "false";
    case Value::Unknown:
        return "unknown:" + reason;
    }
    return "unknown:";
}

std::string KervaireValue::to_string() const
{
    if (odd_dimensional)
        return "[" + std::to_string(residue) + "]";
    return half_chi.get_str();
}

std::vector<CoeffMode> available_field_modes(const TupleSpec& spec)
{
    std::vector<CoeffMode> modes{CoeffMode::rationals(), CoeffMode::prime_field(2)};
    if (spec.t().is_finite())
        for (long p : prime_divisors(spec.t().order()))
            if (p != 2)
                modes.push_back(CoeffMode::prime_field(p));
    return modes;
}

long alternating_betti_sum(const TupleSpec& spec, CoeffMode mode)
{
    return poincare_polynomial(CohomologyRing::build(spec, mode)).alternating_sum();
}

long euler_char(const TupleSpec& spec)
{
    const long formula = (spec.r() == 1 && spec.t().is_infinite()) ? spec.n1() + 1 : 0;
    const long betti = alternating_betti_sum(spec, CoeffMode::rationals());
    if (betti != formula)
        throw std::logic_error("Euler characteristic mismatch for " + spec.to_string());
    return formula;
}

std::optional<int> kervaire_case_formula(const TupleSpec& spec)
{
    if (spec.dim() % 2 == 0)
        return std::nullopt;
    const int r = spec.r();
    const Torsion t = spec.t();
    const bool t_even = t.is_finite() && t.order() % 2 == 0;
    const bool t_odd = t.is_finite() && t.order() % 2 == 1;
    if ((r == 1 && t_even) || (r <= 2 && t.is_infinite()))
        return (spec.n1() + 1) % 2;
    if (r == 1 && t_odd)
        return 1;
    return 0;
}

KervaireValue kervaire_semichar(const TupleSpec& spec)
{
    if (spec.dim() % 2 == 0)
        return KervaireValue{false, 0, Rational(euler_char(spec), 2)};
    PoincareSeries p = poincare_polynomial(CohomologyRing::build(spec, CoeffMode::prime_field(2)));
    const int residue = static_cast<int>(p.even_sum() % 2);
    if (residue != *kervaire_case_formula(spec))
        throw std::logic_error("Kervaire semi-characteristic mismatch for " + spec.to_string());
    return KervaireValue{true, residue, 0};
}

int sigma_exponent(int n1, long t, long p)
{
    if (n1 < 1)
        throw std::invalid_argument("sigma needs n1 >= 1 (n1 = 0 spaces are products of spheres)");
    if (t < 1)
        throw std::invalid_argument("sigma needs a finite positive t");
    if (t % p != 0)
        return 0;
    const int v = nu_p(p, t);
    if (p == 2) {
        if (v == 1 && n1 % 4 != 3)
            return n1 + 1;
        if (std::max(v, n1) == 1)
            return n1;
        if (n1 % 2 == 0)
            return v + n1 - 1;
        return v + n1 - 2;
    }
    if (n1 >= 2)
        return v + (n1 - 2) / static_cast<int>(p - 1);
    return 0;
}

BigInt sigma(int n1, long t)
{
    sigma_exponent(n1, t, 2);
    BigInt out = 1;
    for (long p : prime_divisors(t)) {
        BigInt pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(sigma_exponent(n1, t, p)));
        out *= pe;
    }
    return out;
}

TriState stably_parallelizable(const TupleSpec& spec)
{
    const long total = spec.size_sum() + spec.r();
    if (spec.n1() == 0)
        return TriState::yes();
    if (spec.t().is_infinite())
        return TriState::from(spec.n1() == 1 && total % 2 == 0);
    // Closed orientable 3-manifolds are parallelizable.
    if (spec.r() == 1 && spec.n1() == 1)
        return TriState::yes();
    return TriState::from(BigInt(total) % sigma(spec.n1(), spec.t().order()) == 0);
}

TriState parallelizable(const TupleSpec& spec)
{
    const long total = spec.size_sum() + spec.r();
    if (spec.n1() == 0) {
        if (spec.t().is_infinite() && spec.r() == 2) {
            const int n2 = spec.n_at(2);
            return TriState::from(n2 == 0 || n2 == 1 || n2 == 3);
        }
        return TriState::yes();
    }
    if (spec.t().is_infinite())
        return TriState::from(spec.n1() == 1 && spec.r() > 1 && total % 2 == 0);
    if (spec.r() > 1)
        return stably_parallelizable(spec);
    if (spec.n1() == 1)
        return TriState::yes();
    return TriState::unknown("classical lens space; see the literature on lens-space parallelizability");
}

bool vector_field_exists(const TupleSpec& spec)
{
    return spec.r() > 1 || spec.t().is_finite();
}

long base_category(const TupleSpec& spec)
{
    return spec.t().is_finite() ? 2L * spec.n1() + 1 : spec.n1();
}

Interval cat_bounds(const TupleSpec& spec)
{
    const long hi = spec.r() * (base_category(spec) + 1) - 1;
    long lo = 0;
    for (const auto& mode : available_field_modes(spec))
        lo = std::max<long>(lo, cup_length(CohomologyRing::build(spec, mode)));
    return {lo, hi};
}

namespace {

long best_zcl(const TupleSpec& spec)
{
    long best = 0;
    for (const auto& mode : available_field_modes(spec))
        best = std::max<long>(best, zero_divisor_cup_length(CohomologyRing::build(spec, mode)));
    return best;
}

}  // namespace

TcBounds tc_bounds(const TupleSpec& spec, std::optional<Interval> base_tc_override)
{
    const long r = spec.r();
    const long cat_base = base_category(spec);
    Interval base{};
    if (base_tc_override) {
        if (base_tc_override->lo > base_tc_override->hi || base_tc_override->lo < 0)
            throw std::invalid_argument("TC override interval must satisfy 0 <= lo <= hi");
        base = *base_tc_override;
    } else if (spec.t().is_infinite()) {
        base = {2L * spec.n1(), 2L * spec.n1()};
    } else {
        base = {best_zcl(TupleSpec({spec.n1()}, spec.t())), 2 * (2L * spec.n1() + 1)};
    }
    const long product_bound = 2 * r * (cat_base + 1) - 2;
    const long linear_bound = r * (1 + base.hi) - 1;
    const long hi = std::min(product_bound, linear_bound);
    const long lo = std::max(best_zcl(spec), cat_bounds(spec).lo);
    if (lo > hi)
        throw std::invalid_argument("TC override contradicts the cohomological lower bound " +
                                    std::to_string(lo));
    return TcBounds{{lo, hi}, base, product_bound, linear_bound};
}

SpanInfo span_report(const TupleSpec& spec, std::optional<long> span_base_input)
{
    const long total = spec.size_sum() + spec.r();
    if (span_base_input && (*span_base_input < 0 || *span_base_input > 2 * total))
        throw std::invalid_argument("span of (|n|+r) gamma must lie in [0, " +
                                    std::to_string(2 * total) + "]");
    SpanInfo info{};
    info.applicable = vector_field_exists(spec);
    if (stably_parallelizable(spec).is_true())
        info.stablespan = spec.dim();
    else if (span_base_input)
        info.stablespan = *span_base_input - spec.r() - spec.delta();
    if (!info.applicable) {
        info.clauses.push_back("inapplicable: r = 1 and t = inf");
        return info;
    }
    const bool literal_spin = spec.n1() == 0 || total % 2 == 0;
    const bool dim_3_mod_8 = spec.dim() % 8 == 3;
    const auto chi_star = kervaire_semichar(spec);
    const bool clause1 = (spec.r() - spec.delta()) % 2 == 0;
    const bool clause2 = dim_3_mod_8 && chi_star.residue == 0 && literal_spin;
    if (clause1)
        info.clauses.push_back("r - delta_t even");
    if (clause2)
        info.clauses.push_back("dim = 3 mod 8, chi* = 0, n1 = 0 or |n|+r even");
    info.span_equals_stablespan = clause1 || clause2;
    if (dim_3_mod_8 && literal_spin && chi_star.residue != 0) {
        info.clauses.push_back("dim = 3 mod 8, chi* != 0: span = 3");
        info.span = 3;
    } else if (info.span_equals_stablespan && info.stablespan) {
        info.span = info.stablespan;
    }
    return info;
}

ImmersionInfo immersion_dim(const TupleSpec& spec, std::optional<long> gd_input)
{
    const long dim = spec.dim();
    const long gd_max = 2L * spec.n1() + 2 - spec.delta();
    if (gd_input && (*gd_input < 0 || *gd_input > gd_max))
        throw std::invalid_argument("gd must lie in [0, " + std::to_string(gd_max) + "]");
    ImmersionInfo info{std::nullopt, {dim + 1, dim + gd_max}};
    if (gd_input)
        info.value = dim + std::max(1L, *gd_input);
    return info;
}

InvariantReport invariant_report(const TupleSpec& spec, const InvariantOptions& options)
{
    InvariantReport rep{
        euler_char(spec),
        kervaire_semichar(spec),
        is_orientable(spec),
        is_spin(spec),
        vector_field_exists(spec),
        stably_parallelizable(spec),
        parallelizable(spec),
        cat_bounds(spec),
        tc_bounds(spec, options.tc_override),
        span_report(spec, options.span_base),
        immersion_dim(spec, options.gd),
    };
    if (rep.has_nonzero_field != (rep.chi == 0))
        throw std::logic_error("Poincare-Hopf mismatch for " + spec.to_string());
    return rep;
}

}  // namespace lpt
