#include "doctest.h"

#include "lpt/fgl.hpp"

#include <random>

using namespace lpt;

namespace {

// (1 + u z)^t - 1 scaled by 1/u, from binomial coefficients directly.
TruncPoly closed_form(long t, int n, long u = 1)
{
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 1; j <= n && j <= t; ++j) {
        BigInt b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(t), static_cast<unsigned long>(j));
        BigInt upow;
        mpz_pow_ui(upow.get_mpz_t(), BigInt(u).get_mpz_t(), static_cast<unsigned long>(j - 1));
        c[static_cast<std::size_t>(j)] = Rational(b * upow);
    }
    return TruncPoly(CoeffRing::integers(), n, c);
}

TruncPoly monomial(int n, int d, long c = 1)
{
    return TruncPoly::monomial(CoeffRing::integers(), n, d, c);
}

}  // namespace

TEST_CASE("additive law")
{
    const auto f = FormalGroupLaw::additive();
    CHECK(f.coefficient(1, 0) == 1);
    CHECK(f.coefficient(0, 1) == 1);
    CHECK(f.coefficient(1, 1) == 0);
    CHECK(t_series(f, 3, 4).series == monomial(4, 1, 3));
    CHECK(t_series(f, 1, 4).series == monomial(4, 1));
    CHECK(t_series(f, 7, 5).series == monomial(5, 1, 7));
}

TEST_CASE("multiplicative law")
{
    const auto f = FormalGroupLaw::multiplicative(1);
    CHECK(f.coefficient(1, 1) == 1);
    CHECK(t_series(f, 2, 4).series == monomial(4, 1, 2) + monomial(4, 2));
    CHECK(FormalGroupLaw::multiplicative(-1).coefficient(1, 1) == -1);
    CHECK_THROWS_AS(FormalGroupLaw::multiplicative(2), std::invalid_argument);
    CHECK_NOTHROW(FormalGroupLaw::multiplicative(2, CoeffRing::rationals()));
}

TEST_CASE("t-series against the closed form")
{
    const auto f = FormalGroupLaw::multiplicative(1);
    CHECK(t_series(f, 3, 3).series == closed_form(3, 3));
    CHECK(t_series(f, 4, 2).series == closed_form(4, 2));
    for (long t = 1; t <= 12; ++t)
        for (int n = 1; n <= 8; ++n)
            CHECK(t_series(f, t, n).series == closed_form(t, n));
    const auto g = FormalGroupLaw::multiplicative(-1);
    for (long t = 1; t <= 8; ++t)
        CHECK(t_series(g, t, 6).series == closed_form(t, 6, -1));
}

TEST_CASE("t-series respects the formal sum")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> d(1, 6);
    for (const auto& f : {FormalGroupLaw::additive(), FormalGroupLaw::multiplicative(1),
                          FormalGroupLaw::multiplicative(-1)})
        for (int i = 0; i < 20; ++i) {
            const long a = d(rng), b = d(rng);
            const int n = 7;
            CHECK(t_series(f, a + b, n).series == f.apply(t_series(f, a, n).series, t_series(f, b, n).series));
        }
}

TEST_CASE("custom laws are validated")
{
    FormalGroupLaw::Coefficients good{{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 3}};
    CHECK_NOTHROW(FormalGroupLaw::custom(good, 6));
    FormalGroupLaw::Coefficients noncommutative{{{1, 0}, 1}, {{0, 1}, 1}, {{2, 1}, 1}};
    CHECK_THROWS_AS(FormalGroupLaw::custom(noncommutative, 6), std::invalid_argument);
    FormalGroupLaw::Coefficients nonassociative{{{1, 0}, 1}, {{0, 1}, 1}, {{2, 2}, 1}};
    CHECK_THROWS_AS(FormalGroupLaw::custom(nonassociative, 6), std::invalid_argument);
    FormalGroupLaw::Coefficients no_unit{{{1, 0}, 1}, {{0, 1}, 1}, {{2, 0}, 1}};
    CHECK_THROWS_AS(FormalGroupLaw::custom(no_unit, 6), std::invalid_argument);
}

TEST_CASE("t-series invariants")
{
    const auto f = FormalGroupLaw::multiplicative(1);
    for (long t = 1; t <= 6; ++t) {
        const auto s = t_series(f, t, 5);
        CHECK(s.series.coeff(0) == 0);
        CHECK(s.t == t);
    }
    CHECK_THROWS(t_series(f, 0, 5));
}
