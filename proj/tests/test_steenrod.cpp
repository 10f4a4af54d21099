#include "doctest.h"

#include "grid.hpp"
#include "lpt/steenrod.hpp"

using namespace lpt;

namespace {

const CoeffMode F2 = CoeffMode::prime_field(2);

TupleSpec spec(std::vector<int> n, long t)
{
    return TupleSpec(std::move(n), t == 0 ? Torsion::infinite() : Torsion::finite(t));
}

bool binomial_odd(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return false;
    return (n & k) == k;
}

Combination add(Combination a, const Combination& b, const CohomologyRing& ring)
{
    for (const auto& [m, c] : b)
        a[m] += c;
    ring.normalize(a);
    return a;
}

}  // namespace

TEST_CASE("generator squares")
{
    const auto r = CohomologyRing::build(spec({2, 2}, 0), F2);
    const SteenrodTable sq(r);
    const BasisMonomial x2{BasePart::zpow(0), 1ULL << 2};
    Combination expected = r.single(x2);
    expected[{BasePart::zpow(1), 1ULL << 2}] = 1;
    expected[{BasePart::zpow(2), 1ULL << 2}] = 1;
    CHECK(sq.total_sq(x2) == expected);

    const auto r2 = CohomologyRing::build(spec({1, 1}, 2), F2);
    CHECK(sq_k(r2, {BasePart::yz(1, 0), 0}, 1) == r2.single({BasePart::yz(0, 1), 0}));

    const auto r11 = CohomologyRing::build(spec({1, 1}, 0), F2);
    CHECK(sq_k(r11, {BasePart::zpow(0), 1ULL << 2}, 2).empty());

    CHECK_THROWS_AS(SteenrodTable(CohomologyRing::build(spec({1}, 0), CoeffMode::rationals())), std::invalid_argument);
}

TEST_CASE("Sq^1 on powers of y")
{
    const auto r = CohomologyRing::build(spec({4}, 2), F2);
    const SteenrodTable sq(r);
    const Combination y = r.single({BasePart::yz(1, 0), 0});
    Combination ya = r.single(r.unit());
    for (int a = 1; a <= 8; ++a) {
        Combination next = r.multiply(ya, y);
        ya = next;
        Combination expected = a % 2 == 1 ? r.multiply(ya, y) : Combination{};
        CHECK(sq.sq(1, ya) == expected);
    }
}

TEST_CASE("axioms, instability and Cartan on the grid")
{
    for (const auto& s : testing::grid({0, 2, 4})) {
        const auto ring = CohomologyRing::build(s, F2);
        const SteenrodTable sq(ring);
        CAPTURE(s.to_string());
        for (const auto& m : ring.basis()) {
            const int d = ring.degree(m);
            CHECK(sq.sq(0, m) == ring.single(m));
            CHECK(sq.sq(d, m) == ring.multiply(m, m));
            CHECK(sq.sq(d + 1, m).empty());
            CHECK(sq.sq(d + 3, m).empty());
        }
        for (const auto& a : ring.basis())
            for (const auto& b : ring.basis()) {
                const Combination lhs = [&] {
                    Combination out;
                    for (const auto& [m, c] : ring.multiply(a, b))
                        out = add(out, sq.total_sq(m), ring);
                    return out;
                }();
                CHECK(lhs == ring.multiply(sq.total_sq(a), sq.total_sq(b)));
            }
    }
}

TEST_CASE("Adem relations on the grid")
{
    for (const auto& s : testing::grid({0, 2, 4})) {
        const auto ring = CohomologyRing::build(s, F2);
        const SteenrodTable sq(ring);
        CAPTURE(s.to_string());
        for (int b = 1; b <= 11; ++b)
            for (int a = 1; a < 2 * b && a + b <= 12; ++a)
                for (const auto& m : ring.basis()) {
                    const Combination lhs = sq.sq(a, sq.sq(b, ring.single(m)));
                    Combination rhs;
                    for (int j = 0; 2 * j <= a; ++j)
                        if (binomial_odd(b - 1 - j, a - 2 * j))
                            rhs = add(rhs, sq.sq(a + b - j, sq.sq(j, ring.single(m))), ring);
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("Stiefel-Whitney classes")
{
    const auto one = TruncPoly::constant(F2, 0, 1);
    CHECK(stiefel_whitney_total(spec({1, 1}, 0)).truncated(0) == one);
    CHECK(stiefel_whitney_total(spec({1, 1}, 0)).degree() == 0);
    const TruncPoly w = stiefel_whitney_total(spec({1, 2}, 0));
    CHECK(w.coeff(0) == 1);
    CHECK(w.coeff(1) == 1);
    for (long t : {0L, 2L, 3L, 7L})
        CHECK(stiefel_whitney_total(spec({0, 4}, t)).degree() == 0);
}

TEST_CASE("orientability and Spin")
{
    CHECK(is_spin(spec({1, 1}, 0)));
    CHECK_FALSE(is_spin(spec({1, 2}, 0)));
    CHECK(is_spin(spec({0, 5}, 3)));
    for (const auto& s : testing::grid({0, 1, 2, 3, 4, 6}, 3, 3)) {
        CHECK(is_orientable(s));
        CHECK(is_spin(s) == (stiefel_whitney_total(s).coeff(1) == 0));
        const bool even_or_inf = s.t().is_infinite() || s.t().order() % 2 == 0;
        if (even_or_inf)
            CHECK(is_spin(s) == (s.n1() == 0 || (s.size_sum() + s.r()) % 2 == 0));
    }
}
