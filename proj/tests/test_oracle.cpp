#include "doctest.h"

#include "grid.hpp"
#include "lpt/oracle.hpp"

#include <random>

using namespace lpt;

namespace {

TupleSpec spec(std::vector<int> n, long t)
{
    return TupleSpec(std::move(n), t == 0 ? Torsion::infinite() : Torsion::finite(t));
}

SparseMatrix sparse(const std::vector<std::vector<long>>& rows)
{
    SparseMatrix m;
    m.rows = static_cast<int>(rows.size());
    m.cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    m.columns.resize(static_cast<std::size_t>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (long v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                m.columns[static_cast<std::size_t>(j)].push_back({i, v});
    return m;
}

// Invariant factors via gcds of k x k minors, for tiny matrices only.
BigInt determinant(std::vector<std::vector<BigInt>> a)
{
    const std::size_t n = a.size();
    BigInt det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        for (std::size_t r = c + 1; r < n; ++r)
            while (a[r][c] != 0) {
                const BigInt q = a[c][c] / a[r][c];
                for (std::size_t k = c; k < n; ++k)
                    a[c][k] -= q * a[r][k];
                std::swap(a[r], a[c]);
                det = -det;
            }
        det *= a[c][c];
    }
    return det;
}

std::vector<BigInt> factors_by_minors(const std::vector<std::vector<long>>& m)
{
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<BigInt> gcds{1};
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        BigInt g = 0;
        for (int rmask = 0; rmask < (1 << rows); ++rmask) {
            if (__builtin_popcount(static_cast<unsigned>(rmask)) != k)
                continue;
            for (int cmask = 0; cmask < (1 << cols); ++cmask) {
                if (__builtin_popcount(static_cast<unsigned>(cmask)) != k)
                    continue;
                std::vector<std::vector<BigInt>> sub;
                for (int i = 0; i < rows; ++i) {
                    if (!(rmask >> i & 1))
                        continue;
                    sub.emplace_back();
                    for (int j = 0; j < cols; ++j)
                        if (cmask >> j & 1)
                            sub.back().push_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                }
                g = gcd(g, determinant(sub));
            }
        }
        if (g == 0)
            break;
        gcds.push_back(g);
    }
    std::vector<BigInt> out;
    for (std::size_t k = 1; k < gcds.size(); ++k)
        out.push_back(gcds[k] / gcds[k - 1]);
    return out;
}

}  // namespace

TEST_CASE("group ring arithmetic")
{
    const GroupRingElement lambda_minus_one{-1, 1, 0};
    const GroupRingElement norm{1, 1, 1};
    CHECK(group_ring_multiply(lambda_minus_one, norm) == GroupRingElement{0, 0, 0});
    CHECK(group_ring_multiply({0, 1, 0}, {0, 0, 1}) == GroupRingElement{1, 0, 0});
}

TEST_CASE("sphere complexes")
{
    const auto s = sphere_complex(1, 3);
    CHECK(s.ranks == std::vector<int>{1, 1, 1, 1});
    CHECK(s.boundary[1][0][0] == GroupRingElement{-1, 1, 0});
    CHECK(s.boundary[2][0][0] == GroupRingElement{1, 1, 1});
    for (int n = 0; n <= 3; ++n)
        for (long t : {1L, 2L, 3L, 5L, 6L})
            CHECK(sphere_complex(n, t).boundary_squares_to_zero());
}

TEST_CASE("quotient complexes")
{
    const auto torus = product_quotient_complex(spec({0, 0}, 2));
    CHECK(torus.size() == 8);
    CHECK(quotient_basis_size(spec({0, 0}, 2)) == 8);
    const auto h = homology(torus, CoeffMode::integers());
    GradedAbGroup expected;
    expected.add_free(0);
    expected.add_free(1, 2);
    expected.add_free(2);
    CHECK(h.integral == expected);

    const auto lens = product_quotient_complex(spec({1}, 3));
    CHECK(lens.size() == 4);
    CHECK(lens.boundary[1].dense() == std::vector<std::vector<long>>{{0}});
    CHECK(lens.boundary[2].dense() == std::vector<std::vector<long>>{{3}});
    CHECK(lens.boundary[3].dense() == std::vector<std::vector<long>>{{0}});

    for (const auto& s : testing::grid({1, 2, 3, 4, 6}))
        CHECK(product_quotient_complex(s).boundary_squares_to_zero());
}

TEST_CASE("Smith normal form")
{
    CHECK(invariant_factors(std::vector<std::vector<long>>{{2, 0}, {0, 3}}) == std::vector<BigInt>{1, 6});
    CHECK(invariant_factors(std::vector<std::vector<long>>{{0, 0}, {0, 0}}).empty());
    CHECK(invariant_factors(std::vector<std::vector<long>>{{3}}) == std::vector<BigInt>{3});
    CHECK(invariant_factors(sparse({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})) == std::vector<BigInt>{2, 6, 12});
    CHECK(rank_mod_p(sparse({{2, 0}, {0, 3}}), 2) == 1);
    CHECK(rank_mod_p(sparse({{2, 0}, {0, 3}}), 5) == 2);
}

TEST_CASE("Smith normal form against determinantal divisors")
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> entry(-6, 6);
    std::uniform_int_distribution<int> size(1, 4);
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = size(rng), cols = size(rng);
        std::vector<std::vector<long>> m(static_cast<std::size_t>(rows), std::vector<long>(static_cast<std::size_t>(cols)));
        for (auto& row : m)
            for (auto& x : row)
                x = trial % 3 == 0 ? entry(rng) * 2 : entry(rng);
        const auto expected = factors_by_minors(m);
        CHECK(invariant_factors(m) == expected);
        CHECK(invariant_factors(sparse(m)) == expected);
        for (long p : {2L, 3L}) {
            long rank = 0;
            for (const auto& f : expected)
                if (f % p != 0)
                    ++rank;
            CHECK(rank_mod_p(sparse(m), p) == rank);
        }
    }
}

TEST_CASE("oracle homology examples")
{
    const auto t3 = homology(product_quotient_complex(spec({0, 0, 0}, 4)), CoeffMode::integers());
    GradedAbGroup expected;
    expected.add_free(0);
    expected.add_free(1, 3);
    expected.add_free(2, 3);
    expected.add_free(3);
    CHECK(t3.integral == expected);

    const auto l5 = homology(product_quotient_complex(spec({2}, 2)), CoeffMode::prime_field(2));
    CHECK(l5.betti == std::vector<long>{1, 1, 1, 1, 1, 1});

    GradedAbGroup cohom;
    cohom.add_free(0);
    cohom.add_torsion(2, 3);
    cohom.add_free(3);
    CHECK(cohomology_from_homology(homology(product_quotient_complex(spec({1}, 3)), CoeffMode::integers()).integral) ==
          cohom);
}

TEST_CASE("comparison with the cohomology ring")
{
    const auto a = compare_with_theory(spec({1}, 3), CoeffMode::integers());
    CHECK(a.match);
    REQUIRE(a.degrees.size() == 4);
    CHECK(a.degrees[0].oracle == "Z");
    CHECK(a.degrees[1].oracle == "0");
    CHECK(a.degrees[2].oracle == "Z3");
    CHECK(a.degrees[3].oracle == "Z");
    CHECK(compare_with_theory(spec({1, 2}, 4), CoeffMode::prime_field(2)).match);
    CHECK(compare_with_theory(spec({2, 2}, 3), CoeffMode::integers()).match);
}

TEST_CASE("serial and parallel oracles agree")
{
    for (const auto& s : testing::grid({2, 3, 4}, 3, 1)) {
        const auto par = product_quotient_complex(s);
        const auto ser = product_quotient_complex_serial(s);
        CHECK(par.ranks == ser.ranks);
        for (std::size_t d = 0; d < par.boundary.size(); ++d)
            CHECK(par.boundary[d].dense() == ser.boundary[d].dense());
        for (const auto& mode : {CoeffMode::integers(), CoeffMode::prime_field(2)}) {
            const auto hp = homology(par, mode);
            const auto hs = homology_serial(ser, mode);
            CHECK(hp.betti == hs.betti);
            CHECK(hp.integral == hs.integral);
        }
    }
}

TEST_CASE("oracle sanity on the grid")
{
    for (const auto& s : testing::grid({1, 2, 3, 4, 6})) {
        CAPTURE(s.to_string());
        const auto c = product_quotient_complex(s);
        const auto h = homology(c, CoeffMode::integers());
        const auto dim = static_cast<int>(s.dim());
        CHECK(h.integral.at(0).free_rank == 1);
        CHECK(h.integral.at(0).torsion.empty());
        CHECK(h.integral.at(dim).free_rank == 1);
        for (long p : {2L, 3L}) {
            const auto betti = homology(c, CoeffMode::prime_field(p)).betti;
            for (int d = 0; d <= dim; ++d)
                CHECK(betti[static_cast<std::size_t>(d)] == betti[static_cast<std::size_t>(dim - d)]);
        }
    }
}

TEST_CASE("oracle rejects out-of-scope inputs")
{
    CHECK_THROWS_AS(product_quotient_complex(spec({1, 1}, 0)), std::invalid_argument);
    CHECK_THROWS_AS(product_quotient_complex(spec({2, 2, 2}, 6), 100), std::length_error);
    CHECK_THROWS_AS(compare_with_theory(spec({2, 2, 2}, 6), CoeffMode::integers(), 100), std::length_error);
}
