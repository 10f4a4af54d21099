// Exact arithmetic foundations: tuple specs, valuations, truncated
// polynomials over Z / Q / F_p, graded abelian groups and Poincare series.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lpt {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Order of the acting cyclic group: a positive integer, or infinity (the
/// circle action that produces complex-projective product spaces).
class Torsion {
public:
    static Torsion infinite() { return Torsion{}; }
    static Torsion finite(long order);

    bool is_finite() const { return order_.has_value(); }
    bool is_infinite() const { return !order_.has_value(); }
    /// Throws std::logic_error for the infinite torsion.
    long order() const;
    std::string to_string() const;

    bool operator==(const Torsion&) const = default;

private:
    std::optional<long> order_;
};

/// The pair (n, t) naming a lens product space CP_n(t).
class TupleSpec {
public:
    /// Rejects unsorted n with std::invalid_argument unless sort_input is set.
    TupleSpec(std::vector<int> n, Torsion t, bool sort_input = false);

    const std::vector<int>& n() const { return n_; }
    /// 1-based access, matching the usual n_1 <= ... <= n_r indexing.
    int n_at(int i) const { return n_.at(static_cast<std::size_t>(i - 1)); }
    int n1() const { return n_.front(); }
    int r() const { return static_cast<int>(n_.size()); }
    Torsion t() const { return t_; }
    long size_sum() const;
    int delta() const { return t_.is_infinite() ? 1 : 0; }
    long dim() const { return 2 * size_sum() + r() - delta(); }
    std::string to_string() const;

    bool operator==(const TupleSpec&) const = default;

private:
    std::vector<int> n_;
    Torsion t_;
};

bool is_prime(long p);
/// Distinct primes dividing m, ascending.
std::vector<long> prime_divisors(long m);
/// Largest e with p^e | m. Rejects non-prime p and m <= 0.
int nu_p(long p, long m);

/// Ungraded coefficient ring for truncated series: Z, Q or F_p.
class CoeffRing {
public:
    enum class Kind { Integers, Rationals, PrimeField };

    static CoeffRing integers() { return CoeffRing(Kind::Integers, 0); }
    static CoeffRing rationals() { return CoeffRing(Kind::Rationals, 0); }
    static CoeffRing prime_field(long p);

    Kind kind() const { return kind_; }
    long characteristic() const { return p_; }
    /// Canonical representative; F_p values land in [0, p).
    Rational normalize(const Rational& value) const;
    bool is_unit(const Rational& value) const;
    std::string name() const;

    bool operator==(const CoeffRing&) const = default;

private:
    CoeffRing(Kind kind, long p) : kind_(kind), p_(p) {}

    Kind kind_;
    long p_;
};

/// Polynomial truncated at an explicit per-value precision N (degrees 0..N).
class TruncPoly {
public:
    TruncPoly(CoeffRing ring, int precision);
    TruncPoly(CoeffRing ring, int precision, std::vector<Rational> coeffs);

    static TruncPoly constant(CoeffRing ring, int precision, const Rational& c);
    static TruncPoly monomial(CoeffRing ring, int precision, int degree,
                              const Rational& c = 1);

    const CoeffRing& ring() const { return ring_; }
    int precision() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Zero for degrees above the precision.
    Rational coeff(int degree) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return degree() < 0; }

    TruncPoly truncated(int precision) const;
    TruncPoly scaled(const Rational& c) const;
    std::string to_string(const std::string& var = "z") const;

    friend TruncPoly operator+(const TruncPoly& a, const TruncPoly& b);
    friend TruncPoly operator-(const TruncPoly& a, const TruncPoly& b);
    friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b);
    friend bool operator==(const TruncPoly& a, const TruncPoly& b);

private:
    CoeffRing ring_;
    std::vector<Rational> coeffs_;
};

TruncPoly pow(const TruncPoly& base, unsigned long exponent);
/// outer(inner(z)); inner must have zero constant term.
TruncPoly compose(const TruncPoly& outer, const TruncPoly& inner);
/// (1+z)^k over F_2 truncated at precision, coefficients by Lucas' theorem.
TruncPoly binom_mod2_expand(unsigned long k, int precision);

/// One degree of a finitely generated abelian group (or, in field modes,
/// a vector space whose dimension is stored as free_rank).
struct GroupEntry {
    long free_rank = 0;
    std::vector<BigInt> torsion;
};

/// Elementary-divisor chain d_1 | d_2 | ... with units dropped.
std::vector<BigInt> invariant_factor_chain(std::vector<BigInt> coefficients);

class GradedAbGroup {
public:
    void add_free(int degree, long rank = 1);
    void add_torsion(int degree, const BigInt& order);

    /// Torsion lists are kept as given; call normalized() before comparing.
    GradedAbGroup normalized() const;
    const std::map<int, GroupEntry>& entries() const { return entries_; }
    GroupEntry at(int degree) const;
    int top_degree() const;
    std::string degree_string(int degree) const;
    std::string to_string() const;

    /// Compares after normalization.
    friend bool operator==(const GradedAbGroup& a, const GradedAbGroup& b);

private:
    std::map<int, GroupEntry> entries_;
};

/// Polynomial in s with integer coefficients. Negative exponents are
/// allowed so that formal desuspensions can be tracked as Laurent terms.
class PoincareSeries {
public:
    PoincareSeries() = default;
    static PoincareSeries monomial(int degree, long coeff = 1);
    static PoincareSeries from_group(const GradedAbGroup& g);

    long coeff(int degree) const;
    const std::map<int, long>& terms() const { return terms_; }
    void add(int degree, long c);
    PoincareSeries shifted(int by) const;
    /// Drops the constant term.
    PoincareSeries reduced() const;
    int top_degree() const;
    bool is_palindromic(long dim) const;
    long alternating_sum() const;
    long even_sum() const;
    std::vector<long> coefficients() const;
    std::string to_string() const;

    friend PoincareSeries operator+(const PoincareSeries& a, const PoincareSeries& b);
    friend PoincareSeries operator*(const PoincareSeries& a, const PoincareSeries& b);
    friend bool operator==(const PoincareSeries& a, const PoincareSeries& b) = default;

private:
    std::map<int, long> terms_;
};

}  // namespace lpt
