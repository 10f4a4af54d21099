#include "lpt/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lpt {

Torsion Torsion::finite(long order)
{
    if (order < 1)
        throw std::invalid_argument("torsion order must be a positive integer");
    Torsion t;
    t.order_ = order;
    return t;
}

long Torsion::order() const
{
    if (!order_)
        throw std::logic_error("infinite torsion has no integer order");
    return *order_;
}

std::string Torsion::to_string() const
{
    return order_ ? std::to_string(*order_) : std::string("inf");
}

TupleSpec::TupleSpec(std::vector<int> n, Torsion t, bool sort_input)
    : n_(std::move(n)), t_(t)
{
    if (n_.empty())
        throw std::invalid_argument("tuple must have at least one entry");
    for (int v : n_)
        if (v < 0)
            throw std::invalid_argument("tuple entries must be non-negative");
    if (!std::is_sorted(n_.begin(), n_.end())) {
        if (!sort_input)
            throw std::invalid_argument("tuple " + to_string() +
                                        " is not nondecreasing (use --sort to reorder)");
        std::sort(n_.begin(), n_.end());
    }
    if (n_.size() > 60)
        throw std::invalid_argument("tuples longer than 60 entries are not supported");
}

long TupleSpec::size_sum() const
{
    long s = 0;
    for (int v : n_)
        s += v;
    return s;
}

std::string TupleSpec::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < n_.size(); ++i)
        os << (i ? "," : "") << n_[i];
    os << ")," << t_.to_string();
    return os.str();
}

bool is_prime(long p)
{
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::vector<long> prime_divisors(long m)
{
    std::vector<long> out;
    for (long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0)
                m /= d;
        }
    }
    if (m > 1)
        out.push_back(m);
    return out;
}

int nu_p(long p, long m)
{
    if (!is_prime(p))
        throw std::invalid_argument("nu_p: " + std::to_string(p) + " is not prime");
    if (m <= 0)
        throw std::invalid_argument("nu_p: argument must be positive");
    int e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

CoeffRing CoeffRing::prime_field(long p)
{
    if (!is_prime(p))
        throw std::invalid_argument("F_p needs a prime p, got " + std::to_string(p));
    return CoeffRing(Kind::PrimeField, p);
}

Rational CoeffRing::normalize(const Rational& value) const
{
    switch (kind_) {
    case Kind::Integers:
        if (value.get_den() != 1)
            throw std::domain_error("non-integral coefficient over Z");
        return value;
    case Kind::Rationals:
        return value;
    case Kind::PrimeField: {
        BigInt p = p_;
        BigInt num = value.get_num() % p;
        BigInt den = value.get_den() % p;
        if (den == 0)
            throw std::domain_error("denominator divisible by the characteristic");
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        BigInt r = (num * inv) % p;
        if (r < 0)
            r += p;
        return Rational(r);
    }
    }
    return value;
}

bool CoeffRing::is_unit(const Rational& value) const
{
    switch (kind_) {
    case Kind::Integers:
        return value == 1 || value == -1;
    case Kind::Rationals:
        return value != 0;
    case Kind::PrimeField:
        return normalize(value) != 0;
    }
    return false;
}

std::string CoeffRing::name() const
{
    switch (kind_) {
    case Kind::Integers:
        return "Z";
    case Kind::Rationals:
        return "Q";
    case Kind::PrimeField:
        return "F" + std::to_string(p_);
    }
    return "?";
}

TruncPoly::TruncPoly(CoeffRing ring, int precision)
    : ring_(ring)
{
    if (precision < 0)
        throw std::invalid_argument("precision must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(precision) + 1, Rational(0));
}

TruncPoly::TruncPoly(CoeffRing ring, int precision, std::vector<Rational> coeffs)
    : TruncPoly(ring, precision)
{
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i)
        coeffs_[i] = ring_.normalize(coeffs[i]);
}

TruncPoly TruncPoly::constant(CoeffRing ring, int precision, const Rational& c)
{
    return monomial(ring, precision, 0, c);
}

TruncPoly TruncPoly::monomial(CoeffRing ring, int precision, int degree, const Rational& c)
{
    TruncPoly p(ring, precision);
    if (degree >= 0 && degree <= precision)
        p.coeffs_[static_cast<std::size_t>(degree)] = ring.normalize(c);
    return p;
}

Rational TruncPoly::coeff(int degree) const
{
    if (degree < 0 || degree > precision())
        return 0;
    return coeffs_[static_cast<std::size_t>(degree)];
}

int TruncPoly::degree() const
{
    for (int d = precision(); d >= 0; --d)
        if (coeffs_[static_cast<std::size_t>(d)] != 0)
            return d;
    return -1;
}

TruncPoly TruncPoly::truncated(int precision) const
{
    return TruncPoly(ring_, precision, coeffs_);
}

TruncPoly TruncPoly::scaled(const Rational& c) const
{
    TruncPoly out(ring_, precision());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] = ring_.normalize(coeffs_[i] * c);
    return out;
}

std::string TruncPoly::to_string(const std::string& var) const
{
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= precision(); ++d) {
        const Rational& c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0)
            continue;
        Rational mag = c;
        bool negative = c < 0;
        if (negative)
            mag = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (d == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << "*";
        os << var;
        if (d > 1)
            os << "^" << d;
    }
    return first ? "0" : os.str();
}

namespace {

void require_same_ring(const TruncPoly& a, const TruncPoly& b)
{
    if (!(a.ring() == b.ring()))
        throw std::invalid_argument("truncated polynomials over different coefficient rings");
}

}  // namespace

TruncPoly operator+(const TruncPoly& a, const TruncPoly& b)
{
    require_same_ring(a, b);
    int n = std::min(a.precision(), b.precision());
    TruncPoly out(a.ring(), n);
    for (int i = 0; i <= n; ++i)
        out.coeffs_[static_cast<std::size_t>(i)] = a.ring().normalize(a.coeff(i) + b.coeff(i));
    return out;
}

TruncPoly operator-(const TruncPoly& a, const TruncPoly& b)
{
    return a + b.scaled(-1);
}

TruncPoly operator*(const TruncPoly& a, const TruncPoly& b)
{
    require_same_ring(a, b);
    int n = std::min(a.precision(), b.precision());
    std::vector<Rational> acc(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        if (a.coeffs_[static_cast<std::size_t>(i)] == 0)
            continue;
        for (int j = 0; i + j <= n; ++j)
            acc[static_cast<std::size_t>(i + j)] +=
                a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return TruncPoly(a.ring(), n, std::move(acc));
}

bool operator==(const TruncPoly& a, const TruncPoly& b)
{
    return a.ring() == b.ring() && a.coeffs_ == b.coeffs_;
}

TruncPoly pow(const TruncPoly& base, unsigned long exponent)
{
    TruncPoly result = TruncPoly::constant(base.ring(), base.precision(), 1);
    TruncPoly square = base;
    while (exponent > 0) {
        if (exponent & 1UL)
            result = result * square;
        exponent >>= 1;
        if (exponent > 0)
            square = square * square;
    }
    return result;
}

TruncPoly compose(const TruncPoly& outer, const TruncPoly& inner)
{
    if (inner.coeff(0) != 0)
        throw std::invalid_argument("compose: inner series must have zero constant term");
    require_same_ring(outer, inner);
    int n = std::min(outer.precision(), inner.precision());
    // Horner in the inner series.
    TruncPoly acc(outer.ring(), n);
    TruncPoly in = inner.truncated(n);
    for (int d = n; d >= 0; --d)
        acc = acc * in + TruncPoly::constant(outer.ring(), n, outer.coeff(d));
    return acc;
}

TruncPoly binom_mod2_expand(unsigned long k, int precision)
{
    TruncPoly out(CoeffRing::prime_field(2), precision);
    std::vector<Rational> c(static_cast<std::size_t>(precision) + 1, Rational(0));
    for (int j = 0; j <= precision; ++j)
        if ((static_cast<unsigned long>(j) & ~k) == 0)
            c[static_cast<std::size_t>(j)] = 1;
    return TruncPoly(CoeffRing::prime_field(2), precision, std::move(c));
}

std::vector<BigInt> invariant_factor_chain(std::vector<BigInt> coefficients)
{
    for (auto& c : coefficients)
        c = abs(c);
    std::erase_if(coefficients, [](const BigInt& c) { return c == 1; });
    // Zero would be a free summand, not torsion.
    if (std::any_of(coefficients.begin(), coefficients.end(), [](const BigInt& c) { return c == 0; }))
        throw std::invalid_argument("zero is not a torsion coefficient");
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(coefficients.begin(), coefficients.end());
        for (std::size_t i = 0; i < coefficients.size(); ++i) {
            for (std::size_t j = i + 1; j < coefficients.size(); ++j) {
                if (coefficients[j] % coefficients[i] == 0)
                    continue;
                BigInt g = gcd(coefficients[i], coefficients[j]);
                BigInt l = lcm(coefficients[i], coefficients[j]);
                coefficients[i] = g;
                coefficients[j] = l;
                changed = true;
            }
        }
        std::erase_if(coefficients, [](const BigInt& c) { return c == 1; });
    }
    return coefficients;
}

void GradedAbGroup::add_free(int degree, long rank)
{
    if (rank == 0)
        return;
    entries_[degree].free_rank += rank;
}

void GradedAbGroup::add_torsion(int degree, const BigInt& order)
{
    if (abs(order) == 1)
        return;
    entries_[degree].torsion.push_back(order);
}

GradedAbGroup GradedAbGroup::normalized() const
{
    GradedAbGroup out;
    for (const auto& [deg, e] : entries_) {
        GroupEntry n{e.free_rank, invariant_factor_chain(e.torsion)};
        if (n.free_rank != 0 || !n.torsion.empty())
            out.entries_[deg] = std::move(n);
    }
    return out;
}

GroupEntry GradedAbGroup::at(int degree) const
{
    auto it = entries_.find(degree);
    return it == entries_.end() ? GroupEntry{} : it->second;
}

int GradedAbGroup::top_degree() const
{
    int top = -1;
    for (const auto& [deg, e] : entries_)
        if (e.free_rank != 0 || !e.torsion.empty())
            top = std::max(top, deg);
    return top;
}

std::string GradedAbGroup::degree_string(int degree) const
{
    GroupEntry e = at(degree);
    e.torsion = invariant_factor_chain(e.torsion);
    std::ostringstream os;
    bool first = true;
    if (e.free_rank > 0) {
        os << "Z";
        if (e.free_rank > 1)
            os << "^" << e.free_rank;
        first = false;
    }
    for (const auto& c : e.torsion) {
        os << (first ? "" : "+") << "Z" << c.get_str();
        first = false;
    }
    return first ? "0" : os.str();
}

std::string GradedAbGroup::to_string() const
{
    std::ostringstream os;
    os << "[";
    int top = top_degree();
    for (int d = 0; d <= top; ++d)
        os << (d ? ", " : "") << degree_string(d);
    os << "]";
    return os.str();
}

bool operator==(const GradedAbGroup& a, const GradedAbGroup& b)
{
    auto na = a.normalized();
    auto nb = b.normalized();
    if (na.entries_.size() != nb.entries_.size())
        return false;
    for (auto ia = na.entries_.begin(), ib = nb.entries_.begin(); ia != na.entries_.end(); ++ia, ++ib) {
        if (ia->first != ib->first || ia->second.free_rank != ib->second.free_rank ||
            ia->second.torsion != ib->second.torsion)
            return false;
    }
    return true;
}

PoincareSeries PoincareSeries::monomial(int degree, long coeff)
{
    PoincareSeries p;
    p.add(degree, coeff);
    return p;
}

PoincareSeries PoincareSeries::from_group(const GradedAbGroup& g)
{
    PoincareSeries p;
    for (const auto& [deg, e] : g.entries())
        p.add(deg, e.free_rank);
    return p;
}

long PoincareSeries::coeff(int degree) const
{
    auto it = terms_.find(degree);
    return it == terms_.end() ? 0 : it->second;
}

void PoincareSeries::add(int degree, long c)
{
    if (c == 0)
        return;
    long& slot = terms_[degree];
    slot += c;
    if (slot == 0)
        terms_.erase(degree);
}

PoincareSeries PoincareSeries::shifted(int by) const
{
    PoincareSeries out;
    for (const auto& [d, c] : terms_)
        out.terms_[d + by] = c;
    return out;
}

PoincareSeries PoincareSeries::reduced() const
{
    PoincareSeries out = *this;
    out.terms_.erase(0);
    return out;
}

int PoincareSeries::top_degree() const
{
    return terms_.empty() ? -1 : terms_.rbegin()->first;
}

bool PoincareSeries::is_palindromic(long dim) const
{
    for (const auto& [d, c] : terms_)
        if (coeff(static_cast<int>(dim - d)) != c)
            return false;
    return true;
}

long PoincareSeries::alternating_sum() const
{
    long s = 0;
    for (const auto& [d, c] : terms_)
        s += (d % 2 == 0) ? c : -c;
    return s;
}

long PoincareSeries::even_sum() const
{
    long s = 0;
    for (const auto& [d, c] : terms_)
        if (d % 2 == 0)
            s += c;
    return s;
}

std::vector<long> PoincareSeries::coefficients() const
{
    std::vector<long> out;
    int top = top_degree();
    for (int d = 0; d <= top; ++d)
        out.push_back(coeff(d));
    return out;
}

std::string PoincareSeries::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        long mag = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (d == 0) {
            os << mag;
            continue;
        }
        if (mag != 1)
            os << mag;
        os << "s";
        if (d != 1)
            os << "^" << d;
    }
    return os.str();
}

PoincareSeries operator+(const PoincareSeries& a, const PoincareSeries& b)
{
    PoincareSeries out = a;
    for (const auto& [d, c] : b.terms_)
        out.add(d, c);
    return out;
}

PoincareSeries operator*(const PoincareSeries& a, const PoincareSeries& b)
{
    PoincareSeries out;
    for (const auto& [da, ca] : a.terms_)
        for (const auto& [db, cb] : b.terms_)
            out.add(da + db, ca * cb);
    return out;
}

}  // namespace lpt
