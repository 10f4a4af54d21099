#include "lpt/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace lpt {

CoeffMode parse_coeff_mode(const std::string& text)
{
    if (text == "Z")
        return CoeffMode::integers();
    if (text == "Q")
        return CoeffMode::rationals();
    std::string digits;
    if (text.rfind("F:", 0) == 0)
        digits = text.substr(2);
    else if (text.size() > 1 && text[0] == 'F')
        digits = text.substr(1);
    else
        throw std::invalid_argument("unknown coefficient mode '" + text + "'");
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 9)
        throw std::invalid_argument("unknown coefficient mode '" + text + "'");
    return CoeffMode::prime_field(std::stol(digits));
}

std::string coeff_mode_name(const CoeffMode& mode)
{
    switch (mode.kind()) {
    case CoeffRing::Kind::Integers:
        return "Z";
    case CoeffRing::Kind::Rationals:
        return "Q";
    case CoeffRing::Kind::PrimeField:
        return mode.characteristic() == 2 ? std::string("F2")
                                          : "F:" + std::to_string(mode.characteristic());
    }
    return "?";
}

CohomologyRing::CohomologyRing(TupleSpec spec, CoeffMode mode)
    : spec_(std::move(spec)), mode_(mode)
{
    const Torsion t = spec_.t();
    if (t.is_infinite()) {
        presentation_ = Presentation::Projective;
    } else if (mode_.kind() == CoeffRing::Kind::Integers) {
        presentation_ = Presentation::IntegralLens;
    } else if (mode_.kind() == CoeffRing::Kind::Rationals ||
               t.order() % mode_.characteristic() != 0) {
        presentation_ = Presentation::TInvertible;
    } else {
        presentation_ = Presentation::PrimaryLens;
        primary_exponent_ = nu_p(mode_.characteristic(), t.order());
    }
}

CohomologyRing CohomologyRing::build(const TupleSpec& spec, CoeffMode mode)
{
    CohomologyRing ring(spec, mode);
    const int n1 = spec.n1();
    std::vector<BasePart> base;
    switch (ring.presentation_) {
    case Presentation::Projective:
        for (int a = 0; a <= n1; ++a)
            base.push_back(BasePart::zpow(a));
        break;
    case Presentation::IntegralLens:
        base.push_back(BasePart::zpow(0));
        // Z/1 is the zero group.
        if (spec.t().order() > 1)
            for (int a = 1; a <= n1; ++a)
                base.push_back(BasePart::zpow(a));
        base.push_back(BasePart::omega());
        break;
    case Presentation::TInvertible:
        base.push_back(BasePart::zpow(0));
        base.push_back(BasePart::omega());
        break;
    case Presentation::PrimaryLens:
        for (int a = 0; a <= n1; ++a)
            for (int eps = 0; eps <= 1; ++eps)
                base.push_back(BasePart::yz(eps, a));
        break;
    }
    const std::uint64_t subsets = 1ULL << (spec.r() - 1);
    for (const auto& b : base) {
        for (std::uint64_t s = 0; s < subsets; ++s) {
            BasisMonomial m{b, s << 2};
            ring.basis_.push_back(m);
        }
    }
    for (const auto& m : ring.basis_) {
        int d = ring.base_degree(m.base);
        for (int i = 2; i <= spec.r(); ++i)
            if (m.exterior >> i & 1ULL)
                d += 2 * spec.n_at(i) + 1;
        ring.degree_of_[m] = d;
    }
    std::stable_sort(ring.basis_.begin(), ring.basis_.end(),
                     [&](const BasisMonomial& a, const BasisMonomial& b) {
                         int da = ring.degree_of_.at(a), db = ring.degree_of_.at(b);
                         return da != db ? da < db : a < b;
                     });
    return ring;
}

bool CohomologyRing::y_squared_is_z() const
{
    return presentation_ == Presentation::PrimaryLens && mode_.characteristic() == 2 &&
           primary_exponent_ == 1;
}

std::vector<BasisMonomial> CohomologyRing::basis_in_degree(int degree) const
{
    std::vector<BasisMonomial> out;
    for (const auto& m : basis_)
        if (degree_of_.at(m) == degree)
            out.push_back(m);
    return out;
}

bool CohomologyRing::contains(const BasisMonomial& m) const
{
    return degree_of_.count(m) != 0;
}

int CohomologyRing::degree(const BasisMonomial& m) const
{
    auto it = degree_of_.find(m);
    if (it == degree_of_.end())
        throw std::invalid_argument("monomial " + name(m) + " is not in the basis of " +
                                    spec_.to_string());
    return it->second;
}

int CohomologyRing::base_degree(const BasePart& b) const
{
    switch (b.kind) {
    case BasePart::Kind::ZPow:
        return 2 * b.a;
    case BasePart::Kind::Omega:
        return 2 * spec_.n1() + 1;
    case BasePart::Kind::YZ:
        return b.eps + 2 * b.a;
    }
    return 0;
}

std::optional<long> CohomologyRing::torsion_order(const BasisMonomial& m) const
{
    if (presentation_ == Presentation::IntegralLens && m.base.kind == BasePart::Kind::ZPow &&
        m.base.a > 0)
        return spec_.t().order();
    return std::nullopt;
}

BasisMonomial CohomologyRing::unit() const
{
    return presentation_ == Presentation::PrimaryLens ? BasisMonomial{BasePart::yz(0, 0), 0}
                                                      : BasisMonomial{BasePart::zpow(0), 0};
}

std::vector<BasisMonomial> CohomologyRing::generators() const
{
    std::vector<BasisMonomial> gens;
    const int n1 = spec_.n1();
    switch (presentation_) {
    case Presentation::Projective:
        if (n1 >= 1)
            gens.push_back({BasePart::zpow(1), 0});
        break;
    case Presentation::IntegralLens:
        if (n1 >= 1 && spec_.t().order() > 1)
            gens.push_back({BasePart::zpow(1), 0});
        gens.push_back({BasePart::omega(), 0});
        break;
    case Presentation::TInvertible:
        gens.push_back({BasePart::omega(), 0});
        break;
    case Presentation::PrimaryLens:
        gens.push_back({BasePart::yz(1, 0), 0});
        if (n1 >= 1)
            gens.push_back({BasePart::yz(0, 1), 0});
        break;
    }
    BasisMonomial u = unit();
    for (int i = 2; i <= spec_.r(); ++i)
        gens.push_back({u.base, 1ULL << i});
    return gens;
}

std::vector<std::string> CohomologyRing::relations() const
{
    std::vector<std::string> rels;
    const int n1 = spec_.n1();
    const std::string top = "z^" + std::to_string(n1 + 1) + " = 0";
    switch (presentation_) {
    case Presentation::Projective:
        rels.push_back(top);
        break;
    case Presentation::IntegralLens:
        rels.push_back(top);
        rels.push_back(std::to_string(spec_.t().order()) + "z = 0");
        rels.push_back("w*c = 0 for deg c > 0");
        break;
    case Presentation::TInvertible:
        rels.push_back("z = 0");
        rels.push_back("w*c = 0 for deg c > 0");
        break;
    case Presentation::PrimaryLens:
        rels.push_back(top);
        rels.push_back(y_squared_is_z() ? "y^2 = z" : "y^2 = 0");
        break;
    }
    for (int i = 2; i <= spec_.r(); ++i)
        rels.push_back("x" + std::to_string(i) + "^2 = 0");
    return rels;
}

std::string CohomologyRing::name(const BasisMonomial& m) const
{
    std::vector<std::string> parts;
    auto zpart = [](int a) {
        return a == 0 ? std::string() : a == 1 ? std::string("z") : "z^" + std::to_string(a);
    };
    switch (m.base.kind) {
    case BasePart::Kind::ZPow:
        if (m.base.a > 0)
            parts.push_back(zpart(m.base.a));
        break;
    case BasePart::Kind::Omega:
        parts.push_back("w");
        break;
    case BasePart::Kind::YZ:
        if (m.base.eps)
            parts.push_back("y");
        if (m.base.a > 0)
            parts.push_back(zpart(m.base.a));
        break;
    }
    for (int i = 2; i < 64; ++i)
        if (m.exterior >> i & 1ULL)
            parts.push_back("x" + std::to_string(i));
    if (parts.empty())
        return "1";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
        out += " " + parts[i];
    return out;
}

std::string CohomologyRing::to_string(const Combination& c) const
{
    if (c.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, coeff] : c) {
        BigInt mag = abs(coeff);
        if (first)
            os << (coeff < 0 ? "-" : "");
        else
            os << (coeff < 0 ? " - " : " + ");
        first = false;
        std::string nm = name(m);
        if (mag != 1)
            os << mag.get_str() << (nm == "1" ? "" : "*" + nm);
        else
            os << nm;
    }
    return os.str();
}

bool CohomologyRing::base_is_odd(const BasePart& b) const
{
    return b.kind == BasePart::Kind::Omega || (b.kind == BasePart::Kind::YZ && b.eps == 1);
}

int CohomologyRing::exterior_parity(std::uint64_t mask) const
{
    return std::popcount(mask) & 1;
}

std::optional<std::pair<BasePart, int>> CohomologyRing::multiply_base(const BasePart& a,
                                                                      const BasePart& b) const
{
    const int n1 = spec_.n1();
    using K = BasePart::Kind;
    if (a.kind == K::YZ) {
        int z = a.a + b.a;
        if (a.eps + b.eps == 2) {
            if (!y_squared_is_z())
                return std::nullopt;
            ++z;
            if (z > n1)
                return std::nullopt;
            return std::pair{BasePart::yz(0, z), 1};
        }
        if (z > n1)
            return std::nullopt;
        return std::pair{BasePart::yz(a.eps + b.eps, z), 1};
    }
    if (a.kind == K::Omega || b.kind == K::Omega) {
        const BasePart& other = a.kind == K::Omega ? b : a;
        if (other.kind == K::ZPow && other.a == 0)
            return std::pair{BasePart::omega(), 1};
        return std::nullopt;
    }
    int z = a.a + b.a;
    if (z > n1)
        return std::nullopt;
    return std::pair{BasePart::zpow(z), 1};
}

std::optional<std::pair<BasisMonomial, int>> CohomologyRing::multiply_monomials(
    const BasisMonomial& a, const BasisMonomial& b) const
{
    if (a.exterior & b.exterior)
        return std::nullopt;
    auto base = multiply_base(a.base, b.base);
    if (!base)
        return std::nullopt;
    int sign = base->second;
    // Moving b's base part past a's exterior letters.
    if (exterior_parity(a.exterior) && base_is_odd(b.base))
        sign = -sign;
    // Merging x_S1 x_S2 into ascending order.
    int inversions = 0;
    for (int i = 2; i < 64; ++i)
        if (a.exterior >> i & 1ULL)
            inversions += std::popcount(b.exterior & ((1ULL << i) - 1));
    if (inversions & 1)
        sign = -sign;
    BasisMonomial out{base->first, a.exterior | b.exterior};
    if (!contains(out))
        return std::nullopt;
    return std::pair{out, sign};
}

void CohomologyRing::normalize(Combination& c) const
{
    for (auto it = c.begin(); it != c.end();) {
        BigInt& v = it->second;
        if (mode_.kind() == CoeffRing::Kind::PrimeField) {
            v = v % mode_.characteristic();
            if (v < 0)
                v += mode_.characteristic();
        } else if (auto order = torsion_order(it->first)) {
            v = v % *order;
            if (v < 0)
                v += *order;
        }
        if (v == 0)
            it = c.erase(it);
        else
            ++it;
    }
}

Combination CohomologyRing::single(const BasisMonomial& m, const BigInt& coeff) const
{
    degree(m);
    Combination c{{m, coeff}};
    normalize(c);
    return c;
}

Combination CohomologyRing::multiply(const BasisMonomial& a, const BasisMonomial& b) const
{
    degree(a);
    degree(b);
    Combination out;
    if (auto prod = multiply_monomials(a, b))
        out[prod->first] = prod->second;
    normalize(out);
    return out;
}

Combination CohomologyRing::multiply(const Combination& a, const Combination& b) const
{
    Combination out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
            if (auto prod = multiply_monomials(ma, mb))
                out[prod->first] += ca * cb * prod->second;
    normalize(out);
    return out;
}

GradedAbGroup graded_groups(const CohomologyRing& ring)
{
    GradedAbGroup g;
    for (const auto& m : ring.basis()) {
        int d = ring.degree(m);
        if (auto order = ring.torsion_order(m))
            g.add_torsion(d, BigInt(*order));
        else
            g.add_free(d, 1);
    }
    return g;
}

PoincareSeries poincare_polynomial(const CohomologyRing& ring)
{
    if (!is_field(ring.mode()))
        throw std::invalid_argument("Poincare polynomial needs field coefficients");
    PoincareSeries p;
    for (const auto& m : ring.basis())
        p.add(ring.degree(m), 1);
    return p;
}

namespace {

TupleSpec reduced_tuple(const TupleSpec& full, const std::vector<int>& kept)
{
    std::vector<int> n;
    for (int i : kept)
        n.push_back(full.n_at(i));
    return TupleSpec(n, full.t());
}

std::vector<int> validated_kept(const TupleSpec& full, std::vector<int> kept)
{
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (kept.empty() || kept.front() != 1)
        throw std::invalid_argument("restriction must keep index 1 (the retraction needs n1)");
    if (kept.back() > full.r())
        throw std::invalid_argument("kept index out of range");
    return kept;
}

}  // namespace

RestrictionMap::RestrictionMap(const TupleSpec& full, CoeffMode mode, std::vector<int> kept)
    : kept_(validated_kept(full, std::move(kept))),
      source_(CohomologyRing::build(reduced_tuple(full, kept_), mode)),
      target_(CohomologyRing::build(full, mode))
{
}

BasisMonomial RestrictionMap::apply(const BasisMonomial& m) const
{
    source_.degree(m);
    BasisMonomial out{m.base, 0};
    for (std::size_t k = 2; k <= kept_.size(); ++k)
        if (m.exterior >> k & 1ULL)
            out.exterior |= 1ULL << kept_[k - 1];
    return out;
}

std::optional<BasisMonomial> RestrictionMap::section(const BasisMonomial& m) const
{
    target_.degree(m);
    BasisMonomial out{m.base, 0};
    std::uint64_t remaining = m.exterior;
    for (std::size_t k = 2; k <= kept_.size(); ++k) {
        std::uint64_t bit = 1ULL << kept_[k - 1];
        if (remaining & bit) {
            out.exterior |= 1ULL << k;
            remaining &= ~bit;
        }
    }
    if (remaining != 0)
        return std::nullopt;
    return out;
}

std::vector<BasisMonomial> RestrictionMap::image() const
{
    std::vector<BasisMonomial> out;
    for (const auto& m : source_.basis())
        out.push_back(apply(m));
    return out;
}

RestrictionMap restriction_p(const TupleSpec& full, CoeffMode mode, std::vector<int> kept)
{
    return RestrictionMap(full, mode, std::move(kept));
}

std::string ProjectionRule::describe() const
{
    std::string s = "z -> z, x_i -> x_i";
    if (omega_factor)
        s += ", w' -> " + std::to_string(*omega_factor) + "w";
    return s;
}

ProjectionRule projection_pi_star(long t, Torsion t_prime)
{
    if (t < 1)
        throw std::invalid_argument("t must be a positive integer");
    if (t_prime.is_infinite())
        return ProjectionRule{t, t_prime, std::nullopt};
    if (t_prime.order() % t != 0)
        throw std::invalid_argument("pi_{t,t'} needs t | t'; got t=" + std::to_string(t) +
                                    ", t'=" + t_prime.to_string());
    // Both routes S -> L(t) -> L(t') and S -> L(t') must pull omega' back to t' * iota.
    return ProjectionRule{t, t_prime, t_prime.order() / t};
}

ReductionMap::ReductionMap(const CohomologyRing& integral, long p)
    : source_(integral),
      target_(CohomologyRing::build(integral.spec(), CoeffMode::prime_field(p)))
{
    if (integral.mode().kind() != CoeffRing::Kind::Integers)
        throw std::invalid_argument("coefficient change starts from integral cohomology");
}

Combination ReductionMap::apply(const BasisMonomial& m) const
{
    source_.degree(m);
    const int n1 = source_.spec().n1();
    std::optional<BasePart> base;
    switch (source_.presentation()) {
    case Presentation::Projective:
        base = m.base;
        break;
    case Presentation::IntegralLens:
        if (target_.presentation() == Presentation::PrimaryLens) {
            base = m.base.kind == BasePart::Kind::Omega ? BasePart::yz(1, n1)
                                                        : BasePart::yz(0, m.base.a);
        } else if (m.base.kind == BasePart::Kind::Omega || m.base.a == 0) {
            base = m.base;
        }
        break;
    default:
        break;
    }
    if (!base)
        return {};
    return target_.single(BasisMonomial{*base, m.exterior});
}

ReductionMap change_coefficients(const CohomologyRing& integral, long p)
{
    return ReductionMap(integral, p);
}

int cup_length(const CohomologyRing& ring)
{
    if (!is_field(ring.mode()))
        throw std::invalid_argument("cup length is computed over a field");
    const auto gens = ring.generators();
    int best = 0;
    std::function<void(std::size_t, const BasisMonomial&, int)> search =
        [&](std::size_t idx, const BasisMonomial& current, int length) {
            best = std::max(best, length);
            if (idx == gens.size())
                return;
            search(idx + 1, current, length);
            BasisMonomial cur = current;
            int k = 0;
            while (auto next = ring.multiply_monomials(cur, gens[idx])) {
                cur = next->first;
                ++k;
                search(idx + 1, cur, length + k);
            }
        };
    search(0, ring.unit(), 0);
    return best;
}

namespace {

using TensorKey = std::pair<BasisMonomial, BasisMonomial>;
using TensorCombination = std::map<TensorKey, BigInt>;

void reduce(const CohomologyRing& ring, TensorCombination& c)
{
    const bool modp = ring.mode().kind() == CoeffRing::Kind::PrimeField;
    const long p = ring.mode().characteristic();
    for (auto it = c.begin(); it != c.end();) {
        if (modp) {
            it->second %= p;
            if (it->second < 0)
                it->second += p;
        }
        if (it->second == 0)
            it = c.erase(it);
        else
            ++it;
    }
}

// Multiplies by g(x)1 - 1(x)g.
TensorCombination times_difference(const CohomologyRing& ring, const TensorCombination& c,
                                   const BasisMonomial& g)
{
    const int gdeg = ring.degree(g);
    TensorCombination out;
    for (const auto& [key, coeff] : c) {
        const auto& [a, b] = key;
        if (auto ag = ring.multiply_monomials(a, g)) {
            int sign = ag->second;
            if ((ring.degree(b) & 1) && (gdeg & 1))
                sign = -sign;
            out[{ag->first, b}] += coeff * sign;
        }
        if (auto bg = ring.multiply_monomials(b, g))
            out[{a, bg->first}] -= coeff * bg->second;
    }
    reduce(ring, out);
    return out;
}

}  // namespace

int zero_divisor_cup_length(const CohomologyRing& ring)
{
    if (!is_field(ring.mode()))
        throw std::invalid_argument("zero-divisor cup length is computed over a field");
    const auto gens = ring.generators();
    int best = 0;
    std::function<void(std::size_t, const TensorCombination&, int)> search =
        [&](std::size_t idx, const TensorCombination& current, int length) {
            best = std::max(best, length);
            if (idx == gens.size())
                return;
            search(idx + 1, current, length);
            TensorCombination cur = current;
            int k = 0;
            while (true) {
                cur = times_difference(ring, cur, gens[idx]);
                if (cur.empty())
                    break;
                ++k;
                search(idx + 1, cur, length + k);
            }
        };
    TensorCombination one{{{ring.unit(), ring.unit()}, BigInt(1)}};
    search(0, one, 0);
    return best;
}

}  // namespace lpt
