// Manifold invariants of CP_n(t): Euler and Kervaire characteristics,
// sigma(n1, t), (stable) parallelizability, vector fields, cat/TC bounds,
// span and immersion data, and the equivariant sphere motion planner.
#pragma once

#include "lpt/cohomology.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace lpt {

struct TriState {
    enum class Value { True, False, Unknown };

    Value value = Value::Unknown;
    std::string reason;

    static TriState yes() { return {Value::True, {}}; }
    static TriState no() { return {Value::False, {}}; }
    static TriState unknown(std::string reason) { return {Value::Unknown, std::move(reason)}; }
    static TriState from(bool b) { return b ? yes() : no(); }

    bool is_true() const { return value == Value::True; }
    bool is_false() const { return value == Value::False; }
    /// "true", "false" or "unknown:<reason>".
    std::string serialize() const;

    bool operator==(const TriState&) const = default;
};

struct Interval {
    long lo;
    long hi;
    bool operator==(const Interval&) const = default;
};

/// chi* is a residue mod 2 in odd dimension and chi/2 in even dimension.
struct KervaireValue {
    bool odd_dimensional;
    int residue;      // odd dimension
    Rational half_chi;  // even dimension
    std::string to_string() const;
};

/// Q, F2 and F_p for every prime p | t (deduplicated, in that order).
std::vector<CoeffMode> available_field_modes(const TupleSpec& spec);

/// n1 + 1 for r = 1, t = inf; 0 otherwise. Cross-checked against the
/// alternating Betti sum; a disagreement throws std::logic_error.
long euler_char(const TupleSpec& spec);
long alternating_betti_sum(const TupleSpec& spec, CoeffMode mode);

/// Case table for odd-dimensional spaces; nullopt in even dimension.
std::optional<int> kervaire_case_formula(const TupleSpec& spec);
/// Odd dimension: sum of even F2-Betti numbers mod 2 (checked against the
/// case table). Even dimension: chi / 2.
KervaireValue kervaire_semichar(const TupleSpec& spec);

/// p-adic exponent of sigma(n1, t) from the first matching case of the ladder.
int sigma_exponent(int n1, long t, long p);
/// Rejects n1 < 1 and t < 1.
BigInt sigma(int n1, long t);

TriState stably_parallelizable(const TupleSpec& spec);
TriState parallelizable(const TupleSpec& spec);
/// r > 1 or t < inf.
bool vector_field_exists(const TupleSpec& spec);

/// Reduced cat of the base CP_(n1)(t): 2 n1 + 1 for finite t, n1 for t = inf.
long base_category(const TupleSpec& spec);
Interval cat_bounds(const TupleSpec& spec);

struct TcBounds {
    Interval tc;
    Interval base_tc;
    long product_bound;  // 2r(cat_base + 1) - 2
    long linear_bound;   // r(1 + TC_base) - 1
};

/// Reduced convention. Rejects overrides with lo > hi.
TcBounds tc_bounds(const TupleSpec& spec, std::optional<Interval> base_tc_override = std::nullopt);

struct SpanInfo {
    bool applicable;  // r > 1 or t < inf
    std::optional<long> stablespan;
    bool span_equals_stablespan;
    std::optional<long> span;
    std::vector<std::string> clauses;
};

/// span_base_input is span((|n|+r) gamma_(n1)(t)) when known from the
/// literature; must lie in [0, 2(|n|+r)].
SpanInfo span_report(const TupleSpec& spec, std::optional<long> span_base_input = std::nullopt);

struct ImmersionInfo {
    std::optional<long> value;  // exact when gd was supplied
    Interval range;
};

/// gd_input is gd(-(|n|+r) gamma_(n1)(t)), in [0, 2 n1 + 2 - delta_t].
ImmersionInfo immersion_dim(const TupleSpec& spec, std::optional<long> gd_input = std::nullopt);

struct InvariantOptions {
    std::optional<long> gd;
    std::optional<long> span_base;
    std::optional<Interval> tc_override;
};

struct InvariantReport {
    long chi;
    KervaireValue chi_star;
    bool orientable;
    bool spin;
    bool has_nonzero_field;
    TriState stably_parallelizable;
    TriState parallelizable;
    Interval cat;
    TcBounds tc;
    SpanInfo span;
    ImmersionInfo imm;
};

InvariantReport invariant_report(const TupleSpec& spec, const InvariantOptions& options = {});

using CVec = std::vector<std::complex<double>>;

/// One local rule of the Z_t-equivariant motion planner on S^{2n+1}.
/// Rule 0: constant-speed minimal geodesic A -> B (needs A != -B).
/// Rule 1: half great circle A -> -A in the direction iA, then the minimal
/// geodesic -A -> B (needs A != B).
class SpherePath {
public:
    SpherePath(int n, CVec a, CVec b, int rule);

    int rule() const { return rule_; }
    /// Point at parameter u in [0, 1]; for rule 1 the first leg is u <= 1/2.
    CVec at(double u) const;
    std::vector<CVec> sample(int points) const;

private:
    CVec a_;
    CVec b_;
    int rule_;
};

std::vector<CVec> motion_plan_sphere(int n, const CVec& a, const CVec& b, int rule, int points);

}  // namespace lpt
