// Brute-force homology of finite-t lens product spaces from the free
// Z[Z_t]-equivariant cell structure of a product of odd spheres.
//
// Parallel entry points use OpenMP; the *_serial variants are the reference
// implementations used by the tests and the benchmark.
#pragma once

#include "lpt/cohomology.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace lpt {

/// Element of Z[Z_t]; entry a is the coefficient of lambda^a.
using GroupRingElement = std::vector<long>;

GroupRingElement group_ring_multiply(const GroupRingElement& a, const GroupRingElement& b);

struct EquivariantComplex {
    long t;
    /// Free Z[Z_t]-rank in each degree 0..top.
    std::vector<int> ranks;
    /// boundary[d][row][col] for d >= 1: C_d -> C_{d-1}; boundary[0] is empty.
    std::vector<std::vector<std::vector<GroupRingElement>>> boundary;

    bool boundary_squares_to_zero() const;
};

/// Minimal free Z_t-CW structure on S^{2n+1}.
EquivariantComplex sphere_complex(int n, long t);

/// Column-major sparse integer matrix.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, long>>> columns;

    std::size_t nonzeros() const;
    std::vector<std::vector<long>> dense() const;
};

/// this * other, or throws on a shape mismatch.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
bool is_zero(const SparseMatrix& m);

struct QuotientComplex {
    TupleSpec spec;
    std::vector<int> ranks;
    /// boundary[d]: C_d -> C_{d-1}; boundary[0] is 0 x rank_0.
    std::vector<SparseMatrix> boundary;

    std::size_t size() const;
    bool boundary_squares_to_zero() const;
};

inline constexpr std::size_t kDefaultOracleCap = 200000;

/// Basis size prod(2 n_i + 2) t^{r-1}.
std::size_t quotient_basis_size(const TupleSpec& spec);

/// Throws std::invalid_argument for t = inf and std::length_error above the
/// cap. d o d = 0 is checked before returning.
QuotientComplex product_quotient_complex(const TupleSpec& spec, std::size_t cap = kDefaultOracleCap);
QuotientComplex product_quotient_complex_serial(const TupleSpec& spec, std::size_t cap = kDefaultOracleCap);

/// Nonzero invariant factors d1 | d2 | ... (exact).
std::vector<BigInt> invariant_factors(const SparseMatrix& m);
std::vector<BigInt> invariant_factors(const std::vector<std::vector<long>>& m);
long rank_mod_p(const SparseMatrix& m, long p);

struct HomologyResult {
    CoeffMode mode;
    /// Integral homology (INT mode).
    GradedAbGroup integral;
    /// Betti numbers by degree (field modes; also filled for INT with the
    /// free ranks).
    std::vector<long> betti;
};

HomologyResult homology(const QuotientComplex& c, CoeffMode mode);
HomologyResult homology_serial(const QuotientComplex& c, CoeffMode mode);

/// H^d = Free(H_d) + Tors(H_{d-1}).
GradedAbGroup cohomology_from_homology(const GradedAbGroup& h);

struct DegreeVerdict {
    int degree;
    std::string oracle;
    std::string theory;
    bool match;
};

struct OracleReport {
    TupleSpec spec;
    CoeffMode mode;
    std::size_t cells;
    std::vector<DegreeVerdict> degrees;
    bool match;
};

OracleReport compare_with_theory(const TupleSpec& spec, CoeffMode mode, std::size_t cap = kDefaultOracleCap);

}  // namespace lpt
