#include "lpt/oracle.hpp"

#include <limits>
#include <map>
#include <stdexcept>

namespace lpt {

GroupRingElement group_ring_multiply(const GroupRingElement& a, const GroupRingElement& b)
{
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("group ring elements of different orders");
    const std::size_t t = a.size();
    GroupRingElement out(t, 0);
    for (std::size_t i = 0; i < t; ++i)
        if (a[i] != 0)
            for (std::size_t j = 0; j < t; ++j)
                out[(i + j) % t] += a[i] * b[j];
    return out;
}

namespace {

GroupRingElement sphere_boundary(int j, long t)
{
    GroupRingElement g(static_cast<std::size_t>(t), 0);
    if (j == 0)
        return g;
    if (j % 2 == 0) {
        for (auto& c : g)
            c = 1;
    } else {
        g[1 % t] += 1;
        g[0] -= 1;
    }
    return g;
}

}  // namespace

bool EquivariantComplex::boundary_squares_to_zero() const
{
    for (std::size_t d = 2; d < boundary.size(); ++d) {
        const auto& outer = boundary[d - 1];
        const auto& inner = boundary[d];
        const std::size_t cols = inner.empty() ? 0 : inner[0].size();
        for (std::size_t col = 0; col < cols; ++col)
            for (std::size_t row = 0; row < outer.size(); ++row) {
                GroupRingElement acc(static_cast<std::size_t>(t), 0);
                for (std::size_t mid = 0; mid < inner.size(); ++mid) {
                    auto prod = group_ring_multiply(outer[row][mid], inner[mid][col]);
                    for (std::size_t a = 0; a < acc.size(); ++a)
                        acc[a] += prod[a];
                }
                for (long c : acc)
                    if (c != 0)
                        return false;
            }
    }
    return true;
}

EquivariantComplex sphere_complex(int n, long t)
{
    if (t < 1)
        throw std::invalid_argument("sphere complex needs t >= 1");
    if (n < 0)
        throw std::invalid_argument("sphere index must be non-negative");
    EquivariantComplex c{t, std::vector<int>(static_cast<std::size_t>(2 * n + 2), 1), {}};
    c.boundary.resize(c.ranks.size());
    for (int j = 1; j <= 2 * n + 1; ++j)
        c.boundary[static_cast<std::size_t>(j)] = {{sphere_boundary(j, t)}};
    return c;
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& col : columns)
        n += col.size();
    return n;
}

std::vector<std::vector<long>> SparseMatrix::dense() const
{
    std::vector<std::vector<long>> out(static_cast<std::size_t>(rows), std::vector<long>(static_cast<std::size_t>(cols), 0));
    for (int c = 0; c < cols; ++c)
        for (const auto& [r, v] : columns[static_cast<std::size_t>(c)])
            out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] += v;
    return out;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols != b.rows)
        throw std::invalid_argument("matrix shapes do not compose");
    SparseMatrix out{a.rows, b.cols, std::vector<std::vector<std::pair<int, long>>>(static_cast<std::size_t>(b.cols))};
    for (int c = 0; c < b.cols; ++c) {
        std::map<int, long> acc;
        for (const auto& [mid, v] : b.columns[static_cast<std::size_t>(c)])
            for (const auto& [r, w] : a.columns[static_cast<std::size_t>(mid)])
                acc[r] += v * w;
        for (const auto& [r, v] : acc)
            if (v != 0)
                out.columns[static_cast<std::size_t>(c)].emplace_back(r, v);
    }
    return out;
}

bool is_zero(const SparseMatrix& m)
{
    for (const auto& col : m.columns)
        for (const auto& entry : col)
            if (entry.second != 0)
                return false;
    return true;
}

std::size_t QuotientComplex::size() const
{
    std::size_t n = 0;
    for (int r : ranks)
        n += static_cast<std::size_t>(r);
    return n;
}

bool QuotientComplex::boundary_squares_to_zero() const
{
    for (std::size_t d = 2; d < boundary.size(); ++d)
        if (!is_zero(multiply(boundary[d - 1], boundary[d])))
            return false;
    return true;
}

std::size_t quotient_basis_size(const TupleSpec& spec)
{
    if (spec.t().is_infinite())
        throw std::invalid_argument("the oracle needs a finite t");
    const auto t = static_cast<std::size_t>(spec.t().order());
    std::size_t n = 1;
    auto mul = [&](std::size_t f) {
        if (f != 0 && n > std::numeric_limits<std::size_t>::max() / f)
            throw std::length_error("oracle basis size overflows");
        n *= f;
    };
    for (int ni : spec.n())
        mul(static_cast<std::size_t>(2 * ni + 2));
    for (int i = 1; i < spec.r(); ++i)
        mul(t);
    return n;
}

namespace {

// Cells are (j_1..j_r; a_2..a_r), the first group coordinate normalized to 0,
// packed into a mixed-radix code.
struct CellLayout {
    std::vector<int> radix_j;
    long t;
    int r;

    std::size_t encode(const std::vector<int>& j, const std::vector<long>& a) const
    {
        std::size_t code = 0;
        for (int i = 0; i < r; ++i)
            code = code * static_cast<std::size_t>(radix_j[static_cast<std::size_t>(i)]) + static_cast<std::size_t>(j[static_cast<std::size_t>(i)]);
        for (int i = 1; i < r; ++i)
            code = code * static_cast<std::size_t>(t) + static_cast<std::size_t>(a[static_cast<std::size_t>(i)]);
        return code;
    }

    void decode(std::size_t code, std::vector<int>& j, std::vector<long>& a) const
    {
        j.assign(static_cast<std::size_t>(r), 0);
        a.assign(static_cast<std::size_t>(r), 0);
        for (int i = r - 1; i >= 1; --i) {
            a[static_cast<std::size_t>(i)] = static_cast<long>(code % static_cast<std::size_t>(t));
            code /= static_cast<std::size_t>(t);
        }
        for (int i = r - 1; i >= 0; --i) {
            const auto rad = static_cast<std::size_t>(radix_j[static_cast<std::size_t>(i)]);
            j[static_cast<std::size_t>(i)] = static_cast<int>(code % rad);
            code /= rad;
        }
    }
};

QuotientComplex build_quotient(const TupleSpec& spec, std::size_t cap, bool parallel)
{
    const std::size_t total = quotient_basis_size(spec);
    if (total > cap)
        throw std::length_error("oracle basis size " + std::to_string(total) + " exceeds the cap " +
                                std::to_string(cap));
    const long t = spec.t().order();
    const int r = spec.r();
    CellLayout layout{{}, t, r};
    for (int ni : spec.n())
        layout.radix_j.push_back(2 * ni + 2);

    std::vector<EquivariantComplex> spheres;
    for (int ni : spec.n())
        spheres.push_back(sphere_complex(ni, t));

    const int top = spec.dim();
    std::vector<int> index_of(total);
    std::vector<int> ranks(static_cast<std::size_t>(top) + 1, 0);
    std::vector<std::vector<std::size_t>> cells_in_degree(static_cast<std::size_t>(top) + 1);
    {
        std::vector<int> j;
        std::vector<long> a;
        for (std::size_t code = 0; code < total; ++code) {
            layout.decode(code, j, a);
            int d = 0;
            for (int x : j)
                d += x;
            index_of[code] = ranks[static_cast<std::size_t>(d)]++;
            cells_in_degree[static_cast<std::size_t>(d)].push_back(code);
        }
    }

    QuotientComplex qc{spec, ranks, std::vector<SparseMatrix>(static_cast<std::size_t>(top) + 1)};
    qc.boundary[0] = SparseMatrix{0, ranks[0], std::vector<std::vector<std::pair<int, long>>>(static_cast<std::size_t>(ranks[0]))};
    for (int d = 1; d <= top; ++d) {
        const auto& cells = cells_in_degree[static_cast<std::size_t>(d)];
        SparseMatrix m{ranks[static_cast<std::size_t>(d - 1)], ranks[static_cast<std::size_t>(d)],
                       std::vector<std::vector<std::pair<int, long>>>(cells.size())};
        const auto count = static_cast<long>(cells.size());
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
        for (long col = 0; col < count; ++col) {
            std::vector<int> j;
            std::vector<long> a;
            layout.decode(cells[static_cast<std::size_t>(col)], j, a);
            std::map<int, long> acc;
            long sign = 1;
            for (int k = 0; k < r; ++k) {
                const int jk = j[static_cast<std::size_t>(k)];
                if (jk > 0) {
                    const auto& g = spheres[static_cast<std::size_t>(k)].boundary[static_cast<std::size_t>(jk)][0][0];
                    for (long b = 0; b < t; ++b) {
                        const long coeff = g[static_cast<std::size_t>(b)];
                        if (coeff == 0)
                            continue;
                        std::vector<int> j2 = j;
                        std::vector<long> a2 = a;
                        j2[static_cast<std::size_t>(k)] -= 1;
                        if (k == 0) {
                            for (int i = 1; i < r; ++i)
                                a2[static_cast<std::size_t>(i)] = ((a2[static_cast<std::size_t>(i)] - b) % t + t) % t;
                        } else {
                            a2[static_cast<std::size_t>(k)] = (a2[static_cast<std::size_t>(k)] + b) % t;
                        }
                        acc[index_of[layout.encode(j2, a2)]] += sign * coeff;
                    }
                }
                if (jk % 2 == 1)
                    sign = -sign;
            }
            auto& out = m.columns[static_cast<std::size_t>(col)];
            for (const auto& [row, v] : acc)
                if (v != 0)
                    out.emplace_back(row, v);
        }
        qc.boundary[static_cast<std::size_t>(d)] = std::move(m);
    }
    if (!qc.boundary_squares_to_zero())
        throw std::logic_error("quotient complex fails d o d = 0 for " + spec.to_string());
    return qc;
}

}  // namespace

QuotientComplex product_quotient_complex(const TupleSpec& spec, std::size_t cap)
{
    return build_quotient(spec, cap, true);
}

QuotientComplex product_quotient_complex_serial(const TupleSpec& spec, std::size_t cap)
{
    return build_quotient(spec, cap, false);
}

}  // namespace lpt
