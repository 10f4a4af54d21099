#include "lpt/oracle.hpp"

#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <type_traits>

namespace lpt {

namespace {

struct IntegerOps {
    using T = BigInt;
    static bool is_pivot(const T& v) { return abs(v) == 1; }
    // v = +-1, so v is its own inverse.
    static T factor(const T& a, const T& pivot) { return a * pivot; }
    static void sub_mul(T& x, const T& m, const T& v) { x -= m * v; }
    static bool is_zero(const T& v) { return v == 0; }
};

struct ModPOps {
    using T = long;
    long p;
    bool is_pivot(T v) const { return v != 0; }
    T inverse(T v) const
    {
        T result = 1, base = v, e = p - 2;
        while (e > 0) {
            if (e & 1)
                result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    }
    T factor(T a, T pivot) const { return a * inverse(pivot) % p; }
    void sub_mul(T& x, T m, T v) const { x = ((x - m * v) % p + p) % p; }
    static bool is_zero(T v) { return v == 0; }
};

// Sparse Gaussian elimination restricted to pivots accepted by Ops, with a
// Markowitz-style choice of pivot to limit fill-in.
template <class Ops>
class Eliminator {
public:
    using T = typename Ops::T;

    Eliminator(const SparseMatrix& m, Ops ops) : ops_(ops), cols_(static_cast<std::size_t>(m.cols)), rows_(static_cast<std::size_t>(m.rows))
    {
        for (int c = 0; c < m.cols; ++c)
            for (const auto& [r, v] : m.columns[static_cast<std::size_t>(c)]) {
                T value = convert(v);
                if (Ops::is_zero(value))
                    continue;
                cols_[static_cast<std::size_t>(c)][r] = value;
                rows_[static_cast<std::size_t>(r)].insert(c);
            }
    }

    long run()
    {
        long pivots = 0;
        while (step())
            ++pivots;
        return pivots;
    }

    /// Remaining nonzero block, rows and columns compacted.
    std::vector<std::vector<T>> residual() const
    {
        std::map<int, int> row_index;
        std::vector<int> live_cols;
        for (std::size_t c = 0; c < cols_.size(); ++c) {
            if (cols_[c].empty())
                continue;
            live_cols.push_back(static_cast<int>(c));
            for (const auto& entry : cols_[c])
                row_index.emplace(entry.first, 0);
        }
        int next = 0;
        for (auto& [r, idx] : row_index)
            idx = next++;
        std::vector<std::vector<T>> out(row_index.size(), std::vector<T>(live_cols.size(), T(0)));
        for (std::size_t k = 0; k < live_cols.size(); ++k)
            for (const auto& [r, v] : cols_[static_cast<std::size_t>(live_cols[k])])
                out[static_cast<std::size_t>(row_index[r])][k] = v;
        return out;
    }

private:
    T convert(long v) const
    {
        if constexpr (std::is_same_v<Ops, ModPOps>)
            return ((v % ops_.p) + ops_.p) % ops_.p;
        else
            return T(v);
    }

    bool step()
    {
        int best_row = -1, best_col = -1;
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (std::size_t c = 0; c < cols_.size() && best_cost > 0; ++c) {
            const std::size_t col_fill = cols_[c].size();
            if (col_fill == 0)
                continue;
            for (const auto& [r, v] : cols_[c]) {
                if (!ops_.is_pivot(v))
                    continue;
                const std::size_t cost = (rows_[static_cast<std::size_t>(r)].size() - 1) * (col_fill - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_row = r;
                    best_col = static_cast<int>(c);
                    if (cost == 0)
                        break;
                }
            }
        }
        if (best_row < 0)
            return false;

        auto& pivot_col = cols_[static_cast<std::size_t>(best_col)];
        const T pivot = pivot_col.at(best_row);
        const std::set<int> others = rows_[static_cast<std::size_t>(best_row)];
        for (int c : others) {
            if (c == best_col)
                continue;
            auto& col = cols_[static_cast<std::size_t>(c)];
            const T m = ops_.factor(col.at(best_row), pivot);
            for (const auto& [r, v] : pivot_col) {
                auto [it, inserted] = col.try_emplace(r, T(0));
                ops_.sub_mul(it->second, m, v);
                if (Ops::is_zero(it->second)) {
                    col.erase(it);
                    rows_[static_cast<std::size_t>(r)].erase(c);
                } else if (inserted) {
                    rows_[static_cast<std::size_t>(r)].insert(c);
                }
            }
        }
        // Row best_row now meets only the pivot column; row operations clear
        // the rest of that column without touching anything else.
        for (const auto& entry : pivot_col)
            rows_[static_cast<std::size_t>(entry.first)].erase(best_col);
        pivot_col.clear();
        return true;
    }

    Ops ops_;
    std::vector<std::map<int, T>> cols_;
    std::vector<std::set<int>> rows_;
};

// Diagonalizes a dense integer matrix by repeated division with remainder
// using a smallest-entry pivot; returns the nonzero diagonal.
std::vector<BigInt> dense_diagonal(std::vector<std::vector<BigInt>> a)
{
    std::vector<BigInt> diag;
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
        auto bring_smallest = [&](bool whole) {
            std::size_t bi = rows, bj = cols;
            for (std::size_t i = k; i < rows; ++i)
                for (std::size_t j = k; j < cols; ++j) {
                    if (!whole && i != k && j != k)
                        continue;
                    if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
                }
            if (bi == rows)
                return false;
            std::swap(a[k], a[bi]);
            for (auto& row : a)
                std::swap(row[k], row[bj]);
            return true;
        };
        if (!bring_smallest(true))
            break;
        for (;;) {
            bool clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (a[i][k] == 0)
                    continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][k].get_mpz_t(), a[k][k].get_mpz_t());
                for (std::size_t j = k; j < cols; ++j)
                    a[i][j] -= q * a[k][j];
                if (a[i][k] != 0)
                    clean = false;
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (a[k][j] == 0)
                    continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), a[k][j].get_mpz_t(), a[k][k].get_mpz_t());
                for (std::size_t i = k; i < rows; ++i)
                    a[i][j] -= q * a[i][k];
                if (a[k][j] != 0)
                    clean = false;
            }
            if (clean)
                break;
            bring_smallest(false);
        }
        diag.push_back(abs(a[k][k]));
    }
    return diag;
}

std::vector<BigInt> finish(long units, const std::vector<BigInt>& diag)
{
    std::vector<BigInt> chain = invariant_factor_chain(diag);
    const long ones = units + static_cast<long>(diag.size()) - static_cast<long>(chain.size());
    std::vector<BigInt> out(static_cast<std::size_t>(ones), BigInt(1));
    out.insert(out.end(), chain.begin(), chain.end());
    return out;
}

}  // namespace

std::vector<BigInt> invariant_factors(const SparseMatrix& m)
{
    Eliminator<IntegerOps> e(m, IntegerOps{});
    const long units = e.run();
    return finish(units, dense_diagonal(e.residual()));
}

std::vector<BigInt> invariant_factors(const std::vector<std::vector<long>>& m)
{
    std::vector<std::vector<BigInt>> a;
    for (const auto& row : m)
        a.emplace_back(row.begin(), row.end());
    return finish(0, dense_diagonal(std::move(a)));
}

long rank_mod_p(const SparseMatrix& m, long p)
{
    if (!is_prime(p))
        throw std::invalid_argument("rank_mod_p needs a prime");
    Eliminator<ModPOps> e(m, ModPOps{p});
    return e.run();
}

}  // namespace lpt
