#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace burkhardt {

template <class R>
using Matrix = std::vector<std::vector<R>>;

template <class R>
Matrix<R> identity_matrix(std::size_t n) {
    Matrix<R> m(n, std::vector<R>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = R(1);
    return m;
}

template <class R>
Matrix<R> multiply(const Matrix<R>& a, const Matrix<R>& b) {
    if (a.empty() || a.front().size() != b.size()) throw std::invalid_argument("multiply: shape");
    Matrix<R> r(a.size(), std::vector<R>(b.front().size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b.front().size(); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    }
    return r;
}

template <class R>
Matrix<R> transpose(const Matrix<R>& a) {
    if (a.empty()) return {};
    Matrix<R> r(a.front().size(), std::vector<R>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    }
    return r;
}

template <class R>
R trace(const Matrix<R>& a) {
    R t;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

/// Division-free determinant (Laplace expansion memoized over column
/// subsets); valid over any commutative ring. Intended for n <= ~12.
template <class R>
R determinant(const Matrix<R>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("determinant: not square");
    }
    if (n == 0) return R(1);
    std::unordered_map<std::uint32_t, R> memo;
    // minor formed by rows row..n-1 and the columns in `cols`
    auto rec = [&](auto&& self, std::size_t row, std::uint32_t cols) -> R {
        if (row == n) return R(1);
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        R acc;
        int sign = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(cols & (1u << j))) continue;
            if (!m[row][j].is_zero()) {
                R term = m[row][j] * self(self, row + 1, cols & ~(1u << j));
                if (sign > 0) {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            sign = -sign;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return rec(rec, 0, (n >= 32 ? 0xffffffffu : ((1u << n) - 1u)));
}

/// Rank over a field by Gaussian elimination.
template <class R>
std::size_t rank(Matrix<R> a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size();
    const std::size_t cols = a.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        const R inv = R(1) / a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            const R f = a[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

/// Solves X * A = B for X over a field, where A is k x m of rank k and B is
/// n x m. Returns nullopt when some row of B is not in the row space of A.
template <class R>
std::optional<Matrix<R>> solve_row_combinations(const Matrix<R>& a, const Matrix<R>& b) {
    const std::size_t k = a.size();
    const std::size_t m = a.empty() ? 0 : a.front().size();
    // Reduce [A | I] to find, for pivot columns, the row operations.
    Matrix<R> work = a;
    Matrix<R> ops = identity_matrix<R>(k);
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < k; ++c) {
        std::size_t piv = r;
        while (piv < k && work[piv][c].is_zero()) ++piv;
        if (piv == k) continue;
        std::swap(work[piv], work[r]);
        std::swap(ops[piv], ops[r]);
        const R inv = R(1) / work[r][c];
        for (std::size_t j = 0; j < m; ++j) work[r][j] *= inv;
        for (std::size_t j = 0; j < k; ++j) ops[r][j] *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == r || work[i][c].is_zero()) continue;
            const R f = work[i][c];
            for (std::size_t j = 0; j < m; ++j) work[i][j] -= f * work[r][j];
            for (std::size_t j = 0; j < k; ++j) ops[i][j] -= f * ops[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r != k) throw std::invalid_argument("solve_row_combinations: rows not independent");
    Matrix<R> x(b.size(), std::vector<R>(k));
    for (std::size_t i = 0; i < b.size(); ++i) {
        // coefficients on the reduced rows are read off pivot columns
        std::vector<R> y(k);
        for (std::size_t p = 0; p < k; ++p) y[p] = b[i][pivot_col[p]];
        std::vector<R> residual = b[i];
        for (std::size_t p = 0; p < k; ++p) {
            for (std::size_t j = 0; j < m; ++j) residual[j] -= y[p] * work[p][j];
        }
        for (const auto& v : residual) {
            if (!v.is_zero()) return std::nullopt;
        }
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t p = 0; p < k; ++p) x[i][j] += y[p] * ops[p][j];
        }
    }
    return x;
}

}  // namespace burkhardt
