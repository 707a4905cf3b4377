#pragma once

#include <leibalg/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace leibalg {

/// Dense row-major matrix over a commutative ring R. Row reduction and
/// kernels require R to be a field (instantiated with Rational); generic
/// arithmetic is also used with polynomial entries.
template <class R>
class MatrixT {
public:
    MatrixT() = default;
    MatrixT(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static MatrixT zero(std::size_t rows, std::size_t cols) { return MatrixT(rows, cols); }

    static MatrixT identity(std::size_t n) {
        MatrixT m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = R(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    R& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const R& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const R& v) { return v == R(0); });
    }

    bool is_upper_triangular() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < std::min(i, cols_); ++j)
                if (at(i, j) != R(0)) return false;
        return true;
    }

    bool is_lower_triangular() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (at(i, j) != R(0)) return false;
        return true;
    }

    std::vector<R> diagonal() const {
        std::vector<R> d(std::min(rows_, cols_));
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = at(i, i);
        return d;
    }

    R trace() const {
        R t(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
        return t;
    }

    MatrixT transpose() const {
        MatrixT m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    MatrixT operator+(const MatrixT& o) const {
        require_same_shape(o);
        MatrixT m(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
        return m;
    }

    MatrixT operator-(const MatrixT& o) const {
        require_same_shape(o);
        MatrixT m(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
        return m;
    }

    MatrixT operator*(const MatrixT& o) const {
        if (cols_ != o.rows_) throw error("matrix product: shape mismatch");
        MatrixT m(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const R& aik = at(i, k);
                if (aik == R(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const R& bkj = o.at(k, j);
                    if (bkj == R(0)) continue;
                    m.at(i, j) += aik * bkj;
                }
            }
        return m;
    }

    MatrixT scaled(const R& c) const {
        MatrixT m(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * c;
        return m;
    }

    std::vector<R> apply(const std::vector<R>& v) const {
        if (v.size() != cols_) throw error("matrix apply: length mismatch");
        std::vector<R> out(rows_, R(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j) != R(0) && v[j] != R(0)) out[i] += at(i, j) * v[j];
        return out;
    }

    std::vector<R> column(std::size_t j) const {
        std::vector<R> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    void set_column(std::size_t j, const std::vector<R>& v) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
    }

    std::vector<R> flatten() const { return a_; }

    bool operator==(const MatrixT& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    void require_same_shape(const MatrixT& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix op: shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<R> a_;
};

using Matrix = MatrixT<Rational>;

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with pivot columns; rank = pivots.size().
inline RrefResult rref(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        const Rational inv = Rational(1) / m.at(r, c);
        for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Rational f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Deterministic echelon-normalized null-space basis: one vector per free
/// column, unit entry at the free column, built from the RREF rows.
inline std::vector<Vec> kernel_basis(const Matrix& m) {
    const auto [red, pivots] = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves m * x = b exactly; empty when inconsistent.
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw error("solve: length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    const auto [red, pivots] = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = red.at(r, m.cols());
    return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw error("inverse: non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const auto [red, pivots] = rref(aug);
    if (pivots.size() != n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
    return inv;
}

}  // namespace leibalg
