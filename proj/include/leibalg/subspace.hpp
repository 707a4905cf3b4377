#pragma once

#include <leibalg/matrix.hpp>

#include <cstddef>
#include <vector>

namespace leibalg {

/// Subspace of Q^n held as an echelonized (RREF) basis, so equal subspaces
/// compare equal structurally and all derived bases are deterministic.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

    static Subspace full(std::size_t ambient_dim) {
        std::vector<Vec> b;
        for (std::size_t i = 0; i < ambient_dim; ++i) {
            Vec v(ambient_dim, Rational(0));
            v[i] = 1;
            b.push_back(std::move(v));
        }
        return span(ambient_dim, b);
    }

    static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
        Matrix m(vectors.size(), ambient_dim);
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            if (vectors[i].size() != ambient_dim) throw error("span: vector length mismatch");
            for (std::size_t j = 0; j < ambient_dim; ++j) m.at(i, j) = vectors[i][j];
        }
        const auto [red, pivots] = rref(m);
        Subspace s(ambient_dim);
        s.pivots_ = pivots;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            Vec row(ambient_dim);
            for (std::size_t j = 0; j < ambient_dim; ++j) row[j] = red.at(r, j);
            s.basis_.push_back(std::move(row));
        }
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const {
        if (v.size() != ambient_) throw error("contains: length mismatch");
        Vec w = v;
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            const Rational f = w[pivots_[r]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_[r][j];
        }
        for (const auto& x : w)
            if (x != 0) return false;
        return true;
    }

    bool contains(const Subspace& o) const {
        for (const auto& v : o.basis_)
            if (!contains(v)) return false;
        return true;
    }

    /// Coordinates of v in this basis; empty when v lies outside.
    std::optional<Vec> coordinates(const Vec& v) const {
        Vec w = v, coords(basis_.size(), Rational(0));
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            const Rational f = w[pivots_[r]];
            coords[r] = f;
            if (f == 0) continue;
            for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_[r][j];
        }
        for (const auto& x : w)
            if (x != 0) return std::nullopt;
        return coords;
    }

    Subspace sum(const Subspace& o) const {
        std::vector<Vec> all = basis_;
        all.insert(all.end(), o.basis_.begin(), o.basis_.end());
        return span(ambient_, all);
    }

    /// Zassenhaus-style intersection via the kernel of [U^T | V^T].
    Subspace intersect(const Subspace& o) const {
        if (ambient_ != o.ambient_) throw error("intersect: ambient mismatch");
        if (basis_.empty() || o.basis_.empty()) return zero(ambient_);
        Matrix m(ambient_, basis_.size() + o.basis_.size());
        for (std::size_t j = 0; j < basis_.size(); ++j)
            for (std::size_t i = 0; i < ambient_; ++i) m.at(i, j) = basis_[j][i];
        for (std::size_t j = 0; j < o.basis_.size(); ++j)
            for (std::size_t i = 0; i < ambient_; ++i)
                m.at(i, basis_.size() + j) = o.basis_[j][i];
        std::vector<Vec> vs;
        for (const auto& k : kernel_basis(m)) {
            Vec v(ambient_, Rational(0));
            for (std::size_t j = 0; j < basis_.size(); ++j)
                for (std::size_t i = 0; i < ambient_; ++i) v[i] += k[j] * basis_[j][i];
            vs.push_back(std::move(v));
        }
        return span(ambient_, vs);
    }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

private:
    std::size_t ambient_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace leibalg
