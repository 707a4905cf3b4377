#pragma once

#include <leibalg/matrix.hpp>
#include <leibalg/subspace.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace leibalg {

/// Structure-constant table of a finite-dimensional algebra:
/// [e_i, e_j] = sum_k c_{ij}^k e_k. Indices are 0-based internally.
/// Treat as immutable once built; all operations below are pure.
class AlgebraTable {
public:
    using Terms = std::vector<std::pair<std::size_t, Rational>>;

    explicit AlgebraTable(std::size_t dim, std::vector<std::string> labels = {})
        : dim_(dim), labels_(std::move(labels)) {
        if (labels_.empty())
            for (std::size_t i = 1; i <= dim; ++i) labels_.push_back("e" + std::to_string(i));
        if (labels_.size() != dim_) throw error("AlgebraTable: label count mismatch");
    }

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_label(std::size_t i, std::string s) { labels_.at(i) = std::move(s); }

    /// Accumulates c into c_{ij}^k; zero sums are erased.
    void add(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
        if (i >= dim_ || j >= dim_ || k >= dim_) throw error("AlgebraTable::add: index out of range");
        if (c == 0) return;
        auto& terms = constants_[{i, j}];
        for (auto it = terms.begin(); it != terms.end(); ++it) {
            if (it->first == k) {
                it->second += c;
                if (it->second == 0) terms.erase(it);
                if (terms.empty()) constants_.erase({i, j});
                return;
            }
            if (it->first > k) {
                terms.insert(it, {k, c});
                return;
            }
        }
        terms.push_back({k, c});
    }

    const Terms& bracket_basis(std::size_t i, std::size_t j) const {
        static const Terms kEmpty;
        auto it = constants_.find({i, j});
        return it == constants_.end() ? kEmpty : it->second;
    }

    /// Bilinear extension of the structure constants.
    Vec bracket(const Vec& x, const Vec& y) const {
        if (x.size() != dim_ || y.size() != dim_) throw error("bracket: length mismatch");
        Vec out(dim_, Rational(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j] == 0) continue;
                for (const auto& [k, c] : bracket_basis(i, j)) out[k] += x[i] * y[j] * c;
            }
        }
        return out;
    }

    Vec basis_vector(std::size_t i) const {
        Vec v(dim_, Rational(0));
        v.at(i) = 1;
        return v;
    }

    /// Matrix of the right multiplication y -> [y, x] (column convention).
    Matrix right_multiplication(const Vec& x) const {
        Matrix m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, bracket(basis_vector(j), x));
        return m;
    }

    /// Matrix of the left multiplication y -> [x, y].
    Matrix left_multiplication(const Vec& x) const {
        Matrix m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, bracket(x, basis_vector(j)));
        return m;
    }

    const std::map<std::pair<std::size_t, std::size_t>, Terms>& constants() const {
        return constants_;
    }

    bool same_constants(const AlgebraTable& o) const {
        return dim_ == o.dim_ && constants_ == o.constants_;
    }

    bool operator==(const AlgebraTable& o) const {
        return same_constants(o) && labels_ == o.labels_;
    }

private:
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::map<std::pair<std::size_t, std::size_t>, Terms> constants_;
};

struct TripleDefect {
    std::size_t i, j, k;
    Vec defect;
};

struct PairDefect {
    std::size_t i, j;
    Vec defect;
};

/// Defects of [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j] over all
/// basis triples; an empty list certifies the identity (by trilinearity,
/// checking basis triples suffices).
inline std::vector<TripleDefect> leibniz_violations(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    std::vector<TripleDefect> out;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec ei = a.basis_vector(i);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec d(n, Rational(0));
                for (const auto& [m, c] : a.bracket_basis(j, k)) {
                    const Vec t = a.bracket(ei, a.basis_vector(m));
                    for (std::size_t s = 0; s < n; ++s) d[s] += c * t[s];
                }
                for (const auto& [m, c] : a.bracket_basis(i, j)) {
                    const Vec t = a.bracket(a.basis_vector(m), a.basis_vector(k));
                    for (std::size_t s = 0; s < n; ++s) d[s] -= c * t[s];
                }
                for (const auto& [m, c] : a.bracket_basis(i, k)) {
                    const Vec t = a.bracket(a.basis_vector(m), a.basis_vector(j));
                    for (std::size_t s = 0; s < n; ++s) d[s] += c * t[s];
                }
                if (std::any_of(d.begin(), d.end(), [](const Rational& v) { return v != 0; }))
                    out.push_back({i, j, k, std::move(d)});
            }
    }
    return out;
}

/// Nonzero values of [e_i,e_j] + [e_j,e_i]; empty iff the table is a Lie
/// bracket candidate (antisymmetric).
inline std::vector<PairDefect> antisymmetry_violations(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    std::vector<PairDefect> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Vec d(n, Rational(0));
            for (const auto& [k, c] : a.bracket_basis(i, j)) d[k] += c;
            for (const auto& [k, c] : a.bracket_basis(j, i)) d[k] += c;
            if (std::any_of(d.begin(), d.end(), [](const Rational& v) { return v != 0; }))
                out.push_back({i, j, std::move(d)});
        }
    return out;
}

inline bool is_lie(const AlgebraTable& a) { return antisymmetry_violations(a).empty(); }

/// Smallest subspace containing seed and closed under bracketing with basis
/// vectors on both sides. The fixed point is reached in at most dim steps.
inline Subspace ideal_closure(const AlgebraTable& a, const Subspace& seed) {
    Subspace s = seed;
    for (std::size_t iter = 0; iter <= a.dim(); ++iter) {
        std::vector<Vec> gens = s.basis();
        for (const auto& v : s.basis())
            for (std::size_t j = 0; j < a.dim(); ++j) {
                gens.push_back(a.bracket(v, a.basis_vector(j)));
                gens.push_back(a.bracket(a.basis_vector(j), v));
            }
        Subspace next = Subspace::span(a.dim(), gens);
        if (next == s) return s;
        s = std::move(next);
    }
    return s;
}

inline bool is_two_sided_ideal(const AlgebraTable& a, const Subspace& s) {
    for (const auto& v : s.basis())
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (!s.contains(a.bracket(v, a.basis_vector(j)))) return false;
            if (!s.contains(a.bracket(a.basis_vector(j), v))) return false;
        }
    return true;
}

namespace detail {
inline Subspace bracket_span(const AlgebraTable& a, const Subspace& u, const Subspace& v) {
    std::vector<Vec> gens;
    for (const auto& x : u.basis())
        for (const auto& y : v.basis()) gens.push_back(a.bracket(x, y));
    return Subspace::span(a.dim(), gens);
}
}  // namespace detail

/// L^1 = L, L^{k+1} = [L^k, L]; computed to stabilization (at most dim+1 terms).
inline std::vector<Subspace> lower_central_series(const AlgebraTable& a) {
    std::vector<Subspace> series{Subspace::full(a.dim())};
    while (series.size() <= a.dim() + 1) {
        Subspace next = detail::bracket_span(a, series.back(), Subspace::full(a.dim()));
        if (next == series.back()) break;
        series.push_back(std::move(next));
        if (series.back().dim() == 0) break;
    }
    return series;
}

/// L^{[1]} = L, L^{[s+1]} = [L^{[s]}, L^{[s]}].
inline std::vector<Subspace> derived_series(const AlgebraTable& a) {
    std::vector<Subspace> series{Subspace::full(a.dim())};
    while (series.size() <= a.dim() + 1) {
        Subspace next = detail::bracket_span(a, series.back(), series.back());
        if (next == series.back()) break;
        series.push_back(std::move(next));
        if (series.back().dim() == 0) break;
    }
    return series;
}

/// Smallest k with L^k = 0, absent for non-nilpotent tables.
inline std::optional<std::size_t> nilpotency_index(const AlgebraTable& a) {
    const auto s = lower_central_series(a);
    if (s.back().dim() != 0) return std::nullopt;
    return s.size();
}

inline std::optional<std::size_t> solvability_index(const AlgebraTable& a) {
    const auto s = derived_series(a);
    if (s.back().dim() != 0) return std::nullopt;
    return s.size();
}

inline bool is_nilpotent(const AlgebraTable& a) { return nilpotency_index(a).has_value(); }
inline bool is_solvable(const AlgebraTable& a) { return solvability_index(a).has_value(); }

/// Ann_r(L) = {x : [y,x] = 0 for all y}, via the stacked left multiplications.
inline Subspace right_annihilator(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    Matrix sys(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix li = a.left_multiplication(a.basis_vector(i));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) sys.at(i * n + r, c) = li.at(r, c);
    }
    return Subspace::span(n, kernel_basis(sys));
}

/// Z(L) = {x : [x,y] = 0 = [y,x] for all y}.
inline Subspace center(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    Matrix sys(2 * n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix li = a.left_multiplication(a.basis_vector(i));
        const Matrix ri = a.right_multiplication(a.basis_vector(i));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                sys.at(i * n + r, c) = li.at(r, c);
                sys.at(n * n + i * n + r, c) = ri.at(r, c);
            }
    }
    return Subspace::span(n, kernel_basis(sys));
}

/// Two-sided ideal generated by all squares [x,x]. The spanning set
/// {[e_i,e_i]} u {[e_i,e_j]+[e_j,e_i]} equals span{[x,x]} by polarization.
inline Subspace squares_ideal(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i)
        gens.push_back(a.bracket(a.basis_vector(i), a.basis_vector(i)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec s = a.bracket(a.basis_vector(i), a.basis_vector(j));
            const Vec t = a.bracket(a.basis_vector(j), a.basis_vector(i));
            for (std::size_t k = 0; k < n; ++k) s[k] += t[k];
            gens.push_back(std::move(s));
        }
    return ideal_closure(a, Subspace::span(n, gens));
}

/// Quotient by a two-sided ideal, on the complement spanned by the standard
/// basis vectors away from the ideal's pivot positions.
inline AlgebraTable quotient(const AlgebraTable& a, const Subspace& ideal) {
    if (ideal.ambient_dim() != a.dim()) throw error("quotient: ambient mismatch");
    if (!is_two_sided_ideal(a, ideal)) throw error("quotient: subspace is not a two-sided ideal");
    const std::size_t n = a.dim();
    std::vector<bool> is_pivot(n, false);
    for (auto p : ideal.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> comp;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) comp.push_back(i);
    std::vector<std::size_t> pos(n, 0);
    for (std::size_t c = 0; c < comp.size(); ++c) pos[comp[c]] = c;

    auto reduce = [&](Vec v) {
        const auto& basis = ideal.basis();
        const auto& piv = ideal.pivots();
        for (std::size_t r = 0; r < basis.size(); ++r) {
            const Rational f = v[piv[r]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) v[j] -= f * basis[r][j];
        }
        return v;
    };

    std::vector<std::string> labels;
    for (auto c : comp) labels.push_back(a.labels()[c]);
    AlgebraTable q(comp.size(), labels);
    for (std::size_t x = 0; x < comp.size(); ++x)
        for (std::size_t y = 0; y < comp.size(); ++y) {
            const Vec w = reduce(a.bracket(a.basis_vector(comp[x]), a.basis_vector(comp[y])));
            for (std::size_t k = 0; k < n; ++k) {
                if (w[k] == 0) continue;
                if (is_pivot[k]) throw error("quotient: reduction left an ideal component");
                q.add(x, y, pos[k], w[k]);
            }
        }
    return q;
}

namespace detail {
/// Constraint matrix of D[e_i,e_j] = [D e_i, e_j] + [e_i, D e_j] over the n^2
/// unknown entries D[k][l] (D(e_l) = sum_k D[k][l] e_k): n^3 x n^2 system.
inline Matrix derivation_system(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    Matrix sys(n * n * n, n * n);
    auto unknown = [n](std::size_t k, std::size_t l) { return k * n + l; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t base = (i * n + j) * n;
            for (const auto& [k, c] : a.bracket_basis(i, j))
                for (std::size_t m = 0; m < n; ++m) sys.at(base + m, unknown(m, k)) += c;
            for (std::size_t l = 0; l < n; ++l) {
                for (const auto& [m, c] : a.bracket_basis(l, j))
                    sys.at(base + m, unknown(l, i)) -= c;
                for (const auto& [m, c] : a.bracket_basis(i, l))
                    sys.at(base + m, unknown(l, j)) -= c;
            }
        }
    return sys;
}
}  // namespace detail

inline std::size_t derivation_space_dim(const AlgebraTable& a) {
    return a.dim() * a.dim() - rank(detail::derivation_system(a));
}

/// Isomorphism-invariant summary used to separate tables cheaply.
struct InvariantFingerprint {
    std::size_t dim = 0;
    std::vector<std::size_t> lcs_dims;
    std::vector<std::size_t> ds_dims;
    std::size_t dim_center = 0;
    std::size_t dim_right_annihilator = 0;
    std::size_t dim_squares_ideal = 0;
    std::size_t dim_derivation_space = 0;
    bool lie = false;

    bool operator==(const InvariantFingerprint&) const = default;
};

namespace detail {
inline InvariantFingerprint fingerprint_unchecked(const AlgebraTable& a) {
    InvariantFingerprint f;
    f.dim = a.dim();
    for (const auto& s : lower_central_series(a)) f.lcs_dims.push_back(s.dim());
    for (const auto& s : derived_series(a)) f.ds_dims.push_back(s.dim());
    f.dim_center = center(a).dim();
    f.dim_right_annihilator = right_annihilator(a).dim();
    f.dim_squares_ideal = squares_ideal(a).dim();
    f.dim_derivation_space = derivation_space_dim(a);
    f.lie = is_lie(a);
    return f;
}
}  // namespace detail

/// Requires a defect-free (Leibniz) table.
inline InvariantFingerprint fingerprint(const AlgebraTable& a) {
    if (!leibniz_violations(a).empty())
        throw error("fingerprint: table does not satisfy the Leibniz identity");
    return detail::fingerprint_unchecked(a);
}

/// Table conjugated by a basis permutation: c'_{ab}^c = c_{s(a)s(b)}^{s(c)}.
inline AlgebraTable permuted(const AlgebraTable& a, const std::vector<std::size_t>& perm) {
    const std::size_t n = a.dim();
    if (perm.size() != n) throw error("permuted: permutation size mismatch");
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
    AlgebraTable out(n);
    for (const auto& [ij, terms] : a.constants())
        for (const auto& [k, c] : terms) out.add(inv[ij.first], inv[ij.second], inv[k], c);
    return out;
}

/// Natural graduation along the lower central series, in the adapted basis
/// whose level complements are standard basis vectors.
struct GraduationResult {
    /// Every L^i is spanned by standard basis vectors (required for the
    /// adapted-basis construction).
    bool coordinate_filtration = false;
    /// gr(L) table equals the original table.
    bool graded_equal = false;
    std::vector<std::size_t> grade;  // 1-based grade per basis index
};

inline GraduationResult natural_graduation_check(const AlgebraTable& a) {
    GraduationResult res;
    const auto series = lower_central_series(a);
    if (series.back().dim() != 0) return res;  // only meaningful for nilpotent tables
    const std::size_t n = a.dim();
    for (const auto& s : series) {
        for (const auto& row : s.basis()) {
            std::size_t nonzero = 0;
            for (const auto& v : row)
                if (v != 0) ++nonzero;
            if (nonzero != 1) return res;
        }
    }
    res.coordinate_filtration = true;
    res.grade.assign(n, 0);
    for (std::size_t lvl = 0; lvl < series.size(); ++lvl)
        for (auto p : series[lvl].pivots())
            res.grade[p] = lvl + 1;  // deepest level containing the vector wins
    AlgebraTable gr(n, a.labels());
    for (const auto& [ij, terms] : a.constants())
        for (const auto& [k, c] : terms)
            if (res.grade[k] == res.grade[ij.first] + res.grade[ij.second])
                gr.add(ij.first, ij.second, k, c);
    res.graded_equal = gr.same_constants(a);
    return res;
}

}  // namespace leibalg
