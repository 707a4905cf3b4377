#pragma once

#include <leibalg/algebra.hpp>
#include <leibalg/poly.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace leibalg {

/// Basis of the solution space of d([x,y]) = [d(x),y] + [x,d(y)], one n x n
/// matrix per kernel vector of the derivation system, echelon-ordered.
struct DerivationSpace {
    std::size_t algebra_dim = 0;
    std::vector<Matrix> basis;
    bool all_upper_triangular = false;
    std::size_t diagonal_projection_rank = 0;

    std::size_t dim() const { return basis.size(); }

    /// Membership of an arbitrary matrix in the span of the basis.
    bool contains(const Matrix& m) const {
        const std::size_t n = algebra_dim;
        Matrix sys(n * n, basis.size());
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const auto flat = basis[b].flatten();
            for (std::size_t r = 0; r < n * n; ++r) sys.at(r, b) = flat[r];
        }
        return solve(sys, m.flatten()).has_value();
    }
};

inline DerivationSpace derivation_space(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    DerivationSpace ds;
    ds.algebra_dim = n;
    for (const auto& v : kernel_basis(detail::derivation_system(a))) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) m.at(k, l) = v[k * n + l];
        ds.basis.push_back(std::move(m));
    }
    ds.all_upper_triangular = std::all_of(ds.basis.begin(), ds.basis.end(),
                                          [](const Matrix& m) { return m.is_upper_triangular(); });
    std::vector<Vec> diags;
    for (const auto& m : ds.basis) diags.push_back(m.diagonal());
    ds.diagonal_projection_rank = Subspace::span(n, diags).dim();
    return ds;
}

/// Inner derivation R_x: y -> [y, x].
inline Matrix inner_derivation(const AlgebraTable& a, const Vec& x) {
    return a.right_multiplication(x);
}

enum class FiliformPattern { f1, f2 };

/// Span generators of the derivation patterns of the two naturally graded
/// filiform non-Lie tables, written as operators d(e_l) = sum_k M[k][l] e_k.
///
/// F^1 free parameters (a_1..a_n, b):
///   d(e_1) = a_1 e_1 + a_2 e_2 + ... + a_n e_n
///   d(e_2) = (a_1+a_2) e_2 + a_3 e_3 + ... + a_{n-1} e_{n-1} + b e_n
///   d(e_i) = ((i-1)a_1 + a_2) e_i + sum_{j>i} a_{j-i+2} e_j      (3 <= i <= n)
/// F^2 free parameters (a_1..a_n, b, g):
///   d(e_1) = a_1 e_1 + a_2 e_2 + ... + a_n e_n
///   d(e_2) = b e_2 + g e_n
///   d(e_i) = (i-1)a_1 e_i + sum_{j>i} a_{j-i+2} e_j               (3 <= i <= n)
inline std::vector<Matrix> filiform_pattern_generators(FiliformPattern fam, std::size_t n) {
    if (n < 4) throw error("filiform pattern: need n >= 4");
    std::vector<Matrix> gens;
    auto mat = [&]() { return Matrix::zero(n, n); };
    if (fam == FiliformPattern::f1) {
        {
            Matrix m = mat();  // a_1
            m.at(0, 0) = 1;
            m.at(1, 1) = 1;
            for (std::size_t i = 3; i <= n; ++i) m.at(i - 1, i - 1) = (long)(i - 1);
            gens.push_back(m);
        }
        {
            Matrix m = mat();  // a_2
            m.at(1, 0) = 1;
            m.at(1, 1) = 1;
            for (std::size_t i = 3; i <= n; ++i) m.at(i - 1, i - 1) = 1;
            gens.push_back(m);
        }
        for (std::size_t j = 3; j <= n; ++j) {  // a_j
            Matrix m = mat();
            m.at(j - 1, 0) = 1;
            if (j <= n - 1) m.at(j - 1, 1) = 1;
            for (std::size_t i = 3; i + j - 2 <= n; ++i) m.at(i + j - 3, i - 1) = 1;
            gens.push_back(m);
        }
        {
            Matrix m = mat();  // b
            m.at(n - 1, 1) = 1;
            gens.push_back(m);
        }
    } else {
        {
            Matrix m = mat();  // a_1
            m.at(0, 0) = 1;
            for (std::size_t i = 3; i <= n; ++i) m.at(i - 1, i - 1) = (long)(i - 1);
            gens.push_back(m);
        }
        {
            Matrix m = mat();  // a_2
            m.at(1, 0) = 1;
            gens.push_back(m);
        }
        for (std::size_t j = 3; j <= n; ++j) {  // a_j
            Matrix m = mat();
            m.at(j - 1, 0) = 1;
            for (std::size_t i = 3; i + j - 2 <= n; ++i) m.at(i + j - 3, i - 1) = 1;
            gens.push_back(m);
        }
        {
            Matrix m = mat();  // b
            m.at(1, 1) = 1;
            gens.push_back(m);
        }
        {
            Matrix m = mat();  // g
            m.at(n - 1, 1) = 1;
            gens.push_back(m);
        }
    }
    return gens;
}

/// True iff the computed space equals the span of the family's pattern.
inline bool matches_prop_pattern(const DerivationSpace& space, FiliformPattern fam) {
    if (space.algebra_dim < 4) return false;
    std::vector<Vec> got, want;
    for (const auto& m : space.basis) got.push_back(m.flatten());
    for (const auto& m : filiform_pattern_generators(fam, space.algebra_dim))
        want.push_back(m.flatten());
    const std::size_t nn = space.algebra_dim * space.algebra_dim;
    return Subspace::span(nn, got) == Subspace::span(nn, want);
}

/// Exact nil-independence of a pair: no (alpha, beta) != (0,0) makes
/// alpha*d1 + beta*d2 nilpotent. Decided from the characteristic polynomial
/// of t*d1 + d2 over Q[t]: the pencil is nilpotent at t = tau iff every
/// non-leading coefficient vanishes there, so a nonconstant gcd of those
/// coefficients signals a common (complex) root and the pair is rejected;
/// the beta = 0 ray is covered by testing d1 itself.
inline bool nil_independent_pair(const Matrix& d1, const Matrix& d2) {
    if (!d1.is_square() || !d2.is_square() || d1.rows() != d2.rows())
        throw error("nil_independent_pair: size mismatch");
    if (is_nilpotent_matrix(d1) || is_nilpotent_matrix(d2)) return false;
    const std::size_t n = d1.rows();
    MatrixT<Poly> pencil(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            pencil.at(i, j) = Poly{d2.at(i, j), d1.at(i, j)};
    const auto coeffs = char_poly_coeffs(pencil);  // in the matrix variable
    Poly g;
    for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) g = gcd(g, coeffs[k]);
    return !g.is_zero() && g.is_constant();
}

/// Maximal number of nil-independent elements of a space of simultaneously
/// upper-triangular matrices: the rank of its diagonal projection, since an
/// upper-triangular matrix is nilpotent exactly when its diagonal vanishes.
inline std::size_t max_nil_independent_upper_triangular(const DerivationSpace& space) {
    if (!space.all_upper_triangular)
        throw error("max_nil_independent_upper_triangular: basis is not upper triangular");
    return space.diagonal_projection_rank;
}

/// Data of a solvable extension of a nilpotent algebra N by a complement
/// x_1..x_m: the restricted right actions R_{x_s}|_N, the products
/// [x_s, e_i] and the products [x_s, x_t], all valued in N.
struct ExtensionSpec {
    AlgebraTable nilradical;
    std::vector<Matrix> right_actions;           // m matrices, n x n
    std::vector<std::vector<Vec>> left_actions;  // m x n vectors in N
    std::vector<std::vector<Vec>> mixed;         // m x m vectors in N

    explicit ExtensionSpec(AlgebraTable n) : nilradical(std::move(n)) {}
    std::size_t complement_dim() const { return right_actions.size(); }
};

/// Block table on (e_1..e_n, x_1..x_m). Each right action must satisfy the
/// derivation equations of the nilradical.
inline AlgebraTable assemble_extension(const ExtensionSpec& spec) {
    const std::size_t n = spec.nilradical.dim();
    const std::size_t m = spec.complement_dim();
    if (spec.left_actions.size() != m || spec.mixed.size() != m)
        throw error("assemble_extension: action table arity mismatch");
    const DerivationSpace ders = derivation_space(spec.nilradical);
    for (const auto& act : spec.right_actions)
        if (!ders.contains(act))
            throw error("assemble_extension: right action fails the derivation equations");

    std::vector<std::string> labels = spec.nilradical.labels();
    for (std::size_t s = 1; s <= m; ++s)
        labels.push_back(m == 1 ? std::string("x") : "x" + std::to_string(s));
    AlgebraTable t(n + m, labels);
    for (const auto& [ij, terms] : spec.nilradical.constants())
        for (const auto& [k, c] : terms) t.add(ij.first, ij.second, k, c);
    for (std::size_t s = 0; s < m; ++s) {
        const Matrix& act = spec.right_actions[s];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                t.add(i, n + s, k, act.at(k, i));
        if (spec.left_actions[s].size() != n) throw error("assemble_extension: left action arity");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) t.add(n + s, i, k, spec.left_actions[s][i][k]);
        if (spec.mixed[s].size() != m) throw error("assemble_extension: mixed arity");
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t k = 0; k < n; ++k) t.add(n + s, n + u, k, spec.mixed[s][u][k]);
    }
    return t;
}

enum class CheckStatus { pass, fail, inconclusive };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "inconclusive";
    }
}

struct NilradicalCertificate {
    CheckStatus ideal = CheckStatus::fail;
    CheckStatus restricted_nilpotent = CheckStatus::fail;
    CheckStatus actions_non_nilpotent = CheckStatus::fail;
    CheckStatus dimension_bound = CheckStatus::fail;

    CheckStatus overall() const {
        for (auto s : {ideal, restricted_nilpotent, actions_non_nilpotent, dimension_bound}) {
            if (s == CheckStatus::fail) return CheckStatus::fail;
            if (s == CheckStatus::inconclusive) return CheckStatus::inconclusive;
        }
        return CheckStatus::pass;
    }
};

/// Certifies that `candidate` behaves as the nilradical of r:
///  (1) candidate is a two-sided ideal,
///  (2) its restricted table is nilpotent,
///  (3) every nonzero combination of the complement's restricted right
///      actions is non-nilpotent (pairwise machinery for m <= 2, diagonal
///      projection when all restrictions are upper triangular, otherwise
///      inconclusive rather than a false certificate),
///  (4) dim candidate >= dim r / 2.
inline NilradicalCertificate certify_nilradical(const AlgebraTable& r, const Subspace& candidate) {
    NilradicalCertificate cert;
    const std::size_t n = r.dim();
    cert.ideal = is_two_sided_ideal(r, candidate) ? CheckStatus::pass : CheckStatus::fail;
    if (cert.ideal == CheckStatus::fail) return cert;

    // (2) lower central series of the subalgebra, inside the ambient space.
    Subspace cur = candidate;
    cert.restricted_nilpotent = CheckStatus::fail;
    for (std::size_t iter = 0; iter <= n + 1; ++iter) {
        Subspace next = detail::bracket_span(r, cur, candidate);
        if (next.dim() == 0) {
            cert.restricted_nilpotent = CheckStatus::pass;
            break;
        }
        if (next == cur) break;
        cur = std::move(next);
    }

    // (3) restricted right actions of the complement basis.
    std::vector<bool> is_pivot(n, false);
    for (auto p : candidate.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> comp;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) comp.push_back(i);
    const std::size_t m = comp.size();
    const std::size_t nc = candidate.dim();
    std::vector<Matrix> restricted;
    bool restriction_ok = true;
    for (auto xi : comp) {
        Matrix act(nc, nc);
        for (std::size_t b = 0; b < nc; ++b) {
            const Vec img = r.bracket(candidate.basis()[b], r.basis_vector(xi));
            const auto coords = candidate.coordinates(img);
            if (!coords) {
                restriction_ok = false;
                break;
            }
            act.set_column(b, *coords);
        }
        if (!restriction_ok) break;
        restricted.push_back(std::move(act));
    }
    if (!restriction_ok) {
        cert.actions_non_nilpotent = CheckStatus::fail;
    } else if (m == 0) {
        cert.actions_non_nilpotent = CheckStatus::pass;
    } else if (m == 1) {
        cert.actions_non_nilpotent =
            is_nilpotent_matrix(restricted[0]) ? CheckStatus::fail : CheckStatus::pass;
    } else if (m == 2) {
        cert.actions_non_nilpotent = nil_independent_pair(restricted[0], restricted[1])
                                         ? CheckStatus::pass
                                         : CheckStatus::fail;
    } else if (std::all_of(restricted.begin(), restricted.end(),
                           [](const Matrix& a) { return a.is_upper_triangular(); })) {
        std::vector<Vec> diags;
        for (const auto& a : restricted) diags.push_back(a.diagonal());
        cert.actions_non_nilpotent =
            Subspace::span(nc, diags).dim() == m ? CheckStatus::pass : CheckStatus::fail;
    } else {
        cert.actions_non_nilpotent = CheckStatus::inconclusive;
    }

    cert.dimension_bound = 2 * candidate.dim() >= n ? CheckStatus::pass : CheckStatus::fail;
    return cert;
}

}  // namespace leibalg
