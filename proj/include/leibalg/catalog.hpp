#pragma once

#include <leibalg/algebra.hpp>
#include <leibalg/derivations.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace leibalg {

// Catalog of the classified families. Dimension parameter n is the family's
// own n (the table dimension may be n, n+1, n+2, 2n, 2n+1 or 2n+2).
enum class Family {
    nf,
    n_n1,
    q2n,
    f1,
    f2,
    s_n1,
    s_n1_1,
    s_n1_2,
    s_n1_3,
    s_n1_4,
    s_n2,
    q2n1_1,
    q2n1_2,
    q2n1_3,
    q2n2,
    r_n1_gamma,
    r_2n1_gamma,
    r4_1,
    r4_2,
    r4_3,
    r6_1,
    r6_2,
    r6_3,
    r6_4,
    r6_5,
    r6_6,
    l_1,
    l_2,
};

struct CatalogEntry {
    Family family;
    std::size_t n = 0;
    std::map<std::string, Rational> params;
};

struct FamilyInfo {
    Family family;
    std::string id;          // CLI identifier
    std::string source;      // classification source descriptor
    std::string dim_formula; // table dimension in terms of n
    std::size_t min_n;
    std::string param_names;  // human-readable parameter list
    std::string constraints;  // human-readable parameter constraints
    bool lie;                 // antisymmetric bracket expected
    bool solvable_extension;  // has a nilpotent block plus complement
    bool naturally_graded;    // nilpotent and naturally graded
};

inline const std::vector<FamilyInfo>& family_registry() {
    static const std::vector<FamilyInfo> reg = {
        {Family::nf, "NF", "null-filiform (one-generated, maximal nilpotency index)", "n", 1,
         "", "", false, false, true},
        {Family::n_n1, "n_n1", "naturally graded filiform Lie, chain type", "n", 3, "", "",
         true, false, true},
        {Family::q2n, "Q2n", "naturally graded filiform Lie, even-dimensional pairing type",
         "2n", 3, "", "", true, false, true},
        {Family::f1, "F1", "naturally graded filiform non-Lie, type 1", "n", 3, "", "", false,
         false, true},
        {Family::f2, "F2", "naturally graded filiform non-Lie, type 2", "n", 4, "", "", false,
         false, true},
        {Family::s_n1, "S_n1", "solvable Lie, nilradical n_n1, codim 1 (two-parameter form)",
         "n+1", 4, "alpha,beta", "", true, true, false},
        {Family::s_n1_1, "S_n1_1", "solvable Lie, nilradical n_n1, codim 1, class 1", "n+1", 4,
         "beta", "", true, true, false},
        {Family::s_n1_2, "S_n1_2", "solvable Lie, nilradical n_n1, codim 1, class 2", "n+1", 4,
         "", "", true, true, false},
        {Family::s_n1_3, "S_n1_3", "solvable Lie, nilradical n_n1, codim 1, class 3", "n+1", 4,
         "", "", true, true, false},
        {Family::s_n1_4, "S_n1_4", "solvable Lie, nilradical n_n1, codim 1, class 4", "n+1", 4,
         "a3..a(n-1)", "first nonvanishing a can be scaled to 1", true, true, false},
        {Family::s_n2, "S_n2", "solvable Lie, nilradical n_n1, codim 2", "n+2", 4, "", "", true,
         true, false},
        {Family::q2n1_1, "Q2n1_1", "solvable Lie, nilradical Q2n, codim 1, class 1", "2n+1", 3,
         "alpha", "", true, true, false},
        {Family::q2n1_2, "Q2n1_2", "solvable Lie, nilradical Q2n, codim 1, class 2", "2n+1", 3,
         "eps", "eps in {0,1}", true, true, false},
        {Family::q2n1_3, "Q2n1_3", "solvable Lie, nilradical Q2n, codim 1, class 3", "2n+1", 3,
         "alpha", "", true, true, false},
        {Family::q2n2, "Q2n2", "solvable Lie, nilradical Q2n, codim 2", "2n+2", 3, "", "", true,
         true, false},
        {Family::r_n1_gamma, "R_n1_gamma", "solvable Leibniz over nilradical n_n1", "n+1", 4,
         "gamma1,gamma2,gamma3", "(gamma1,gamma2,gamma3) != (0,0,0)", false, true, false},
        {Family::r_2n1_gamma, "R_2n1_gamma", "solvable Leibniz over nilradical Q2n", "2n+1", 3,
         "gamma1,gamma2,gamma3", "(gamma1,gamma2,gamma3) != (0,0,0)", false, true, false},
        {Family::r4_1, "R4_1", "solvable Leibniz, nilradical F1, class 1", "n+1", 4, "alpha",
         "alpha in {0,1}", false, true, false},
        {Family::r4_2, "R4_2", "solvable Leibniz, nilradical F1, class 2", "n+1", 4,
         "a4..a(n-1),alpha", "first nonvanishing a can be scaled to 1", false, true, false},
        {Family::r4_3, "R4_3", "solvable Leibniz, nilradical F1, class 3", "n+1", 4,
         "a4..a(n-1)", "first nonvanishing a can be scaled to 1", false, true, false},
        {Family::r6_1, "R6_1", "solvable Leibniz, nilradical F2, class 1", "n+1", 4, "alpha",
         "alpha in {0,1}", false, true, false},
        {Family::r6_2, "R6_2", "solvable Leibniz, nilradical F2, class 2", "n+1", 4, "alpha",
         "alpha != 0", false, true, false},
        {Family::r6_3, "R6_3", "solvable Leibniz, nilradical F2, class 3", "n+1", 4, "", "",
         false, true, false},
        {Family::r6_4, "R6_4", "solvable Leibniz, nilradical F2, class 4", "n+1", 4, "alpha",
         "alpha != 1", false, true, false},
        {Family::r6_5, "R6_5", "solvable Leibniz, nilradical F2, class 5", "n+1", 4, "alpha",
         "alpha in {0,1}", false, true, false},
        {Family::r6_6, "R6_6", "solvable Leibniz, nilradical F2, class 6", "n+1", 4,
         "a3..an,lambda,delta", "delta in {0,-1}; first nonvanishing of (a3..an,lambda) can be scaled to 1",
         false, true, false},
        {Family::l_1, "L_1", "solvable Leibniz, nilradical F2, codim 2, split class 1", "n+2",
         4, "", "", false, true, false},
        {Family::l_2, "L_2", "solvable Leibniz, nilradical F2, codim 2, split class 2", "n+2",
         4, "", "", false, true, false},
    };
    return reg;
}

inline const FamilyInfo& family_info(Family f) {
    for (const auto& fi : family_registry())
        if (fi.family == f) return fi;
    throw error("unknown family");
}

inline std::optional<Family> family_by_id(const std::string& id) {
    for (const auto& fi : family_registry())
        if (fi.id == id) return fi.family;
    return std::nullopt;
}

/// Table dimension of a catalog entry.
inline std::size_t table_dim(Family f, std::size_t n) {
    switch (f) {
        case Family::nf:
        case Family::n_n1:
        case Family::f1:
        case Family::f2: return n;
        case Family::q2n: return 2 * n;
        case Family::s_n1:
        case Family::s_n1_1:
        case Family::s_n1_2:
        case Family::s_n1_3:
        case Family::s_n1_4:
        case Family::r_n1_gamma:
        case Family::r4_1:
        case Family::r4_2:
        case Family::r4_3:
        case Family::r6_1:
        case Family::r6_2:
        case Family::r6_3:
        case Family::r6_4:
        case Family::r6_5:
        case Family::r6_6: return n + 1;
        case Family::s_n2:
        case Family::l_1:
        case Family::l_2: return n + 2;
        case Family::q2n1_1:
        case Family::q2n1_2:
        case Family::q2n1_3: return 2 * n + 1;
        case Family::q2n2: return 2 * n + 2;
    }
    throw error("unknown family");
}

/// Dimension of the nilpotent block of a solvable-extension entry (the block
/// spans the leading basis vectors).
inline std::size_t nilradical_block_dim(Family f, std::size_t n) {
    switch (f) {
        case Family::q2n1_1:
        case Family::q2n1_2:
        case Family::q2n1_3:
        case Family::q2n2:
        case Family::r_2n1_gamma: return 2 * n;
        default: return n;
    }
}

namespace detail {

inline Rational param(const CatalogEntry& e, const std::string& key,
                      const Rational& fallback = Rational(0)) {
    auto it = e.params.find(key);
    return it == e.params.end() ? fallback : it->second;
}

inline void check_n(const CatalogEntry& e) {
    const auto& fi = family_info(e.family);
    if (e.n < fi.min_n)
        throw error("family " + fi.id + ": n must be >= " + std::to_string(fi.min_n));
}

inline void reject_unknown_params(const CatalogEntry& e,
                                  const std::vector<std::string>& allowed) {
    for (const auto& [k, v] : e.params)
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
            throw error("family " + family_info(e.family).id + ": unknown parameter '" + k + "'");
}

inline std::vector<std::string> indexed_keys(const std::string& prefix, std::size_t lo,
                                             std::size_t hi) {
    std::vector<std::string> keys;
    for (std::size_t i = lo; i <= hi; ++i) keys.push_back(prefix + std::to_string(i));
    return keys;
}

// Nilpotent blocks.
inline AlgebraTable make_nf(std::size_t n) {
    AlgebraTable t(n);
    for (std::size_t i = 1; i < n; ++i) t.add(i - 1, 0, i, 1);
    return t;
}

inline AlgebraTable make_n_n1(std::size_t n) {
    AlgebraTable t(n);
    for (std::size_t i = 2; i < n; ++i) {
        t.add(i - 1, 0, i, 1);
        t.add(0, i - 1, i, -1);
    }
    return t;
}

inline AlgebraTable make_q2n(std::size_t n) {
    AlgebraTable t(2 * n);
    for (std::size_t i = 2; i <= 2 * n - 2; ++i) {
        t.add(i - 1, 0, i, 1);
        t.add(0, i - 1, i, -1);
    }
    for (std::size_t i = 2; i <= n; ++i) {
        const std::size_t j = 2 * n + 1 - i;
        const Rational sgn = (i % 2 == 0) ? 1 : -1;
        t.add(i - 1, j - 1, 2 * n - 1, sgn);
        t.add(j - 1, i - 1, 2 * n - 1, -sgn);
    }
    return t;
}

inline AlgebraTable make_f1(std::size_t n) {
    AlgebraTable t(n);
    t.add(0, 0, 2, 1);
    for (std::size_t i = 2; i < n; ++i) t.add(i - 1, 0, i, 1);
    return t;
}

inline AlgebraTable make_f2(std::size_t n) {
    AlgebraTable t(n);
    t.add(0, 0, 2, 1);
    for (std::size_t i = 3; i < n; ++i) t.add(i - 1, 0, i, 1);
    return t;
}

/// Extends a nilpotent block to dim+extra, relabelling the complement x, y.
inline AlgebraTable widen(const AlgebraTable& block, std::size_t extra) {
    std::vector<std::string> labels = block.labels();
    labels.push_back("x");
    if (extra == 2) labels.push_back("y");
    AlgebraTable t(block.dim() + extra, labels);
    for (const auto& [ij, terms] : block.constants())
        for (const auto& [k, c] : terms) t.add(ij.first, ij.second, k, c);
    return t;
}

// Antisymmetric pair helper for the Lie extensions.
inline void add_pair(AlgebraTable& t, std::size_t i, std::size_t j, std::size_t k,
                     const Rational& c) {
    t.add(i, j, k, c);
    t.add(j, i, k, -c);
}

}  // namespace detail

/// Builds the exact structure-constant table of a catalog entry. Throws on
/// invalid n or parameter constraint violations.
inline AlgebraTable construct(const CatalogEntry& e) {
    using namespace detail;
    check_n(e);
    const std::size_t n = e.n;
    switch (e.family) {
        case Family::nf:
            reject_unknown_params(e, {});
            return make_nf(n);
        case Family::n_n1:
            reject_unknown_params(e, {});
            return make_n_n1(n);
        case Family::q2n:
            reject_unknown_params(e, {});
            return make_q2n(n);
        case Family::f1:
            reject_unknown_params(e, {});
            return make_f1(n);
        case Family::f2:
            reject_unknown_params(e, {});
            return make_f2(n);

        case Family::s_n1:
        case Family::s_n1_1:
        case Family::s_n1_2: {
            Rational alpha, beta;
            if (e.family == Family::s_n1) {
                reject_unknown_params(e, {"alpha", "beta"});
                alpha = param(e, "alpha");
                beta = param(e, "beta");
            } else if (e.family == Family::s_n1_1) {
                reject_unknown_params(e, {"beta"});
                alpha = 1;
                beta = param(e, "beta");
            } else {
                reject_unknown_params(e, {});
                alpha = 0;
                beta = 1;
            }
            AlgebraTable t = widen(make_n_n1(n), 1);
            const std::size_t x = n;
            for (std::size_t i = 2; i <= n; ++i)
                add_pair(t, i - 1, x, i - 1, Rational((long)i - 2) * alpha + beta);
            add_pair(t, 0, x, 0, alpha);
            return t;
        }
        case Family::s_n1_3: {
            reject_unknown_params(e, {});
            AlgebraTable t = widen(make_n_n1(n), 1);
            const std::size_t x = n;
            for (std::size_t i = 2; i <= n; ++i) add_pair(t, i - 1, x, i - 1, (long)(i - 1));
            add_pair(t, 0, x, 0, 1);
            add_pair(t, 0, x, 1, 1);
            return t;
        }
        case Family::s_n1_4: {
            reject_unknown_params(e, indexed_keys("a", 3, n >= 1 ? n - 1 : 0));
            AlgebraTable t = widen(make_n_n1(n), 1);
            const std::size_t x = n;
            for (std::size_t i = 2; i <= n; ++i) {
                add_pair(t, i - 1, x, i - 1, 1);
                for (std::size_t l = i + 2; l <= n; ++l)
                    add_pair(t, i - 1, x, l - 1, param(e, "a" + std::to_string(l + 1 - i)));
            }
            return t;
        }
        case Family::s_n2: {
            reject_unknown_params(e, {});
            AlgebraTable t = widen(make_n_n1(n), 2);
            const std::size_t x = n, y = n + 1;
            for (std::size_t i = 2; i <= n; ++i) {
                add_pair(t, i - 1, x, i - 1, (long)i - 2);
                add_pair(t, i - 1, y, i - 1, 1);
            }
            add_pair(t, 0, x, 0, 1);
            return t;
        }

        case Family::q2n1_1: {
            reject_unknown_params(e, {"alpha"});
            const Rational alpha = param(e, "alpha");
            AlgebraTable t = widen(make_q2n(n), 1);
            const std::size_t x = 2 * n;
            add_pair(t, 0, x, 0, 1);
            for (std::size_t i = 2; i <= 2 * n - 1; ++i)
                add_pair(t, i - 1, x, i - 1, Rational((long)i - 2) + alpha);
            add_pair(t, 2 * n - 1, x, 2 * n - 1, Rational((long)(2 * n) - 3) + 2 * alpha);
            return t;
        }
        case Family::q2n1_2: {
            reject_unknown_params(e, {"eps"});
            const Rational eps = param(e, "eps");
            if (eps != 0 && eps != 1) throw error("Q2n1_2: eps must be 0 or 1");
            AlgebraTable t = widen(make_q2n(n), 1);
            const std::size_t x = 2 * n;
            add_pair(t, 0, x, 0, 1);
            add_pair(t, 0, x, 2 * n - 1, eps);
            for (std::size_t i = 2; i <= 2 * n - 1; ++i)
                add_pair(t, i - 1, x, i - 1, (long)i - (long)n);
            add_pair(t, 2 * n - 1, x, 2 * n - 1, 1);
            return t;
        }
        case Family::q2n1_3: {
            reject_unknown_params(e, {"alpha"});
            const Rational alpha = param(e, "alpha");
            AlgebraTable t = widen(make_q2n(n), 1);
            const std::size_t x = 2 * n;
            // Unit diagonal on e_2..e_{2n-1} plus odd shifts by 2k-1 weighted
            // alpha^{2k+1}; shifts run to the last chain position e_{2n-1}.
            for (std::size_t i = 0; i + 6 <= 2 * n; ++i) {
                const std::size_t src = 2 + i;
                add_pair(t, src - 1, x, src - 1, 1);
                for (std::size_t k = 2; 2 * k + 1 + i <= 2 * n - 1; ++k)
                    add_pair(t, src - 1, x, 2 * k + i, pow_rational(alpha, (long)(2 * k + 1)));
            }
            for (std::size_t i = 1; i <= 3; ++i)
                add_pair(t, 2 * n - i - 1, x, 2 * n - i - 1, 1);
            add_pair(t, 2 * n - 1, x, 2 * n - 1, 2);
            return t;
        }
        case Family::q2n2: {
            reject_unknown_params(e, {});
            AlgebraTable t = widen(make_q2n(n), 2);
            const std::size_t x = 2 * n, y = 2 * n + 1;
            for (std::size_t i = 1; i <= 2 * n - 1; ++i) add_pair(t, i - 1, x, i - 1, (long)i);
            add_pair(t, 2 * n - 1, x, 2 * n - 1, (long)(2 * n + 1));
            for (std::size_t i = 2; i <= 2 * n - 1; ++i) add_pair(t, i - 1, y, i - 1, 1);
            add_pair(t, 2 * n - 1, y, 2 * n - 1, 2);
            return t;
        }

        case Family::r_n1_gamma: {
            reject_unknown_params(e, {"gamma1", "gamma2", "gamma3"});
            const Rational g1 = param(e, "gamma1"), g2 = param(e, "gamma2"),
                           g3 = param(e, "gamma3");
            if (g1 == 0 && g2 == 0 && g3 == 0)
                throw error("R_n1_gamma: (gamma1,gamma2,gamma3) must not be (0,0,0)");
            AlgebraTable t = widen(make_n_n1(n), 1);
            const std::size_t x = n;
            t.add(0, x, 0, 1);
            t.add(x, 0, 0, -1);
            t.add(x, 0, n - 1, g1);
            t.add(1, x, 1, Rational(2) - Rational((long)n));
            t.add(x, 1, 1, Rational((long)n) - 2);
            t.add(x, 1, n - 1, g2);
            for (std::size_t i = 3; i <= n - 1; ++i) {
                t.add(i - 1, x, i - 1, (long)i - (long)n);
                t.add(x, i - 1, i - 1, (long)n - (long)i);
            }
            t.add(x, x, n - 1, g3);
            return t;
        }
        case Family::r_2n1_gamma: {
            reject_unknown_params(e, {"gamma1", "gamma2", "gamma3"});
            const Rational g1 = param(e, "gamma1"), g2 = param(e, "gamma2"),
                           g3 = param(e, "gamma3");
            if (g1 == 0 && g2 == 0 && g3 == 0)
                throw error("R_2n1_gamma: (gamma1,gamma2,gamma3) must not be (0,0,0)");
            AlgebraTable t = widen(make_q2n(n), 1);
            const std::size_t x = 2 * n, top = 2 * n - 1;
            t.add(0, x, 0, 1);
            t.add(x, 0, 0, -1);
            t.add(x, 0, top, g1);
            // Diagonal i - 2 - (2n-3)/2 on e_2..e_{2n-1}; the top weight
            // 2n-3+2a then vanishes, as the extension method requires.
            for (std::size_t i = 2; i <= 2 * n - 1; ++i) {
                const Rational c = Rational((long)i - 2) - Rational((long)(2 * n) - 3, 2);
                t.add(i - 1, x, i - 1, c);
                t.add(x, i - 1, i - 1, -c);
            }
            t.add(x, 1, top, g2);
            t.add(x, x, top, g3);
            return t;
        }

        case Family::r4_1: {
            reject_unknown_params(e, {"alpha"});
            const Rational alpha = param(e, "alpha");
            if (alpha != 0 && alpha != 1) throw error("R4_1: alpha must be 0 or 1");
            AlgebraTable t = widen(make_f1(n), 1);
            const std::size_t x = n;
            t.add(0, x, 0, -1);
            t.add(1, x, 1, -1);
            t.add(1, x, n - 1, alpha);
            t.add(x, 0, 0, 1);
            for (std::size_t i = 3; i <= n; ++i) t.add(i - 1, x, i - 1, -((long)i - 1));
            return t;
        }
        case Family::r4_2:
        case Family::r4_3: {
            auto keys = indexed_keys("a", 4, n >= 1 ? n - 1 : 0);
            if (e.family == Family::r4_2) keys.push_back("alpha");
            reject_unknown_params(e, keys);
            AlgebraTable t = widen(make_f1(n), 1);
            const std::size_t x = n;
            t.add(0, x, 1, 1);
            t.add(1, x, 1, 1);
            for (std::size_t i = 4; i <= n - 1; ++i) {
                const Rational ai = param(e, "a" + std::to_string(i));
                t.add(0, x, i - 1, ai);
                t.add(1, x, i - 1, ai);
            }
            if (e.family == Family::r4_2)
                t.add(0, x, n - 1, param(e, "alpha"));
            else
                t.add(1, x, n - 1, 1);
            for (std::size_t i = 3; i <= n; ++i) {
                t.add(i - 1, x, i - 1, 1);
                for (std::size_t j = i + 2; j <= n; ++j)
                    t.add(i - 1, x, j - 1, param(e, "a" + std::to_string(j - i + 2)));
            }
            return t;
        }

        case Family::r6_1:
        case Family::r6_2:
        case Family::r6_3:
        case Family::r6_4:
        case Family::r6_5: {
            const bool has_alpha = e.family != Family::r6_3;
            reject_unknown_params(e, has_alpha ? std::vector<std::string>{"alpha"}
                                               : std::vector<std::string>{});
            const Rational alpha = param(e, "alpha");
            if ((e.family == Family::r6_1 || e.family == Family::r6_5) && alpha != 0 &&
                alpha != 1)
                throw error(family_info(e.family).id + ": alpha must be 0 or 1");
            if (e.family == Family::r6_2 && alpha == 0) throw error("R6_2: alpha must be nonzero");
            if (e.family == Family::r6_4 && alpha == 1) throw error("R6_4: alpha must differ from 1");
            AlgebraTable t = widen(make_f2(n), 1);
            const std::size_t x = n;
            t.add(0, x, 0, -1);
            t.add(x, 0, 0, 1);
            for (std::size_t i = 3; i <= n; ++i) t.add(i - 1, x, i - 1, -((long)i - 1));
            switch (e.family) {
                case Family::r6_1: t.add(x, x, 1, alpha); break;
                case Family::r6_2: t.add(1, x, 1, alpha); break;
                case Family::r6_3:
                    t.add(1, x, 1, Rational(1) - Rational((long)n));
                    t.add(1, x, n - 1, 1);
                    break;
                case Family::r6_4:
                    t.add(1, x, 1, -alpha);
                    t.add(x, 1, 1, alpha);
                    break;
                default:  // r6_5
                    t.add(0, x, 1, -alpha);
                    t.add(x, 0, 1, alpha);
                    t.add(1, x, 1, -1);
                    t.add(x, 1, 1, 1);
                    break;
            }
            return t;
        }
        case Family::r6_6: {
            auto keys = indexed_keys("a", 3, n);
            keys.push_back("lambda");
            keys.push_back("delta");
            reject_unknown_params(e, keys);
            const Rational lambda = param(e, "lambda"), delta = param(e, "delta");
            if (delta != 0 && delta != -1) throw error("R6_6: delta must be 0 or -1");
            AlgebraTable t = widen(make_f2(n), 1);
            const std::size_t x = n;
            for (std::size_t i = 3; i <= n; ++i)
                t.add(0, x, i - 1, param(e, "a" + std::to_string(i)));
            for (std::size_t i = 3; i <= n - 1; ++i)
                for (std::size_t j = i + 1; j <= n; ++j)
                    t.add(i - 1, x, j - 1, param(e, "a" + std::to_string(j - i + 2)));
            t.add(x, x, n - 1, lambda);
            t.add(1, x, 1, 1);
            t.add(x, 1, 1, delta);
            return t;
        }

        case Family::l_1:
        case Family::l_2: {
            reject_unknown_params(e, {});
            AlgebraTable t = widen(make_f2(n), 2);
            const std::size_t x = n, y = n + 1;
            t.add(0, x, 0, 1);
            t.add(x, 0, 0, -1);
            t.add(1, y, 1, 1);
            if (e.family == Family::l_1) t.add(y, 1, 1, -1);
            for (std::size_t i = 3; i <= n; ++i) t.add(i - 1, x, i - 1, (long)i - 1);
            return t;
        }
    }
    throw error("unknown family");
}

/// Representative parameter instances used by the verification harness.
inline std::vector<CatalogEntry> default_instances(Family f, std::size_t n) {
    std::vector<CatalogEntry> out;
    auto mk = [&](std::map<std::string, Rational> p) { out.push_back({f, n, std::move(p)}); };
    switch (f) {
        case Family::nf:
        case Family::n_n1:
        case Family::q2n:
        case Family::f1:
        case Family::f2:
        case Family::s_n1_2:
        case Family::s_n1_3:
        case Family::s_n2:
        case Family::q2n2:
        case Family::r6_3:
        case Family::l_1:
        case Family::l_2: mk({}); break;
        case Family::s_n1: mk({{"alpha", 1}, {"beta", Rational(3, 2)}}); break;
        case Family::s_n1_1:
            mk({{"beta", 1}});
            mk({{"beta", Rational(2) - Rational((long)n)}});
            break;
        case Family::s_n1_4: mk({{"a3", 1}, {"a4", n >= 6 ? Rational(2) : Rational(0)}}); break;
        case Family::q2n1_1: mk({{"alpha", 1}}); break;
        case Family::q2n1_2:
            mk({{"eps", 0}});
            mk({{"eps", 1}});
            break;
        case Family::q2n1_3: mk({{"alpha", 2}}); break;
        case Family::r_n1_gamma:
        case Family::r_2n1_gamma:
            mk({{"gamma1", 0}, {"gamma2", 0}, {"gamma3", 1}});
            mk({{"gamma1", 0}, {"gamma2", 1}, {"gamma3", 0}});
            mk({{"gamma1", 1}, {"gamma2", 1}, {"gamma3", 0}});
            mk({{"gamma1", 1}, {"gamma2", 0}, {"gamma3", 0}});
            break;
        case Family::r4_1:
        case Family::r6_1:
        case Family::r6_5:
            mk({{"alpha", 0}});
            mk({{"alpha", 1}});
            break;
        case Family::r4_2:
            mk(n >= 5 ? std::map<std::string, Rational>{{"a4", 1}, {"alpha", 1}}
                      : std::map<std::string, Rational>{{"alpha", 1}});
            break;
        case Family::r4_3:
            mk(n >= 5 ? std::map<std::string, Rational>{{"a4", 1}}
                      : std::map<std::string, Rational>{});
            break;
        case Family::r6_2: mk({{"alpha", 1}}); break;
        case Family::r6_4: mk({{"alpha", 2}}); break;
        case Family::r6_6:
            mk({{"a3", 1}, {"lambda", 1}, {"delta", 0}});
            mk({{"a3", 1}, {"lambda", 1}, {"delta", -1}});
            break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parameter normalization for R_{n+1,1}: reduction of (g1,g2,g3) to one of
// the four canonical triples, with a rational basis-change witness when the
// required root extraction stays in Q.
// ---------------------------------------------------------------------------

struct GammaTriple {
    Rational g1, g2, g3;
    bool all_zero() const { return g1 == 0 && g2 == 0 && g3 == 0; }
    bool operator==(const GammaTriple&) const = default;
};

/// Action of an admissible change of basis (A1, B2 invertible scalings, C1,
/// C2 translation components of x') on the gamma parameters.
inline GammaTriple transform_gamma(std::size_t n, const GammaTriple& g, const Rational& a1,
                                   const Rational& b2, const Rational& c1, const Rational& c2) {
    if (a1 == 0 || b2 == 0) throw error("transform_gamma: A1 and B2 must be nonzero");
    if (n < 4) throw error("transform_gamma: n must be >= 4");
    GammaTriple out;
    out.g1 = g.g1 / (pow_rational(a1, (long)n - 3) * b2);
    out.g2 = g.g2 / pow_rational(a1, (long)n - 2);
    out.g3 = (g.g3 + c1 * g.g1 + c2 * g.g2) / (pow_rational(a1, (long)n - 2) * b2);
    return out;
}

struct NormalizationResult {
    GammaTriple canonical;
    bool witness_available = false;
    std::optional<Matrix> witness;  // canonical-basis vectors in original coordinates
    std::string detail;
};

inline GammaTriple canonical_gamma_class(const GammaTriple& g) {
    if (g.g1 == 0 && g.g2 == 0) return {0, 0, 1};
    if (g.g1 == 0) return {0, 1, 0};
    if (g.g2 != 0) return {1, 1, 0};
    return {1, 0, 0};
}

namespace detail {
/// Witness columns e'_1..e'_n, x' for the change of basis determined by
/// (A1, B2, C1, C2); the chain vectors e'_3.. are built by bracketing.
inline Matrix gamma_witness_matrix(const AlgebraTable& t, std::size_t n, const Rational& a1,
                                   const Rational& b2, const Rational& c1, const Rational& c2) {
    const std::size_t d = n + 1;
    std::vector<Vec> cols(d, Vec(d, Rational(0)));
    Vec& e1 = cols[0];
    e1[0] = a1;
    Vec acoef(n + 1, Rational(0));  // 1-based A_k
    acoef[1] = a1;
    auto cval = [&](std::size_t k) { return k == 1 ? c1 : (k == 2 ? c2 : Rational(0)); };
    for (std::size_t k = 3; k <= n; ++k) {
        const Rational denom = Rational((long)k) - Rational((long)n) - 1;
        acoef[k] = k == n ? c1 * acoef[n - 1] - a1 * cval(n - 1)
                          : (a1 * cval(k - 1) - c1 * acoef[k - 1]) / denom;
        e1[k - 1] = acoef[k];
    }
    Vec& e2 = cols[1];
    Vec bcoef(n + 1, Rational(0));
    bcoef[2] = b2;
    e2[1] = b2;
    for (std::size_t k = 3; k <= n; ++k) {
        bcoef[k] = -c1 * bcoef[k - 1] / Rational((long)k - 2);
        e2[k - 1] = bcoef[k];
    }
    for (std::size_t i = 3; i <= n; ++i) cols[i - 1] = t.bracket(cols[i - 2], cols[0]);
    Vec& xp = cols[n];
    xp[n] = 1;
    xp[0] = c1;
    xp[1] = c2;
    Matrix w(d, d);
    for (std::size_t j = 0; j < d; ++j) w.set_column(j, cols[j]);
    return w;
}
}  // namespace detail

/// Normalizes an admissible gamma triple to its canonical class, producing a
/// rational change-of-basis witness whenever the case analysis only needs
/// rational data (the (n-2)-th root of g2 must exist in Q when g2 != 0).
inline NormalizationResult normalize_gamma(std::size_t n, const GammaTriple& g) {
    if (n < 4) throw error("normalize_gamma: n must be >= 4");
    if (g.all_zero()) throw error("normalize_gamma: triple must not be (0,0,0)");
    NormalizationResult res;
    res.canonical = canonical_gamma_class(g);

    Rational a1(1), b2(1), c1(0), c2(0);
    bool ok = true;
    if (g.g1 == 0 && g.g2 == 0) {
        b2 = g.g3;
        res.detail = "B2 = g3";
    } else if (g.g1 == 0) {
        const auto root = rational_kth_root(g.g2, (unsigned)(n - 2));
        if (!root || *root == 0) {
            ok = false;
            res.detail = "needs A1 with A1^(n-2) = g2; no rational solution";
        } else {
            a1 = *root;
            c2 = -g.g3 / g.g2;
            res.detail = "A1 = g2^(1/(n-2)), C2 = -g3/g2";
        }
    } else {
        if (g.g2 != 0) {
            const auto root = rational_kth_root(g.g2, (unsigned)(n - 2));
            if (!root || *root == 0) {
                ok = false;
                res.detail = "needs A1 with A1^(n-2) = g2; no rational solution";
            } else {
                a1 = *root;
            }
        }
        if (ok) {
            c1 = -g.g3 / g.g1;
            b2 = g.g1 / pow_rational(a1, (long)n - 3);
            res.detail = "B2 = g1/A1^(n-3), C1 = -g3/g1";
        }
    }
    if (!ok) return res;

    const GammaTriple check = transform_gamma(n, g, a1, b2, c1, c2);
    if (!(check == res.canonical)) throw error("normalize_gamma: internal witness mismatch");
    const AlgebraTable original = construct({Family::r_n1_gamma, n,
                                             {{"gamma1", g.g1}, {"gamma2", g.g2}, {"gamma3", g.g3}}});
    res.witness = detail::gamma_witness_matrix(original, n, a1, b2, c1, c2);
    res.witness_available = true;
    return res;
}

/// True iff p transports a's bracket to b's: p [x,y]_a = [p x, p y]_b on all
/// basis pairs. Throws on dimension mismatch or singular p.
inline bool verify_basis_change(const AlgebraTable& a, const AlgebraTable& b, const Matrix& p) {
    if (a.dim() != b.dim()) throw error("verify_basis_change: dimension mismatch");
    if (p.rows() != a.dim() || p.cols() != a.dim())
        throw error("verify_basis_change: matrix shape mismatch");
    if (!inverse(p)) throw error("verify_basis_change: singular matrix");
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec lhs(d, Rational(0));
            for (const auto& [k, c] : a.bracket_basis(i, j)) {
                for (std::size_t r = 0; r < d; ++r) lhs[r] += c * p.at(r, k);
            }
            const Vec rhs = b.bracket(p.column(i), p.column(j));
            if (lhs != rhs) return false;
        }
    return true;
}

/// True iff s1 and s2 are two-sided ideals meeting trivially and spanning
/// the whole algebra.
inline bool verify_split_decomposition(const AlgebraTable& a, const Subspace& s1,
                                       const Subspace& s2) {
    if (s1.ambient_dim() != a.dim() || s2.ambient_dim() != a.dim()) return false;
    if (!is_two_sided_ideal(a, s1) || !is_two_sided_ideal(a, s2)) return false;
    if (s1.intersect(s2).dim() != 0) return false;
    return s1.sum(s2).dim() == a.dim();
}

// ---------------------------------------------------------------------------
// Leading-parameter scaling (the "first non-vanishing parameter can be
// assumed to be 1" reductions), applied as an explicit operation on entries.
// ---------------------------------------------------------------------------

/// Rescales the designated parameter list so its first nonvanishing entry
/// becomes 1, when the required root extraction is rational. The searched
/// list and scaling weights follow each family's basis-scaling law:
/// S_n1_4 a_l with weight l-1; R4_2/R4_3 a_i with weight i-2 (R4_2's trailing
/// alpha rescales along, weight n-2); R6_6 searches (a_3..a_n, lambda) with
/// weights i-2 and n-1.
inline std::optional<CatalogEntry> normalize_leading_parameter(const CatalogEntry& e) {
    std::vector<std::pair<std::string, long>> searched;
    std::vector<std::pair<std::string, long>> transformed;
    const long n = (long)e.n;
    switch (e.family) {
        case Family::s_n1_4:
            for (long l = 3; l <= n - 1; ++l)
                searched.push_back({"a" + std::to_string(l), l - 1});
            transformed = searched;
            break;
        case Family::r4_2:
        case Family::r4_3:
            for (long i = 4; i <= n - 1; ++i)
                searched.push_back({"a" + std::to_string(i), i - 2});
            transformed = searched;
            if (e.family == Family::r4_2) transformed.push_back({"alpha", n - 2});
            break;
        case Family::r6_6:
            for (long i = 3; i <= n; ++i) searched.push_back({"a" + std::to_string(i), i - 2});
            searched.push_back({"lambda", n - 1});
            transformed = searched;
            break;
        default: throw error("normalize_leading_parameter: family has no scalable list");
    }
    auto get = [&](const std::string& k) { return detail::param(e, k); };
    for (const auto& [key, weight] : searched) {
        const Rational v = get(key);
        if (v == 0) continue;
        const auto mu = rational_kth_root(v, (unsigned)weight);
        if (!mu || *mu == 0) return std::nullopt;
        CatalogEntry out = e;
        for (const auto& [k2, w2] : transformed) {
            const Rational cur = get(k2);
            if (cur != 0) out.params[k2] = cur / pow_rational(*mu, w2);
        }
        return out;
    }
    return e;  // nothing to scale
}

}  // namespace leibalg
