#pragma once

#include <leibalg/catalog.hpp>
#include <leibalg/derivations.hpp>
#include <leibalg/io.hpp>

#include <chrono>
#include <sstream>

namespace leibalg {

namespace detail {

inline std::string instance_tag(const CatalogEntry& e) {
    std::ostringstream os;
    os << family_info(e.family).id << " n=" << e.n;
    if (!e.params.empty()) {
        os << " (";
        bool first = true;
        for (const auto& [k, v] : e.params) {
            if (!first) os << ",";
            os << k << "=" << v;
            first = false;
        }
        os << ")";
    }
    return os.str();
}

inline Subspace leading_block(const AlgebraTable& t, std::size_t nb) {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < nb; ++i) vs.push_back(t.basis_vector(i));
    return Subspace::span(t.dim(), vs);
}

inline bool squares_inside_right_annihilator(const AlgebraTable& t) {
    return right_annihilator(t).contains(squares_ideal(t));
}

inline bool products_inside(const AlgebraTable& t, const Subspace& s) {
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j)
            if (!s.contains(t.bracket(t.basis_vector(i), t.basis_vector(j)))) return false;
    return true;
}

}  // namespace detail

/// Checks attached to one constructed instance. These are the per-family
/// bundles behind `leibalg verify` and the acceptance suite.
inline void append_instance_checks(VerificationReport& report, const CatalogEntry& e) {
    using detail::instance_tag;
    const auto& fi = family_info(e.family);
    const std::string tag = instance_tag(e);
    const AlgebraTable t = construct(e);
    auto add = [&](const std::string& name, CheckStatus st, std::string detail_text = "") {
        report.checks.push_back({tag + ": " + name, st, std::move(detail_text)});
    };

    // Defining identity.
    {
        const auto v = leibniz_violations(t);
        std::ostringstream os;
        if (!v.empty())
            os << v.size() << " violating triples, first at (" << v[0].i + 1 << "," << v[0].j + 1
               << "," << v[0].k + 1 << ")";
        add("leibniz identity", v.empty() ? CheckStatus::pass : CheckStatus::fail, os.str());
    }
    if (fi.lie)
        add("antisymmetry",
            antisymmetry_violations(t).empty() ? CheckStatus::pass : CheckStatus::fail);

    const std::size_t n = e.n;
    if (e.family == Family::nf) {
        const auto s = lower_central_series(t);
        bool ok = s.size() == n + 1;
        for (std::size_t i = 0; ok && i < s.size(); ++i) ok = s[i].dim() == n - i;
        add("null-filiform series dims", ok ? CheckStatus::pass : CheckStatus::fail);
        add("nilpotency index", nilpotency_index(t) == n + 1 ? CheckStatus::pass
                                                             : CheckStatus::fail);
    }
    if (fi.naturally_graded && e.family != Family::nf) {
        // dim L^i = d - i for 2 <= i <= d (filiform law in the table dimension)
        const std::size_t d = t.dim();
        const auto s = lower_central_series(t);
        bool ok = s.size() == d;
        for (std::size_t i = 2; ok && i <= d; ++i) ok = s[i - 1].dim() == d - i;
        add("filiform series dims", ok ? CheckStatus::pass : CheckStatus::fail);
    }
    if (fi.naturally_graded) {
        const auto g = natural_graduation_check(t);
        add("natural graduation",
            !g.coordinate_filtration
                ? CheckStatus::inconclusive
                : (g.graded_equal ? CheckStatus::pass : CheckStatus::fail),
            g.coordinate_filtration ? "" : "filtration is not spanned by standard basis vectors");
    }

    if (e.family == Family::f1 || e.family == Family::f2) {
        const auto ds = derivation_space(t);
        const std::size_t want = e.family == Family::f1 ? n + 1 : n + 2;
        std::ostringstream os;
        os << "dim Der = " << ds.dim();
        add("derivation dimension", ds.dim() == want ? CheckStatus::pass : CheckStatus::fail,
            os.str());
        if (n >= 4) {
            const auto pat =
                e.family == Family::f1 ? FiliformPattern::f1 : FiliformPattern::f2;
            add("derivation pattern",
                matches_prop_pattern(ds, pat) ? CheckStatus::pass : CheckStatus::fail);
        }
        if (!ds.all_upper_triangular)
            add("nil-independent count", CheckStatus::inconclusive, "non-triangular basis");
        else
            add("nil-independent count",
                max_nil_independent_upper_triangular(ds) == 2 ? CheckStatus::pass
                                                              : CheckStatus::fail);
    }

    if (fi.solvable_extension) {
        const std::size_t nb = nilradical_block_dim(e.family, n);
        const Subspace block = detail::leading_block(t, nb);
        const auto cert = certify_nilradical(t, block);
        std::ostringstream os;
        os << "ideal=" << to_string(cert.ideal)
           << " nilpotent=" << to_string(cert.restricted_nilpotent)
           << " actions=" << to_string(cert.actions_non_nilpotent)
           << " dim=" << to_string(cert.dimension_bound);
        add("nilradical certificate", cert.overall(), os.str());
        add("squares ideal inside right annihilator",
            detail::squares_inside_right_annihilator(t) ? CheckStatus::pass : CheckStatus::fail);
        add("derived series reaches zero",
            solvability_index(t) ? CheckStatus::pass : CheckStatus::fail);
        add("lower central series stays nonzero",
            nilpotency_index(t) ? CheckStatus::fail : CheckStatus::pass);
        add("squared algebra inside nilradical",
            detail::products_inside(t, block) ? CheckStatus::pass : CheckStatus::fail);
    }
}

/// Fingerprint separation report for the four canonical gamma classes.
struct SeparationReport {
    std::size_t n = 0;
    std::vector<GammaTriple> classes;
    std::vector<InvariantFingerprint> fingerprints;
    std::vector<bool> identity_clean;           // per class
    std::vector<std::vector<bool>> separated;   // pairwise, by fingerprint inequality

    bool internally_consistent() const {
        if (fingerprints.size() != classes.size() || separated.size() != classes.size())
            return false;
        for (std::size_t a = 0; a < classes.size(); ++a) {
            if (separated[a].size() != classes.size()) return false;
            for (std::size_t b = 0; b < classes.size(); ++b) {
                if (separated[a][b] != (fingerprints[a] != fingerprints[b])) return false;
                if (separated[a][b] != separated[b][a]) return false;
            }
            if (separated[a][a]) return false;
        }
        return true;
    }
};

inline SeparationReport gamma_separation_report(std::size_t n) {
    SeparationReport rep;
    rep.n = n;
    rep.classes = {GammaTriple{0, 0, 1}, GammaTriple{0, 1, 0}, GammaTriple{1, 1, 0},
                   GammaTriple{1, 0, 0}};
    for (const auto& g : rep.classes) {
        const auto t = construct({Family::r_n1_gamma, n,
                                  {{"gamma1", g.g1}, {"gamma2", g.g2}, {"gamma3", g.g3}}});
        rep.identity_clean.push_back(leibniz_violations(t).empty());
        rep.fingerprints.push_back(detail::fingerprint_unchecked(t));
    }
    rep.separated.assign(rep.classes.size(), std::vector<bool>(rep.classes.size(), false));
    for (std::size_t a = 0; a < rep.classes.size(); ++a)
        for (std::size_t b = 0; b < rep.classes.size(); ++b)
            rep.separated[a][b] = rep.fingerprints[a] != rep.fingerprints[b];
    return rep;
}

inline nlohmann::json separation_report_json(const SeparationReport& rep) {
    nlohmann::json classes = nlohmann::json::array();
    for (std::size_t a = 0; a < rep.classes.size(); ++a) {
        const auto& g = rep.classes[a];
        classes.push_back({{"gamma", {to_string(g.g1), to_string(g.g2), to_string(g.g3)}},
                           {"identity_clean", (bool)rep.identity_clean[a]},
                           {"fingerprint", fingerprint_json(rep.fingerprints[a])}});
    }
    nlohmann::json pairs = nlohmann::json::array();
    for (std::size_t a = 0; a < rep.classes.size(); ++a)
        for (std::size_t b = a + 1; b < rep.classes.size(); ++b)
            pairs.push_back({{"pair", {a, b}}, {"separated", (bool)rep.separated[a][b]}});
    return {{"n", rep.n},
            {"classes", std::move(classes)},
            {"separated_pairs", std::move(pairs)},
            {"internally_consistent", rep.internally_consistent()}};
}

/// Runs the family's check bundle over an inclusive n-range.
inline VerificationReport run_family_checks(Family f, std::size_t n_from, std::size_t n_to) {
    const auto& fi = family_info(f);
    VerificationReport report;
    report.target = fi.id;
    report.n_from = n_from;
    report.n_to = n_to;
    const auto start = std::chrono::steady_clock::now();
    if (n_from > n_to) throw error("verify: empty n range");
    for (std::size_t n = n_from; n <= n_to; ++n) {
        if (n < fi.min_n) {
            report.checks.push_back({fi.id + " n=" + std::to_string(n),
                                     CheckStatus::inconclusive, "below the family's minimal n"});
            continue;
        }
        if (table_dim(f, n) > max_dim())
            throw error("verify: table dimension exceeds LEIBALG_MAX_DIM");
        for (const auto& inst : default_instances(f, n)) append_instance_checks(report, inst);
        if (f == Family::r_n1_gamma) {
            const auto rep = gamma_separation_report(n);
            std::size_t separated_pairs = 0;
            for (std::size_t a = 0; a < rep.classes.size(); ++a)
                for (std::size_t b = a + 1; b < rep.classes.size(); ++b)
                    if (rep.separated[a][b]) ++separated_pairs;
            std::ostringstream os;
            os << separated_pairs << "/6 canonical pairs separated by fingerprints";
            report.checks.push_back(
                {fi.id + " n=" + std::to_string(n) + ": fingerprint separation report",
                 rep.internally_consistent() ? CheckStatus::pass : CheckStatus::fail, os.str()});
        }
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace leibalg
