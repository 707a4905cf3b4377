#pragma once

#include <leibalg/algebra.hpp>
#include <leibalg/catalog.hpp>

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <set>
#include <string>

namespace leibalg {

/// Dimension cap for loaded and constructed tables (env LEIBALG_MAX_DIM).
inline std::size_t max_dim() {
    if (const char* s = std::getenv("LEIBALG_MAX_DIM")) {
        char* end = nullptr;
        const long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0) return (std::size_t)v;
    }
    return 24;
}

/// Structure-constant file: {"dim": n, "basis": [..], "brackets":
/// [{"i":1,"j":1,"k":2,"c":"1"}]} with 1-based indices and rationals as
/// strings "p" or "p/q".
inline nlohmann::json emit_algebra(const AlgebraTable& a) {
    nlohmann::json j;
    j["dim"] = a.dim();
    j["basis"] = a.labels();
    nlohmann::json brackets = nlohmann::json::array();
    for (const auto& [ij, terms] : a.constants())
        for (const auto& [k, c] : terms)
            brackets.push_back({{"i", ij.first + 1},
                                {"j", ij.second + 1},
                                {"k", k + 1},
                                {"c", to_string(c)}});
    j["brackets"] = std::move(brackets);
    return j;
}

inline AlgebraTable parse_algebra(const nlohmann::json& j) {
    if (!j.is_object()) throw error("algebra file: top level must be an object");
    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
        throw error("algebra file: missing or invalid 'dim'");
    const std::size_t dim = j["dim"].get<std::size_t>();
    if (dim == 0) throw error("algebra file: dim must be positive");
    if (dim > max_dim())
        throw error("algebra file: dim exceeds LEIBALG_MAX_DIM = " + std::to_string(max_dim()));
    std::vector<std::string> labels;
    if (j.contains("basis")) {
        if (!j["basis"].is_array() || j["basis"].size() != dim)
            throw error("algebra file: 'basis' must list one label per dimension");
        for (const auto& l : j["basis"]) labels.push_back(l.get<std::string>());
    }
    AlgebraTable t(dim, labels);
    if (!j.contains("brackets") || !j["brackets"].is_array())
        throw error("algebra file: missing 'brackets' array");
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    std::size_t entry_no = 0;
    for (const auto& b : j["brackets"]) {
        ++entry_no;
        const std::string at = "brackets[" + std::to_string(entry_no - 1) + "]";
        for (const char* key : {"i", "j", "k"}) {
            if (!b.contains(key) || !b[key].is_number_unsigned())
                throw error("algebra file: " + at + " needs 1-based index '" + key + "'");
            const std::size_t v = b[key].get<std::size_t>();
            if (v < 1 || v > dim)
                throw error("algebra file: " + at + " index '" + key + "' out of range [1," +
                            std::to_string(dim) + "]");
        }
        if (!b.contains("c")) throw error("algebra file: " + at + " missing coefficient 'c'");
        std::string cs;
        if (b["c"].is_string())
            cs = b["c"].get<std::string>();
        else if (b["c"].is_number_integer())
            cs = std::to_string(b["c"].get<long long>());
        else
            throw error("algebra file: " + at + " coefficient must be a string or integer");
        const auto c = parse_rational(cs);
        if (!c) throw error("algebra file: " + at + " has malformed rational '" + cs + "'");
        if (*c == 0) throw error("algebra file: " + at + " has zero coefficient");
        const std::size_t i = b["i"].get<std::size_t>() - 1, jj = b["j"].get<std::size_t>() - 1,
                          k = b["k"].get<std::size_t>() - 1;
        if (!seen.insert({i, jj, k}).second)
            throw error("algebra file: " + at + " duplicates entry (i,j,k)");
        t.add(i, jj, k, *c);
    }
    return t;
}

inline AlgebraTable load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw error("parse error in '" + path + "': " + ex.what());
    }
    try {
        return parse_algebra(j);
    } catch (const error& ex) {
        throw error(std::string(ex.what()) + " (in '" + path + "')");
    }
}

inline nlohmann::json fingerprint_json(const InvariantFingerprint& f) {
    return {{"dim", f.dim},
            {"lcs_dims", f.lcs_dims},
            {"ds_dims", f.ds_dims},
            {"dim_center", f.dim_center},
            {"dim_right_annihilator", f.dim_right_annihilator},
            {"dim_squares_ideal", f.dim_squares_ideal},
            {"dim_derivation_space", f.dim_derivation_space},
            {"is_lie", f.lie}};
}

struct ReportCheck {
    std::string name;
    CheckStatus status = CheckStatus::fail;
    std::string detail;
};

/// Verification report for one target over an inclusive n-range. Overall
/// status is pass only when every check passes; any fail dominates any
/// inconclusive result.
struct VerificationReport {
    std::string target;
    std::size_t n_from = 0, n_to = 0;
    std::vector<ReportCheck> checks;
    double elapsed_seconds = 0;

    CheckStatus overall() const {
        CheckStatus s = CheckStatus::pass;
        for (const auto& c : checks) {
            if (c.status == CheckStatus::fail) return CheckStatus::fail;
            if (c.status == CheckStatus::inconclusive) s = CheckStatus::inconclusive;
        }
        return s;
    }
};

inline nlohmann::json report_json(const VerificationReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    return {{"target", r.target},
            {"n_range", {r.n_from, r.n_to}},
            {"status", to_string(r.overall())},
            {"checks", std::move(checks)},
            {"elapsed_seconds", r.elapsed_seconds}};
}

/// Generated catalog index: one row per family.
inline nlohmann::json catalog_index_json() {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& fi : family_registry())
        rows.push_back({{"family_id", fi.id},
                        {"paper_ref", fi.source},
                        {"dim_formula", fi.dim_formula},
                        {"param_names", fi.param_names},
                        {"constraints", fi.constraints},
                        {"min_n", fi.min_n}});
    return rows;
}

}  // namespace leibalg
