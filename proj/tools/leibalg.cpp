// leibalg: exact structure-constant toolkit for the classified Leibniz and
// Lie algebra families, with verification reports over Q.

#include <leibalg/io.hpp>
#include <leibalg/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace leibalg;

namespace {

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    auto parse_one = [](const std::string& v) -> std::size_t {
        char* end = nullptr;
        const long r = std::strtol(v.c_str(), &end, 10);
        if (!end || *end != '\0' || r < 0) throw error("invalid range bound '" + v + "'");
        return (std::size_t)r;
    };
    if (dots == std::string::npos) {
        const std::size_t n = parse_one(s);
        return {n, n};
    }
    const std::size_t a = parse_one(s.substr(0, dots)), b = parse_one(s.substr(dots + 2));
    if (a > b) throw error("invalid range '" + s + "'");
    return {a, b};
}

Family parse_family(const std::string& id) {
    const auto f = family_by_id(id);
    if (!f) {
        std::string known;
        for (const auto& fi : family_registry()) known += fi.id + " ";
        throw error("unknown family '" + id + "'; known families: " + known);
    }
    return *f;
}

std::map<std::string, Rational> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, Rational> params;
    for (const auto& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw error("parameter must look like name=value: " + kv);
        const auto v = parse_rational(kv.substr(eq + 1));
        if (!v) throw error("parameter '" + kv + "' has a malformed rational value");
        params[kv.substr(0, eq)] = *v;
    }
    return params;
}

void write_output(const nlohmann::json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

int print_report(const VerificationReport& report, bool as_json) {
    if (as_json) {
        std::cout << report_json(report).dump(2) << "\n";
    } else {
        std::cout << "target " << report.target << "  n=" << report.n_from << ".." << report.n_to
                  << "\n";
        for (const auto& c : report.checks) {
            std::cout << "  [" << to_string(c.status) << "] " << c.name;
            if (!c.detail.empty()) std::cout << "  -- " << c.detail;
            std::cout << "\n";
        }
        std::cout << "overall: " << to_string(report.overall()) << "  ("
                  << report.checks.size() << " checks, " << report.elapsed_seconds << "s)\n";
    }
    switch (report.overall()) {
        case CheckStatus::pass: return 0;
        case CheckStatus::fail: return 1;
        default: return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for classified Leibniz/Lie algebra families"};
    app.require_subcommand(1);

    // verify
    std::string verify_family, verify_range = "4..8";
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "run a family's verification bundle");
    verify->add_option("family", verify_family, "family id (see `catalog list`)")->required();
    verify->add_option("--n", verify_range, "inclusive n range, e.g. 4..8")->required();
    verify->add_flag("--json", verify_json, "emit the report as JSON");

    // invariants
    std::string inv_path;
    auto* invariants = app.add_subcommand("invariants", "fingerprint of an algebra file");
    invariants->add_option("file", inv_path, "algebra JSON file")->required();

    // derivations
    std::string der_path, der_pattern;
    auto* derivations_cmd =
        app.add_subcommand("derivations", "derivation-space basis of an algebra file");
    derivations_cmd->add_option("file", der_path, "algebra JSON file")->required();
    derivations_cmd->add_option("--pattern", der_pattern, "compare against pattern F1 or F2")
        ->check(CLI::IsMember({"F1", "F2"}));

    // normalize
    std::size_t norm_n = 0;
    std::vector<std::string> norm_gammas;
    bool norm_json = false;
    auto* normalize = app.add_subcommand("normalize", "canonical class of a gamma triple");
    normalize->add_option("n", norm_n, "family parameter n (table dimension n+1)")->required();
    normalize->add_option("gammas", norm_gammas, "gamma1 gamma2 gamma3")->expected(3);
    normalize->add_flag("--json", norm_json, "emit JSON");

    // catalog list / emit
    auto* catalog = app.add_subcommand("catalog", "catalog listing and table emission");
    bool list_json = false;
    auto* list = catalog->add_subcommand("list", "list the catalog families");
    list->add_flag("--json", list_json, "emit the catalog index as JSON");
    std::string emit_family, emit_out;
    std::size_t emit_n = 0;
    std::vector<std::string> emit_params;
    auto* emit = catalog->add_subcommand("emit", "emit one table as an algebra file");
    emit->add_option("family", emit_family, "family id")->required();
    emit->add_option("n", emit_n, "family parameter n")->required();
    emit->add_option("--param", emit_params, "family parameter, name=value (repeatable)");
    emit->add_option("-o,--output", emit_out, "output path (stdout when omitted)");
    catalog->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            const auto [a, b] = parse_range(verify_range);
            return print_report(run_family_checks(parse_family(verify_family), a, b),
                                verify_json);
        }
        if (*invariants) {
            const auto t = load_algebra(inv_path);
            std::cout << fingerprint_json(fingerprint(t)).dump(2) << "\n";
            return 0;
        }
        if (*derivations_cmd) {
            const auto t = load_algebra(der_path);
            const auto ds = derivation_space(t);
            nlohmann::json out;
            out["dim"] = ds.dim();
            nlohmann::json basis = nlohmann::json::array();
            for (const auto& m : ds.basis) {
                nlohmann::json rows = nlohmann::json::array();
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    nlohmann::json row = nlohmann::json::array();
                    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
                    rows.push_back(std::move(row));
                }
                basis.push_back(std::move(rows));
            }
            out["basis"] = std::move(basis);
            if (!der_pattern.empty()) {
                const auto pat =
                    der_pattern == "F1" ? FiliformPattern::f1 : FiliformPattern::f2;
                out["pattern"] = matches_prop_pattern(ds, pat) ? "match" : "mismatch";
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*normalize) {
            GammaTriple g;
            auto parse_g = [&](const std::string& s) {
                const auto v = parse_rational(s);
                if (!v) throw error("malformed rational '" + s + "'");
                return *v;
            };
            g.g1 = parse_g(norm_gammas[0]);
            g.g2 = parse_g(norm_gammas[1]);
            g.g3 = parse_g(norm_gammas[2]);
            const auto res = normalize_gamma(norm_n, g);
            if (norm_json) {
                nlohmann::json out{
                    {"canonical",
                     {to_string(res.canonical.g1), to_string(res.canonical.g2),
                      to_string(res.canonical.g3)}},
                    {"witness_available", res.witness_available},
                    {"detail", res.detail}};
                if (res.witness) {
                    nlohmann::json rows = nlohmann::json::array();
                    for (std::size_t i = 0; i < res.witness->rows(); ++i) {
                        nlohmann::json row = nlohmann::json::array();
                        for (std::size_t j = 0; j < res.witness->cols(); ++j)
                            row.push_back(to_string(res.witness->at(i, j)));
                        rows.push_back(std::move(row));
                    }
                    out["witness"] = std::move(rows);
                }
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "canonical: (" << res.canonical.g1 << ", " << res.canonical.g2
                          << ", " << res.canonical.g3 << ")\n"
                          << "witness: " << (res.witness_available ? "yes" : "no") << "  ("
                          << res.detail << ")\n";
            }
            return 0;
        }
        if (*list) {
            if (list_json) {
                std::cout << catalog_index_json().dump(2) << "\n";
            } else {
                for (const auto& fi : family_registry()) {
                    std::cout << fi.id << "  dim=" << fi.dim_formula << "  n>=" << fi.min_n;
                    if (!fi.param_names.empty()) std::cout << "  params: " << fi.param_names;
                    if (!fi.constraints.empty()) std::cout << "  [" << fi.constraints << "]";
                    std::cout << "  -- " << fi.source << "\n";
                }
            }
            return 0;
        }
        if (*emit) {
            const CatalogEntry entry{parse_family(emit_family), emit_n, parse_params(emit_params)};
            if (table_dim(entry.family, entry.n) > max_dim())
                throw error("table dimension exceeds LEIBALG_MAX_DIM = " +
                            std::to_string(max_dim()));
            write_output(emit_algebra(construct(entry)), emit_out);
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
