#include <leibalg/io.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace leibalg;

TEST_CASE("algebra file round trip") {
    for (const auto& fi : family_registry()) {
        const std::size_t n = std::max<std::size_t>(fi.min_n, 5);
        for (const auto& inst : default_instances(fi.family, n)) {
            const auto t = construct(inst);
            REQUIRE(parse_algebra(emit_algebra(t)) == t);
        }
    }
}

TEST_CASE("algebra file accepts the documented shape") {
    const auto j = nlohmann::json::parse(R"({
        "dim": 3,
        "basis": ["e1", "e2", "e3"],
        "brackets": [
            {"i": 1, "j": 1, "k": 2, "c": "1"},
            {"i": 2, "j": 1, "k": 3, "c": "1"}
        ]})");
    const auto t = parse_algebra(j);
    REQUIRE(t == construct({Family::nf, 3, {}}));

    const auto empty = nlohmann::json::parse(R"({"dim": 3, "brackets": []})");
    REQUIRE(parse_algebra(empty).constants().empty());
}

TEST_CASE("algebra file validation errors carry context") {
    auto expect_error = [](const char* text, const char* needle) {
        try {
            parse_algebra(nlohmann::json::parse(text));
            FAIL("expected a parse failure");
        } catch (const error& e) {
            REQUIRE(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error(R"({"dim": 3, "brackets": [{"i":1,"j":1,"k":4,"c":"1"}]})", "out of range");
    expect_error(R"({"dim": 3, "brackets": [{"i":1,"j":1,"c":"1"}]})", "needs 1-based index");
    expect_error(R"({"dim": 3, "brackets": [{"i":1,"j":1,"k":2,"c":"1/0"}]})", "malformed rational");
    expect_error(R"({"dim": 3, "brackets": [{"i":1,"j":1,"k":2,"c":"0"}]})", "zero coefficient");
    expect_error(
        R"({"dim": 2, "brackets": [{"i":1,"j":1,"k":2,"c":"1"},{"i":1,"j":1,"k":2,"c":"3"}]})",
        "duplicates");
    expect_error(R"({"dim": 99, "brackets": []})", "LEIBALG_MAX_DIM");
    expect_error(R"([1,2,3])", "top level");
}

TEST_CASE("fingerprint json fields") {
    const auto j = fingerprint_json(fingerprint(construct({Family::nf, 4, {}})));
    REQUIRE(j["lcs_dims"] == nlohmann::json({4, 3, 2, 1, 0}));
    REQUIRE(j["dim_center"] == 1);
    REQUIRE(j["is_lie"] == false);
}

TEST_CASE("catalog index") {
    const auto rows = catalog_index_json();
    REQUIRE(rows.size() >= 20);
    for (const auto& r : rows) {
        REQUIRE(r.contains("family_id"));
        REQUIRE(r.contains("paper_ref"));
        REQUIRE(!r["paper_ref"].get<std::string>().empty());
        REQUIRE(r.contains("dim_formula"));
    }
}

TEST_CASE("report json shape and determinism") {
    VerificationReport r;
    r.target = "NF";
    r.n_from = 2;
    r.n_to = 4;
    r.checks.push_back({"identity", CheckStatus::pass, "ok"});
    r.checks.push_back({"series", CheckStatus::inconclusive, "skipped"});
    const auto j = report_json(r);
    REQUIRE(j["status"] == "inconclusive");
    REQUIRE(j["checks"].size() == 2);
    const auto j2 = report_json(r);
    auto strip = [](nlohmann::json v) {
        v.erase("elapsed_seconds");
        return v;
    };
    REQUIRE(strip(j) == strip(j2));
}
