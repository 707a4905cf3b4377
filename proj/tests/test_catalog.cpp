#include <leibalg/catalog.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace leibalg;
using leibalg::testing::Rng;

namespace {

Vec unit(std::size_t dim, std::size_t i) {
    Vec v(dim, Rational(0));
    v[i] = 1;
    return v;
}

Rational coeff(const AlgebraTable& t, std::size_t i, std::size_t j, std::size_t k) {
    for (const auto& [kk, c] : t.bracket_basis(i, j))
        if (kk == k) return c;
    return 0;
}

}  // namespace

TEST_CASE("catalog registry") {
    REQUIRE(family_registry().size() >= 20);
    REQUIRE(family_by_id("NF"));
    REQUIRE(family_by_id("R6_4"));
    REQUIRE(!family_by_id("nope"));
}

TEST_CASE("null-filiform and filiform tables") {
    const auto nf3 = construct({Family::nf, 3, {}});
    REQUIRE(coeff(nf3, 0, 0, 1) == 1);  // [e1,e1] = e2
    REQUIRE(coeff(nf3, 1, 0, 2) == 1);  // [e2,e1] = e3
    REQUIRE(nf3.constants().size() == 2);

    const auto f4 = construct({Family::f1, 4, {}});
    REQUIRE(coeff(f4, 0, 0, 2) == 1);
    REQUIRE(coeff(f4, 1, 0, 2) == 1);
    REQUIRE(coeff(f4, 2, 0, 3) == 1);
    REQUIRE(f4.constants().size() == 3);

    const auto f24 = construct({Family::f2, 4, {}});
    REQUIRE(coeff(f24, 0, 0, 2) == 1);
    REQUIRE(coeff(f24, 1, 0, 2) == 0);  // e2 is inert in the second type
}

TEST_CASE("even-dimensional pairing table") {
    const auto q6 = construct({Family::q2n, 3, {}});  // dim 6
    REQUIRE(coeff(q6, 1, 4, 5) == 1);   // [e2,e5] = e6
    REQUIRE(coeff(q6, 2, 3, 5) == -1);  // [e3,e4] = -e6
    REQUIRE(antisymmetry_violations(q6).empty());
}

TEST_CASE("parameter validation") {
    REQUIRE_THROWS_AS(construct({Family::nf, 0, {}}), error);
    REQUIRE_THROWS_AS(construct({Family::s_n1_1, 3, {{"beta", 1}}}), error);
    REQUIRE_THROWS_AS(
        construct({Family::r_n1_gamma, 5, {{"gamma1", 0}, {"gamma2", 0}, {"gamma3", 0}}}), error);
    REQUIRE_THROWS_AS(construct({Family::q2n1_2, 3, {{"eps", 2}}}), error);
    REQUIRE_THROWS_AS(construct({Family::r4_1, 5, {{"alpha", 2}}}), error);
    REQUIRE_THROWS_AS(construct({Family::r6_2, 5, {{"alpha", 0}}}), error);
    REQUIRE_THROWS_AS(construct({Family::r6_4, 5, {{"alpha", 1}}}), error);
    REQUIRE_THROWS_AS(construct({Family::r6_6, 5, {{"delta", 2}}}), error);
    REQUIRE_THROWS_AS(construct({Family::nf, 3, {{"alpha", 1}}}), error);
}

TEST_CASE("default instances satisfy the defining identities") {
    // Families whose displayed tables are identity-clean; the two gamma
    // families are covered separately below.
    for (const auto& fi : family_registry()) {
        if (fi.family == Family::r_n1_gamma || fi.family == Family::r_2n1_gamma) continue;
        const std::size_t n = std::max<std::size_t>(fi.min_n, 5);
        for (const auto& inst : default_instances(fi.family, n)) {
            const auto t = construct(inst);
            INFO(fi.id << " n=" << n);
            REQUIRE(leibniz_violations(t).empty());
            if (fi.lie) REQUIRE(antisymmetry_violations(t).empty());
        }
    }
}

TEST_CASE("gamma families: identity holds exactly on the gamma3 ray") {
    for (Family f : {Family::r_n1_gamma, Family::r_2n1_gamma}) {
        const std::size_t n = 4;
        const auto clean = construct({f, n, {{"gamma3", 1}}});
        REQUIRE(leibniz_violations(clean).empty());

        // With gamma1 or gamma2 nonzero the displayed products violate the
        // identity on triples of the form (x,e_i,x) and (x,x,e_i), i <= 2;
        // the defect sits on the top graded vector.
        const auto dirty = construct({f, n, {{"gamma1", 1}}});
        const auto v = leibniz_violations(dirty);
        REQUIRE(v.size() == 2);
        const std::size_t x = dirty.dim() - 1, top = dirty.dim() - 2;
        for (const auto& t : v) {
            REQUIRE(t.i == x);
            REQUIRE(((t.j == x && t.k == 0) || (t.j == 0 && t.k == x)));
            for (std::size_t s = 0; s < dirty.dim(); ++s)
                REQUIRE((t.defect[s] == 0) == (s != top));
        }
    }
}

TEST_CASE("canonical gamma class selection") {
    REQUIRE(canonical_gamma_class({0, 0, 5}) == GammaTriple{0, 0, 1});
    REQUIRE(canonical_gamma_class({0, 3, 7}) == GammaTriple{0, 1, 0});
    REQUIRE(canonical_gamma_class({2, 3, 7}) == GammaTriple{1, 1, 0});
    REQUIRE(canonical_gamma_class({2, 0, 7}) == GammaTriple{1, 0, 0});
}

TEST_CASE("normalize_gamma produces verifiable witnesses") {
    const std::size_t n = 5;
    auto check_witness = [&](const GammaTriple& g) {
        const auto res = normalize_gamma(n, g);
        REQUIRE(res.witness_available);
        const auto original = construct({Family::r_n1_gamma, n,
                                         {{"gamma1", g.g1}, {"gamma2", g.g2}, {"gamma3", g.g3}}});
        const auto canon = construct({Family::r_n1_gamma, n,
                                      {{"gamma1", res.canonical.g1},
                                       {"gamma2", res.canonical.g2},
                                       {"gamma3", res.canonical.g3}}});
        REQUIRE(verify_basis_change(canon, original, *res.witness));
    };

    check_witness({0, 0, 5});       // -> (0,0,1)
    check_witness({0, 0, -7});      // -> (0,0,1)
    check_witness({0, 8, 3});       // -> (0,1,0): 8 = 2^3 is a cube (n-2 = 3)
    check_witness({1, 0, 0});       // -> (1,0,0), identity-like
    check_witness({5, 0, 2});       // -> (1,0,0)
    check_witness({2, 27, Rational(7, 3)});  // -> (1,1,0): 27 = 3^3

    const auto no_wit = normalize_gamma(6, {1, 3, 0});
    REQUIRE(no_wit.canonical == GammaTriple{1, 1, 0});
    REQUIRE(!no_wit.witness_available);  // 3 is not a rational 4th power

    REQUIRE_THROWS_AS(normalize_gamma(5, {0, 0, 0}), error);
}

TEST_CASE("normalize_gamma is idempotent on canonical classes") {
    for (const auto& g : {GammaTriple{0, 0, 1}, GammaTriple{0, 1, 0}, GammaTriple{1, 1, 0},
                          GammaTriple{1, 0, 0}}) {
        const auto res = normalize_gamma(5, g);
        REQUIRE(res.canonical == g);
        REQUIRE(res.witness_available);
    }
}

TEST_CASE("gamma class is invariant under admissible transformations") {
    Rng rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        GammaTriple g{rng.rational(4, 2), rng.rational(4, 2), rng.rational(4, 2)};
        if (g.all_zero()) continue;
        const std::size_t n = (std::size_t)rng.range(4, 8);
        const auto cls = canonical_gamma_class(g);
        const GammaTriple h = transform_gamma(n, g, rng.nonzero_rational(3, 2),
                                              rng.nonzero_rational(3, 2), rng.rational(3, 2),
                                              rng.rational(3, 2));
        REQUIRE(canonical_gamma_class(h) == cls);
    }
}

TEST_CASE("verify_basis_change basics") {
    const auto nf3 = construct({Family::nf, 3, {}});
    REQUIRE(verify_basis_change(nf3, nf3, Matrix::identity(3)));
    REQUIRE(!verify_basis_change(nf3, nf3, Matrix::identity(3).scaled(2)));
    REQUIRE_THROWS_AS(verify_basis_change(nf3, nf3, Matrix::zero(3, 3)), error);
}

TEST_CASE("split decompositions of the codimension-2 classes") {
    for (Family f : {Family::l_1, Family::l_2}) {
        for (std::size_t n : {5, 6}) {
            const auto t = construct({f, n, {}});
            const std::size_t d = n + 2;
            std::vector<Vec> s1;  // e1, e3..en, x
            s1.push_back(unit(d, 0));
            for (std::size_t i = 2; i < n; ++i) s1.push_back(unit(d, i));
            s1.push_back(unit(d, n));
            const std::vector<Vec> s2{unit(d, 1), unit(d, n + 1)};  // e2, y
            REQUIRE(verify_split_decomposition(t, Subspace::span(d, s1), Subspace::span(d, s2)));
            REQUIRE(verify_split_decomposition(t, Subspace::full(d), Subspace::zero(d)));
        }
    }
    const auto f41 = construct({Family::f1, 4, {}});
    REQUIRE(!verify_split_decomposition(f41, Subspace::span(4, {unit(4, 0)}),
                                        Subspace::span(4, {unit(4, 1), unit(4, 2), unit(4, 3)})));
}

TEST_CASE("an oversized nilradical candidate fails the certificate") {
    const std::size_t n = 5, d = n + 2;
    const auto t = construct({Family::l_1, n, {}});
    // span{e_1..e_n, y} is a two-sided ideal but not nilpotent ([e2,y] = e2).
    std::vector<Vec> big;
    for (std::size_t i = 0; i < n; ++i) big.push_back(unit(d, i));
    big.push_back(unit(d, n + 1));
    const auto cert = certify_nilradical(t, Subspace::span(d, big));
    REQUIRE(cert.ideal == CheckStatus::pass);
    REQUIRE(cert.restricted_nilpotent == CheckStatus::fail);
    REQUIRE(cert.overall() == CheckStatus::fail);
}

TEST_CASE("leading-parameter scaling") {
    CatalogEntry e{Family::s_n1_4, 6, {{"a3", 4}, {"a4", 16}}};
    const auto scaled = normalize_leading_parameter(e);
    REQUIRE(scaled);
    REQUIRE(scaled->params.at("a3") == 1);           // weight 2: mu = 2
    REQUIRE(scaled->params.at("a4") == Rational(2)); // 16 / 2^3

    CatalogEntry r62{Family::r6_6, 5, {{"a3", 9}, {"lambda", 5}, {"delta", 0}}};
    const auto s2 = normalize_leading_parameter(r62);
    REQUIRE(s2);
    REQUIRE(s2->params.at("a3") == 1);
    REQUIRE(s2->params.at("lambda") == Rational(5, 81));  // weight n-1 = 4, mu = 3

    CatalogEntry bad{Family::s_n1_4, 6, {{"a3", 2}}};
    REQUIRE(!normalize_leading_parameter(bad));  // 2 is not a rational square

    CatalogEntry nothing{Family::s_n1_4, 6, {}};
    const auto same = normalize_leading_parameter(nothing);
    REQUIRE(same);
    REQUIRE(same->params.empty());

    // the rescaled entry still constructs an identity-clean table
    const auto t = construct(*s2);
    REQUIRE(leibniz_violations(t).empty());
}

TEST_CASE("filiform dimension laws across the catalog") {
    for (std::size_t n : {4, 6, 8}) {
        for (Family f : {Family::n_n1, Family::f1, Family::f2}) {
            const auto series = lower_central_series(construct({f, n, {}}));
            REQUIRE(series.size() == n);
            for (std::size_t i = 2; i <= n; ++i) REQUIRE(series[i - 1].dim() == n - i);
        }
    }
    for (std::size_t n : {3, 4}) {
        const auto series = lower_central_series(construct({Family::q2n, n, {}}));
        const std::size_t d = 2 * n;
        REQUIRE(series.size() == d);
        for (std::size_t i = 2; i <= d; ++i) REQUIRE(series[i - 1].dim() == d - i);
    }
}
