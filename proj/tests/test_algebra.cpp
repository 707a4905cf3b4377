#include <leibalg/algebra.hpp>
#include <leibalg/catalog.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace leibalg;
using leibalg::testing::Rng;

namespace {

AlgebraTable table_of(Family f, std::size_t n, std::map<std::string, Rational> params = {}) {
    return construct({f, n, std::move(params)});
}

Vec unit(std::size_t dim, std::size_t i) {
    Vec v(dim, Rational(0));
    v[i] = 1;
    return v;
}

AlgebraTable sl2() {
    // basis (e, h, f): [e,f] = h, [h,e] = 2e, [h,f] = -2f, antisymmetric.
    AlgebraTable t(3, {"e", "h", "f"});
    t.add(0, 2, 1, 1);
    t.add(2, 0, 1, -1);
    t.add(1, 0, 0, 2);
    t.add(0, 1, 0, -2);
    t.add(1, 2, 2, -2);
    t.add(2, 1, 2, 2);
    return t;
}

}  // namespace

TEST_CASE("bracket on NF_3 and bilinearity") {
    const auto nf3 = table_of(Family::nf, 3);
    REQUIRE(nf3.bracket(unit(3, 1), unit(3, 0)) == unit(3, 2));  // [e2,e1] = e3
    REQUIRE(nf3.bracket(unit(3, 0), Vec(3, Rational(0))) == Vec(3, Rational(0)));

    const auto f41 = table_of(Family::f1, 4);
    Vec e12 = unit(4, 0);
    e12[1] = 1;
    Vec expected(4, Rational(0));
    expected[2] = 2;  // [e1+e2, e1] = 2 e3
    REQUIRE(f41.bracket(e12, unit(4, 0)) == expected);

    Rng rng(5);
    const auto t = table_of(Family::f1, 5);
    for (int trial = 0; trial < 10; ++trial) {
        const Vec x = rng.vector(5), y = rng.vector(5), z = rng.vector(5);
        const Rational a = rng.rational(), b = rng.rational();
        Vec ax_by(5);
        for (std::size_t i = 0; i < 5; ++i) ax_by[i] = a * x[i] + b * y[i];
        Vec want(5);
        const Vec xz = t.bracket(x, z), yz = t.bracket(y, z);
        for (std::size_t i = 0; i < 5; ++i) want[i] = a * xz[i] + b * yz[i];
        REQUIRE(t.bracket(ax_by, z) == want);
        const Vec zx = t.bracket(z, x), zy = t.bracket(z, y);
        for (std::size_t i = 0; i < 5; ++i) want[i] = a * zx[i] + b * zy[i];
        REQUIRE(t.bracket(z, ax_by) == want);
    }
}

TEST_CASE("leibniz_violations") {
    REQUIRE(leibniz_violations(table_of(Family::nf, 4)).empty());
    REQUIRE(leibniz_violations(table_of(Family::n_n1, 5)).empty());

    AlgebraTable bad(2);
    bad.add(0, 0, 1, 1);  // [e1,e1] = e2
    bad.add(0, 1, 1, 1);  // [e1,e2] = e2
    const auto v = leibniz_violations(bad);
    REQUIRE(v.size() == 1);
    REQUIRE((v[0].i == 0 && v[0].j == 0 && v[0].k == 0));
    REQUIRE(v[0].defect == unit(2, 1));
}

TEST_CASE("antisymmetry_violations") {
    REQUIRE(antisymmetry_violations(table_of(Family::n_n1, 4)).empty());
    REQUIRE(antisymmetry_violations(AlgebraTable(3)).empty());
    const auto v = antisymmetry_violations(table_of(Family::f1, 4));
    REQUIRE(!v.empty());
    REQUIRE((v[0].i == 0 && v[0].j == 0));
    Vec two_e3(4, Rational(0));
    two_e3[2] = 2;
    REQUIRE(v[0].defect == two_e3);
}

TEST_CASE("ideal_closure") {
    const auto nf4 = table_of(Family::nf, 4);
    REQUIRE(ideal_closure(nf4, Subspace::span(4, {unit(4, 0)})).dim() == 4);
    REQUIRE(ideal_closure(nf4, Subspace::zero(4)).dim() == 0);

    const auto f5 = table_of(Family::f1, 5);
    const auto top = Subspace::span(5, {unit(5, 4)});
    REQUIRE(ideal_closure(f5, top) == top);
}

TEST_CASE("series dimensions") {
    for (std::size_t n : {2, 5, 8}) {
        const auto s = lower_central_series(table_of(Family::nf, n));
        REQUIRE(s.size() == n + 1);
        for (std::size_t i = 0; i < s.size(); ++i) REQUIRE(s[i].dim() == n - i);
        REQUIRE(nilpotency_index(table_of(Family::nf, n)) == n + 1);
    }
    const AlgebraTable abelian(4);
    const auto s = lower_central_series(abelian);
    REQUIRE(s.size() == 2);
    REQUIRE(s[1].dim() == 0);
    REQUIRE(nilpotency_index(abelian) == 2);
    REQUIRE(solvability_index(abelian) == 2);

    const auto f51 = lower_central_series(table_of(Family::f1, 5));
    std::vector<std::size_t> dims;
    for (const auto& t : f51) dims.push_back(t.dim());
    REQUIRE(dims == std::vector<std::size_t>{5, 3, 2, 1, 0});
}

TEST_CASE("solvability and nilpotency of extensions") {
    const auto r41 = table_of(Family::r4_1, 5, {{"alpha", 0}});
    REQUIRE(!nilpotency_index(r41));
    REQUIRE(solvability_index(r41));
    REQUIRE(derived_series(r41).back().dim() == 0);

    REQUIRE(leibniz_violations(sl2()).empty());
    REQUIRE(!solvability_index(sl2()));

    const auto rn1 = table_of(Family::r_n1_gamma, 5,
                              {{"gamma1", 1}, {"gamma2", 0}, {"gamma3", 0}});
    REQUIRE(solvability_index(rn1));
}

TEST_CASE("right annihilator and center") {
    const auto f41 = table_of(Family::f1, 4);
    const auto ann = right_annihilator(f41);
    REQUIRE(ann.dim() == 3);
    for (std::size_t i : {1, 2, 3}) REQUIRE(ann.contains(unit(4, i)));

    REQUIRE(right_annihilator(AlgebraTable(3)).dim() == 3);
    REQUIRE(center(AlgebraTable(3)).dim() == 3);

    for (std::size_t n : {4, 6}) {
        const auto c = center(table_of(Family::f1, n));
        REQUIRE(c.dim() == 1);
        REQUIRE(c.contains(unit(n, n - 1)));
    }

    const auto rn1 = table_of(Family::r_n1_gamma, 5,
                              {{"gamma1", 1}, {"gamma2", 0}, {"gamma3", 0}});
    REQUIRE(right_annihilator(rn1).contains(unit(6, 4)));  // e_n

    // dim cent(R) = 1 for the first nilradical-F2 class, either alpha.
    for (long a : {0, 1})
        REQUIRE(center(table_of(Family::r6_1, 5, {{"alpha", a}})).dim() == 1);
}

TEST_CASE("squares ideal") {
    REQUIRE(squares_ideal(table_of(Family::n_n1, 5)).dim() == 0);

    for (std::size_t n : {4, 6}) {
        const auto sq = squares_ideal(table_of(Family::f1, n));
        REQUIRE(sq.dim() == n - 2);
        for (std::size_t i = 2; i < n; ++i) REQUIRE(sq.contains(unit(n, i)));
    }

    for (auto g : std::vector<std::array<long, 3>>{{0, 0, 1}, {0, 1, 0}, {1, 1, 0}, {1, 0, 0}}) {
        const auto t = table_of(Family::r_n1_gamma, 5,
                                {{"gamma1", g[0]}, {"gamma2", g[1]}, {"gamma3", g[2]}});
        const auto sq = squares_ideal(t);
        REQUIRE(sq.dim() == 1);
        REQUIRE(sq.contains(unit(6, 4)));
    }
}

TEST_CASE("quotient tables") {
    const auto nf4 = table_of(Family::nf, 4);
    const auto q = quotient(nf4, Subspace::span(4, {unit(4, 3)}));
    REQUIRE(q.same_constants(table_of(Family::nf, 3)));

    REQUIRE(quotient(nf4, Subspace::zero(4)).same_constants(nf4));

    const auto f5 = table_of(Family::f1, 5);
    const auto lie = quotient(f5, squares_ideal(f5));
    REQUIRE(antisymmetry_violations(lie).empty());
    REQUIRE(leibniz_violations(lie).empty());

    REQUIRE_THROWS_AS(quotient(nf4, Subspace::span(4, {unit(4, 0)})), error);
}

TEST_CASE("fingerprints") {
    const auto nf4 = fingerprint(table_of(Family::nf, 4));
    REQUIRE(nf4.lcs_dims == std::vector<std::size_t>{4, 3, 2, 1, 0});
    REQUIRE(nf4.dim_center == 1);
    REQUIRE(!nf4.lie);

    const auto ab = fingerprint(AlgebraTable(3));
    REQUIRE(ab.lcs_dims == std::vector<std::size_t>{3, 0});
    REQUIRE(ab.dim_center == 3);
    REQUIRE(ab.dim_derivation_space == 9);

    const auto f1 = fingerprint(table_of(Family::f1, 5));
    const auto f2 = fingerprint(table_of(Family::f2, 5));
    REQUIRE(f1 != f2);
    REQUIRE(f1.dim_derivation_space == 6);
    REQUIRE(f2.dim_derivation_space == 7);
    REQUIRE(f1.dim_right_annihilator == 4);

    AlgebraTable bad(2);
    bad.add(0, 0, 1, 1);
    bad.add(0, 1, 1, 1);
    REQUIRE_THROWS_AS(fingerprint(bad), error);
}

TEST_CASE("fingerprint invariance under basis permutation") {
    Rng rng(77);
    for (Family f : {Family::nf, Family::f1, Family::r4_1}) {
        const auto insts = default_instances(f, 5);
        const auto t = construct(insts.front());
        const auto base = fingerprint(t);
        std::vector<std::size_t> perm(t.dim());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        for (int trial = 0; trial < 4; ++trial) {
            for (std::size_t i = perm.size(); i > 1; --i)
                std::swap(perm[i - 1], perm[(std::size_t)rng.range(0, (long)i - 1)]);
            REQUIRE(fingerprint(permuted(t, perm)) == base);
        }
    }
}

TEST_CASE("structural invariants on catalog samples") {
    for (Family f : {Family::nf, Family::f1, Family::f2, Family::n_n1}) {
        const auto t = table_of(f, 5);
        const std::size_t n = t.dim();
        // squares and symmetric sums lie in the right annihilator
        const auto ann = right_annihilator(t);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec s = t.bracket(unit(n, i), unit(n, j));
                const Vec w = t.bracket(unit(n, j), unit(n, i));
                for (std::size_t k = 0; k < n; ++k) s[k] += w[k];
                REQUIRE(ann.contains(s));
            }
        // the right annihilator is a two-sided ideal
        REQUIRE(ideal_closure(t, ann) == ann);
        // series are nested
        const auto lcs = lower_central_series(t);
        for (std::size_t i = 1; i < lcs.size(); ++i) REQUIRE(lcs[i - 1].contains(lcs[i]));
        const auto ds = derived_series(t);
        for (std::size_t i = 1; i < ds.size(); ++i) REQUIRE(ds[i - 1].contains(ds[i]));
        const auto ni = nilpotency_index(t);
        REQUIRE(ni);
        REQUIRE(*ni <= n + 1);
        REQUIRE(solvability_index(t));
    }
}

TEST_CASE("natural graduation check") {
    for (Family f : {Family::nf, Family::n_n1, Family::f1, Family::f2}) {
        const auto res = natural_graduation_check(table_of(f, 6));
        REQUIRE(res.coordinate_filtration);
        REQUIRE(res.graded_equal);
    }
    const auto q6 = natural_graduation_check(table_of(Family::q2n, 3));
    REQUIRE(q6.coordinate_filtration);
    REQUIRE(q6.graded_equal);

    // filiform Lie algebra with one extra depth-breaking product is not
    // naturally graded: [e2,e3] = e5 lands two levels below grade 3.
    AlgebraTable m(5);
    for (std::size_t i = 2; i <= 4; ++i) {
        m.add(i - 1, 0, i, 1);
        m.add(0, i - 1, i, -1);
    }
    m.add(1, 2, 4, 1);
    m.add(2, 1, 4, -1);
    REQUIRE(leibniz_violations(m).empty());
    const auto res = natural_graduation_check(m);
    REQUIRE(res.coordinate_filtration);
    REQUIRE(!res.graded_equal);
}
