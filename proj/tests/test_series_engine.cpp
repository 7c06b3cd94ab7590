#include <doctest.h>

#include "polya/error.hpp"
#include "polya/oracle.hpp"
#include "polya/series_engine.hpp"
#include "support/aut_oracle.hpp"

#include <cstdlib>

using namespace polya;

namespace {

Rational q(const char* s) { return parse_rational(s); }

// Exact expectations over (uniform tree of size n, uniform automorphism),
// from the test-side permutation oracle.
struct ExactLaw {
    Rational c1, c2, y1, y2;
    std::map<std::size_t, Rational> forest_share;  // over all fixed nodes
};

ExactLaw exact_law(std::size_t n) {
    ExactLaw law;
    Rational nodes = 0;
    const auto trees = enumerate_trees(n);
    for (const auto& t : trees) {
        const auto auts = oracle_test::automorphisms(oracle_test::from_parens(t->encoding()));
        const Rational w = Rational(1, static_cast<unsigned long>(auts.size()));
        for (const auto& a : auts) {
            law.c1 += w * a.fixed;
            law.c2 += w * a.fixed * a.fixed;
            law.y1 += w * a.components;
            law.y2 += w * a.components * a.components;
            for (const auto& [m, cnt] : a.forest_sizes) law.forest_share[m] += w * cnt;
            nodes += w * a.fixed;
        }
    }
    const Rational tn(static_cast<unsigned long>(trees.size()));
    law.c1 /= tn;
    law.c2 /= tn;
    law.y1 /= tn;
    law.y2 /= tn;
    for (auto& [m, v] : law.forest_share) v /= nodes;
    return law;
}

}  // namespace

TEST_SUITE("series_engine") {

TEST_CASE("Polya tree counts") {
    const RationalSeries t = polya_coeffs(20);
    const long expect[] = {0, 1, 1, 2, 4, 9, 20, 48, 115, 286, 719};
    for (std::size_t n = 0; n <= 10; ++n) CHECK(t[n] == expect[n]);
    CHECK(t[12] == 4766);
    CHECK(t[20] == 12826228);
    CHECK(t.family() == "polya");
    for (std::size_t n = 1; n <= 12; ++n) CHECK(t[n] == static_cast<long>(enumerate_trees(n).size()));
}

TEST_CASE("order limits and defaults") {
    CHECK_THROWS_AS(polya_coeffs(0), Error);
    setenv("POLYA_ORDER", "123", 1);
    CHECK(default_order() == 123);
    setenv("POLYA_ORDER", "abc", 1);
    CHECK_THROWS_AS(default_order(), Error);
    unsetenv("POLYA_ORDER");
    CHECK(default_order() == 400);
    CHECK(default_bivariate_order() == 120);
}

TEST_CASE("Cayley series is n^(n-1)/n!") {
    const RationalSeries c = cayley_coeffs(15);
    for (unsigned n = 1; n <= 15; ++n) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), n, n - 1);
        CHECK(c[n] == Rational(p) / Rational(factorial(n)));
    }
    // C is the sum of C-tree weights over trees of size n
    for (std::size_t n = 1; n <= 8; ++n) {
        Rational s = 0;
        for (const auto& t : enumerate_trees(n)) s += ctree_weight(*t);
        CHECK(s == c[n]);
    }
}

TEST_CASE("D-forest coefficients") {
    const RationalSeries d = dforest_coeffs(12);
    const char* expect[] = {"1", "0", "1/2", "1/3", "7/8", "11/30", "281/144", "449/840"};
    for (std::size_t n = 0; n <= 7; ++n) CHECK(d[n] == q(expect[n]));
    for (std::size_t n = 2; n <= 10; ++n) {
        Rational s = 0;
        for (const auto& f : enumerate_dforests(n)) s += forest_weight(f);
        CHECK(s == d[n]);
    }
}

TEST_CASE("three routes to T agree") {
    const std::size_t N = 40;
    const RationalSeries t = polya_coeffs(N);
    const RationalSeries d = dforest_coeffs(N);
    RationalSeries z(N);
    z[1] = 1;
    CHECK(z * exp(t) * d == t);
    CHECK(compose(cayley_coeffs(N), z * d) == t);
}

TEST_CASE("C-tree polynomials") {
    const BivariateSeries tc = ctree_polynomials(8);
    CHECK(tc[1] == Polynomial{0, 1});
    CHECK(tc[2] == Polynomial{0, 0, 1});
    CHECK(tc[3] == Polynomial{0, q("1/2"), 0, q("3/2")});
    CHECK(tc[4] == Polynomial{0, q("1/3"), 1, 0, q("8/3")});
    for (std::size_t n = 1; n <= 8; ++n) {
        Polynomial s;
        for (const auto& t : enumerate_trees(n)) s += fixed_point_polynomial(*t);
        CHECK(s == tc[n]);
    }
    CHECK(tc.evaluate_marker(1) == polya_coeffs(8));
}

TEST_CASE("pointed trees") {
    const RationalSeries p = pointed_coeffs(10);
    const long expect[] = {0, 1, 2, 5, 13, 35, 95};
    for (std::size_t n = 0; n <= 6; ++n) CHECK(p[n] == expect[n]);
    for (std::size_t n = 1; n <= 9; ++n) {
        Integer s = 0;
        for (const auto& t : enumerate_trees(n)) s += pointed_tree_count(*t);
        CHECK(Rational(s) == p[n]);
    }
    RationalSeries bad(3);
    bad[0] = 1;
    CHECK_THROWS_AS(pointed_from(bad), Error);
}

TEST_CASE("forest components and D-tree counts") {
    const BivariateSeries dv = dforest_component_bivariate(10);
    CHECK(dv.evaluate_marker(1) == dforest_coeffs(10));
    for (std::size_t n = 2; n <= 10; ++n) {
        Polynomial s;
        for (const auto& f : enumerate_dforests(n))
            s += Polynomial::monomial(forest_weight(f), f.component_count());
        CHECK(s == dv[n]);
    }
    const BivariateSeries tv = dtree_bivariate(12);
    CHECK(tv.evaluate_marker(1) == polya_coeffs(12));
}

TEST_CASE("gamma series") {
    const std::size_t N = 30;
    const RationalSeries t = polya_coeffs(N);
    RationalSeries g(N), g2(N);
    for (std::size_t i = 2; i <= N; ++i) {
        g += t.substitute_power(i);
        g2 += t.substitute_power(i) * Rational(static_cast<long>(i));
    }
    CHECK(gamma_series(N) == g);
    CHECK(gamma2_series(N) == g2);
}

TEST_CASE("exact moments of C-tree size and D-tree count match the automorphism oracle") {
    const std::size_t N = 8;
    const RationalSeries t = polya_coeffs(N);
    const CSizeMomentSeries cs = csize_moment_series(N);
    const DTreeCountSeries ys = dtree_count_series(N);
    for (std::size_t n = 1; n <= N; ++n) {
        CAPTURE(n);
        const ExactLaw law = exact_law(n);
        const Moments c = csize_moments(cs, t, n);
        CHECK(c.mean == law.c1);
        CHECK(c.variance == law.c2 - law.c1 * law.c1);
        const Moments y = ytotal_moments(ys, t, n);
        CHECK(y.mean == law.y1);
        CHECK(y.variance == law.y2 - law.y1 * law.y1);
    }
}

TEST_CASE("forest-size shares at finite n match the automorphism oracle") {
    const std::size_t N = 8;
    const RationalSeries tc = pointed_coeffs(N);
    for (std::size_t n = 2; n <= N; ++n) {
        const ExactLaw law = exact_law(n);
        Rational total = 0;
        for (std::size_t m = 0; m <= n; ++m) {
            const Rational p = forest_size_marked(N, m)[n] / tc[n];
            const auto it = law.forest_share.find(m);
            CHECK(p == (it == law.forest_share.end() ? Rational(0) : it->second));
            total += p;
        }
        CHECK(total == 1);
    }
}

TEST_CASE("mean number of components of a random D-forest") {
    const std::size_t N = 10;
    const DTreeCountSeries s = dtree_count_series(N);
    const RationalSeries d = dforest_coeffs(N);
    for (std::size_t n = 2; n <= N; ++n) {
        Rational w = 0, wc = 0;
        for (const auto& f : enumerate_dforests(n)) {
            w += forest_weight(f);
            wc += forest_weight(f) * static_cast<long>(f.component_count());
        }
        CHECK(xforest_mean(s, d, n) == wc / w);
    }
    CHECK(xforest_mean(s, d, 4) == q("20/7"));
    CHECK_THROWS_AS(xforest_mean(s, d, 1), Error);
}

TEST_CASE("hierarchies and binary trees") {
    const RationalSeries h = hierarchy_coeffs(14);
    const long he[] = {0, 1, 0, 1, 1, 2, 3, 6, 10, 19, 35, 67};
    for (std::size_t n = 0; n <= 11; ++n) CHECK(h[n] == he[n]);
    const RationalSeries b = binary_polya_coeffs(15);
    const long be[] = {0, 1, 0, 1, 0, 1, 0, 2, 0, 3, 0, 6, 0, 11, 0, 23};
    for (std::size_t n = 0; n <= 15; ++n) CHECK(b[n] == be[n]);
    std::set<std::size_t> no_one;
    for (std::size_t k = 0; k <= 14; ++k)
        if (k != 1) no_one.insert(k);
    for (std::size_t n = 1; n <= 12; ++n) {
        CHECK(h[n] == static_cast<long>(enumerate_trees(n, no_one).size()));
        CHECK(b[n] == static_cast<long>(enumerate_trees(n, std::set<std::size_t>{0, 2}).size()));
    }
}

TEST_CASE("Omega sets") {
    CHECK(OmegaSet::parse("all").to_string() == "all");
    CHECK(OmegaSet::parse("hierarchy").to_string() == OmegaSet::parse("all-1").to_string());
    CHECK(OmegaSet::parse("binary").contains(2));
    CHECK_FALSE(OmegaSet::parse("binary").contains(1));
    CHECK(OmegaSet::parse("all-1,3").is_cofinite());
    CHECK_FALSE(OmegaSet::parse("all-1,3").contains(3));
    for (const char* bad : {"", "x", "1,2", "0,1", "all-0", "0,,2", "all-"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(OmegaSet::parse(bad), Error);
    }
    const std::size_t N = 30;
    CHECK(omega_polya_coeffs(OmegaSet::parse("all"), N) == polya_coeffs(N));
    CHECK(omega_polya_coeffs(OmegaSet::parse("all-1"), N) == hierarchy_coeffs(N));
    CHECK(omega_polya_coeffs(OmegaSet::parse("0,2"), N) == binary_polya_coeffs(N));
    const RationalSeries m = omega_polya_coeffs(OmegaSet::parse("0,1,3"), 12);
    const RationalSeries c = omega_polya_coeffs(OmegaSet::parse("all-2,4"), 12);
    for (std::size_t n = 1; n <= 11; ++n) {
        CHECK(m[n] == static_cast<long>(enumerate_trees(n, std::set<std::size_t>{0, 1, 3}).size()));
        std::set<std::size_t> allowed;
        for (std::size_t k = 0; k <= 12; ++k)
            if (k != 2 && k != 4) allowed.insert(k);
        CHECK(c[n] == static_cast<long>(enumerate_trees(n, allowed).size()));
    }
}

TEST_CASE("exact mean fixed-point count for Omega trees matches the oracle") {
    for (const char* text : {"all-1", "0,2", "0,1,3"}) {
        CAPTURE(text);
        const OmegaSet om = OmegaSet::parse(text);
        const RationalSeries a = omega_polya_coeffs(om, 11);
        const RationalSeries mean = omega_ctree_mean_series(om, 11);
        std::set<std::size_t> allowed;
        for (std::size_t k = 0; k <= 11; ++k)
            if (om.contains(k)) allowed.insert(k);
        for (std::size_t n = 1; n <= 11; ++n) {
            if (a[n] == 0) continue;
            Rational s = 0;
            for (const auto& t : enumerate_trees(n, allowed)) s += fixed_point_polynomial(*t).derivative_at_one();
            CHECK(mean[n] == s);
        }
    }
}

TEST_CASE("identity trees") {
    const IdentitySeries id = identity_tree_coeffs(12);
    const long r[] = {0, 1, 1, 1, 2, 3, 6, 12, 25, 52};
    for (std::size_t n = 0; n <= 9; ++n) CHECK(id.r[n] == r[n]);
    const char* ds[] = {"1", "0", "-1/2", "1/3", "-5/8", "1/30", "11/144", "-139/840"};
    for (std::size_t n = 0; n <= 7; ++n) CHECK(id.dstar[n] == q(ds[n]));
    const long rc[] = {0, 1, 2, 4, 9, 20, 46};
    for (std::size_t n = 0; n <= 6; ++n) CHECK(id.pointed[n] == rc[n]);
    for (std::size_t n = 1; n <= 12; ++n) {
        long count = 0;
        for (const auto& t : enumerate_trees(n)) count += is_identity_tree(*t);
        CHECK(id.r[n] == count);
    }
    for (std::size_t n = 2; n <= 10; ++n) {
        Rational s = 0;
        for (const auto& f : enumerate_dforests(n, true)) s += signed_forest_weight(f);
        CHECK(s == id.dstar[n]);
    }
    const BivariateSeries rcu = identity_ctree_polynomials(8);
    CHECK(rcu.evaluate_marker(1) == id.r.truncated(8));
    CHECK(rcu.marker_derivative_at_one() == id.pointed.truncated(8));
    for (std::size_t n = 1; n <= 8; ++n) {
        Polynomial s;
        for (const auto& t : enumerate_trees(n)) s += signed_fixed_point_polynomial(*t);
        CHECK(s == rcu[n]);
    }
}

TEST_CASE("E(z) with C(z) = R(z E(z))") {
    const RationalSeries e = e_series(10);
    const char* expect[] = {"1", "0", "1/2", "-1/3", "11/8", "-6/5", "629/144"};
    for (std::size_t n = 0; n <= 6; ++n) CHECK(e[n] == q(expect[n]));
    RationalSeries z(10);
    z[1] = 1;
    CHECK(compose(identity_tree_coeffs(10).r, z * e) == cayley_coeffs(10));
}

}  // TEST_SUITE
