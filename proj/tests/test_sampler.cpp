#include <doctest.h>

#include "polya/error.hpp"
#include "polya/oracle.hpp"
#include "polya/sampler.hpp"
#include "polya/series_engine.hpp"

#include <cmath>
#include <unordered_map>

using namespace polya;

namespace {

TreePtr tree(const char* s) { return CanonicalTree::parse(s); }

// Empirical law of c_size for a fixed tree against [u^k] t_T(u).
ChiSquareResult csize_law(const CanonicalTree& t, std::size_t draws, std::uint64_t seed) {
    const Polynomial p = fixed_point_polynomial(t);
    const SampledTree s = SampledTree::from_canonical(t);
    std::vector<std::size_t> counts(t.size() + 1, 0);
    std::vector<double> probs(t.size() + 1, 0.0);
    for (std::size_t k = 0; k <= t.size(); ++k) probs[k] = static_cast<double>(to_long_double(p.coeff(k)));
    Rng rng(seed);
    for (std::size_t i = 0; i < draws; ++i) ++counts[sample_decomposition(s, rng).c_size];
    return chi_square_test(counts, probs);
}

}  // namespace

TEST_SUITE("sampler") {

TEST_CASE("seed splitting") {
    CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
    CHECK(sample_seed(42, 0) != sample_seed(42, 1));
    CHECK(sample_seed(42, 5) == splitmix64(42 + 6 * 0x9E3779B97F4A7C15ULL));
    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        const double u = uniform01(rng);
        CHECK(u >= 0);
        CHECK(u < 1);
        CHECK(uniform_below(rng, 7) < 7);
    }
    CHECK(uniform_below(rng, 1) == 0);
}

TEST_CASE("single node and size limits") {
    Rng rng(3);
    CHECK(sample_polya_tree(1, rng)->encoding() == "()");
    const PolyaTreeSampler s(10);
    CHECK_THROWS_AS(s.sample(11, rng), Error);
    CHECK_THROWS_AS(s.sample(0, rng), Error);
    CHECK(s.sample(2, rng).to_canonical()->encoding() == "(())");
}

TEST_CASE("sampled trees have the requested size and shared subtrees are merged") {
    const PolyaTreeSampler s(500);
    for (std::uint64_t i = 0; i < 50; ++i) {
        Rng rng(sample_seed(9, i));
        const SampledTree t = s.sample(500, rng);
        CHECK(t.size() == 500);
        CHECK(t.to_canonical()->size() == 500);
        // Re-interning the canonical form gives the same number of distinct subtrees.
        CHECK(SampledTree::from_canonical(*t.to_canonical()).nodes.size() == t.nodes.size());
    }
}

TEST_CASE("uniform at n = 4 within three binomial sigmas") {
    const std::size_t draws = 100000;
    const auto all = enumerate_trees(4);
    std::unordered_map<std::string, std::size_t> count;
    const PolyaTreeSampler s(4);
    for (std::size_t i = 0; i < draws; ++i) {
        Rng rng(sample_seed(4, i));
        ++count[s.sample(4, rng).to_canonical()->encoding()];
    }
    CHECK(count.size() == 4);
    const double sigma = std::sqrt(draws * 0.25 * 0.75);
    for (const auto& t : all) CHECK(std::fabs(static_cast<double>(count[t->encoding()]) - draws / 4.0) < 3 * sigma);
}

TEST_CASE("uniform at n = 7 and n = 9 by chi-square") {
    CHECK(uniformity_test(7, 50000, 11).passed);
    CHECK(uniformity_test(9, 60000, 12).passed);
    CHECK_THROWS_AS(uniformity_test(11, 10, 1), Error);
}

TEST_CASE("decomposition of the small example trees") {
    Rng rng(5);
    const auto chain = tree("((((()))))");
    for (int i = 0; i < 20; ++i) {
        const DecompositionSample d = sample_decomposition(*chain, rng);
        CHECK(d.c_size == 5);
        CHECK(d.l_max == 0);
        CHECK(d.y_count == 0);
        CHECK(d.forest_size_histogram.at(0) == 5);
    }
    // Cherry: c_size 3 or 1 with probability 1/2 each; a moved pair is one forest of size 2.
    std::size_t three = 0;
    const std::size_t draws = 100000;
    for (std::size_t i = 0; i < draws; ++i) {
        const DecompositionSample d = sample_decomposition(*tree("(()())"), rng);
        if (d.c_size == 3) {
            ++three;
        } else {
            CHECK(d.c_size == 1);
            CHECK(d.forest_size_histogram.at(2) == 1);
            CHECK(d.y_count == 2);
        }
    }
    CHECK(std::fabs(three - draws / 2.0) < 3 * std::sqrt(draws * 0.25));
    // Star: c_size 4, 2, 1 with probabilities 1/6, 1/2, 1/3.
    std::size_t c[5] = {0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < draws; ++i) ++c[sample_decomposition(*tree("(()()())"), rng).c_size];
    CHECK(c[0] + c[3] == 0);
    const double p[] = {0, 1.0 / 3, 0.5, 0, 1.0 / 6};
    for (int k : {1, 2, 4}) CHECK(std::fabs(c[k] - draws * p[k]) < 3 * std::sqrt(draws * p[k] * (1 - p[k])));
}

TEST_CASE("c_size law matches t_T(u) for every tree up to size 5") {
    std::uint64_t seed = 100;
    for (std::size_t n = 2; n <= 5; ++n)
        for (const auto& t : enumerate_trees(n)) {
            if (aut_order(*t) == 1) continue;  // a point mass, nothing to test
            CAPTURE(t->encoding());
            CHECK(csize_law(*t, 20000, ++seed).passed);
        }
}

TEST_CASE("per-sample conservation and root fixedness") {
    const PolyaTreeSampler s(300);
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng(sample_seed(17, i));
        const DecompositionSample d = sample_decomposition(s.sample(300, rng), rng);
        CHECK(d.c_size >= 1);
        std::size_t nodes = d.c_size, slots = 0, ymin = 0;
        for (const auto& [m, cnt] : d.forest_size_histogram) {
            nodes += m * cnt;
            slots += cnt;
            if (m > 0) ymin += cnt;
            CHECK(m != 1);
        }
        CHECK(nodes == 300);
        CHECK(slots == d.c_size);
        CHECK(d.y_count >= 2 * ymin);
        CHECK(d.l_max == d.forest_size_histogram.rbegin()->first);
    }
}

TEST_CASE("empirical means agree with the exact moments at n = 40") {
    const std::size_t n = 40, samples = 20000;
    const StatsReport r = run_experiment(n, samples, 2024, 0);
    const RationalSeries t = polya_coeffs(n);
    const Moments c = csize_moments(csize_moment_series(n), t, n);
    const Moments y = ytotal_moments(dtree_count_series(n), t, n);
    const double se_c = std::sqrt(static_cast<double>(to_long_double(c.variance)) / samples);
    const double se_y = std::sqrt(static_cast<double>(to_long_double(y.variance)) / samples);
    CHECK(std::fabs(r.c_size.mean - static_cast<double>(to_long_double(c.mean))) < 3 * se_c);
    CHECK(std::fabs(r.y_count.mean - static_cast<double>(to_long_double(y.mean))) < 3 * se_y);
    CHECK(r.c_size.variance == doctest::Approx(static_cast<double>(to_long_double(c.variance))).epsilon(0.1));
}

TEST_CASE("experiments are deterministic and thread-count independent") {
    const StatsReport a = run_experiment(200, 3000, 77, 1);
    const StatsReport b = run_experiment(200, 3000, 77, 4);
    CHECK(a.c_size.mean == b.c_size.mean);
    CHECK(a.c_size.variance == b.c_size.variance);
    CHECK(a.y_count.variance == b.y_count.variance);
    CHECK(a.forest_size_distribution == b.forest_size_distribution);
    CHECK(a.l_max_counts == b.l_max_counts);
    CHECK(a.seeds == b.seeds);
    CHECK(a.seeds.size() == 3000);
    const StatsReport c = run_experiment(200, 3000, 78, 1);
    CHECK(c.c_size.mean != a.c_size.mean);
}

TEST_CASE("budget and argument checks") {
    CHECK_THROWS_AS(run_experiment(10001, 10, 1), Error);
    CHECK_THROWS_AS(run_experiment(10, 100001, 1), Error);
    CHECK_THROWS_AS(run_experiment(0, 10, 1), Error);
    SamplerBudget small;
    small.max_n = 50;
    CHECK_THROWS_AS(run_experiment(60, 10, 1, 1, small), Error);
    CHECK_THROWS_AS(lmax_check({100}, 10, 0.0, 1), Error);
    CHECK_THROWS_AS(lmax_check({100}, 10, 1.0, 1), Error);
    CHECK_THROWS_AS(lmax_check({}, 10, 0.5, 1), Error);
}

TEST_CASE("lmax at n = 2 is zero and the report is well formed") {
    const LmaxReport r = lmax_check({2, 60}, 200, 0.5, 5, 1);
    REQUIRE(r.rows.size() == 2);
    CHECK(r.rows[0].mean_l_max == 0);
    CHECK(r.rows[1].interval_lo < r.rows[1].location);
    CHECK(r.rows[1].interval_hi > r.rows[1].location);
    CHECK(r.rows[1].exact_mean > 0);
    CHECK(std::fabs(r.growth_constant - 1.845) < 1e-3);
}

TEST_CASE("chi-square helper") {
    const auto ok = chi_square_test({100, 100, 100}, {1.0 / 3, 1.0 / 3, 1.0 / 3});
    CHECK(ok.statistic == 0);
    CHECK(ok.dof == 2);
    CHECK(ok.p_value == doctest::Approx(1.0));
    const auto bad = chi_square_test({300, 0, 0}, {1.0 / 3, 1.0 / 3, 1.0 / 3});
    CHECK_FALSE(bad.passed);
    CHECK_FALSE(chi_square_test({5, 5}, {1.0, 0.0}).passed);
    CHECK_THROWS_AS(chi_square_test({1}, {1.0}), Error);
}

}  // TEST_SUITE
