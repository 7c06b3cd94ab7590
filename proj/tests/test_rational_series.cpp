#include <doctest.h>

#include "polya/bivariate_series.hpp"
#include "polya/error.hpp"
#include "polya/polynomial.hpp"
#include "polya/rational_series.hpp"

using namespace polya;

namespace {

RationalSeries series(std::initializer_list<Rational> c) { return RationalSeries(std::vector<Rational>(c)); }

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

TEST_SUITE("rational_series") {

TEST_CASE("rationals stay in lowest terms and print as p/q") {
    const Rational a(6, 8);
    Rational b = a;
    b.canonicalize();
    CHECK(to_string(b) == "3/4");
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK(derangements(4) == 9);
    CHECK(factorial(5) == 120);
}

TEST_CASE("products truncate at the smaller order") {
    const RationalSeries a = series({1, 1, 1, 1});
    const RationalSeries b = series({1, -1, 0});
    const RationalSeries p = a * b;
    CHECK(p.order() == 2);
    CHECK(p[0] == 1);
    CHECK(p[1] == 0);
    CHECK(p[2] == 0);
}

TEST_CASE("exp of z gives 1/n!") {
    RationalSeries z(12);
    z[1] = 1;
    const RationalSeries e = exp(z);
    for (unsigned n = 0; n <= 12; ++n) CHECK(e[n] == Rational(1) / Rational(factorial(n)));
    RationalSeries bad(3);
    bad[0] = 1;
    CHECK_THROWS_AS(exp(bad), Error);
}

TEST_CASE("reciprocal of 1 - z - z^2 gives Fibonacci numbers") {
    const RationalSeries f = reciprocal(series({1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0}));
    const long fib[] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
    for (std::size_t n = 0; n <= 10; ++n) CHECK(f[n] == fib[n]);
    CHECK_THROWS_AS(reciprocal(series({0, 1})), Error);
}

TEST_CASE("reversion of z - z^2 gives Catalan numbers") {
    RationalSeries f(15);
    f[1] = 1;
    f[2] = -1;
    const RationalSeries g = reversion(f);
    for (unsigned n = 1; n <= 15; ++n) CHECK(g[n] == Rational(binomial(2 * (n - 1), n - 1)) / (n));
    const RationalSeries back = compose(f, g);
    CHECK(back[1] == 1);
    for (std::size_t n = 2; n <= 15; ++n) CHECK(back[n] == 0);
}

TEST_CASE("compose 1/(1-z) with z/(1+z) is 1 + z") {
    RationalSeries geo(10), h(10);
    for (std::size_t n = 0; n <= 10; ++n) geo[n] = 1;
    for (std::size_t n = 1; n <= 10; ++n) h[n] = (n % 2) ? 1 : -1;
    const RationalSeries c = compose(geo, h);
    CHECK(c[0] == 1);
    CHECK(c[1] == 1);
    for (std::size_t n = 2; n <= 10; ++n) CHECK(c[n] == 0);
    RationalSeries shifted_h = h;
    shifted_h[0] = 1;
    CHECK_THROWS_AS(compose(geo, shifted_h), Error);
}

TEST_CASE("substitute_power, shifted, derivative and valuation") {
    const RationalSeries a = series({1, 2, 3, 4, 5});
    const RationalSeries sq = a.substitute_power(2);
    CHECK(sq[0] == 1);
    CHECK(sq[1] == 0);
    CHECK(sq[2] == 2);
    CHECK(sq[4] == 3);
    const RationalSeries sh = a.shifted(2);
    CHECK(sh[2] == 1);
    CHECK(sh[4] == 3);
    CHECK(a.derivative().order() == 3);
    CHECK(a.derivative()[3] == 20);
    CHECK(sh.valuation() == 2);
    CHECK(RationalSeries(4).valuation() == 5);
    CHECK_THROWS_AS(a.at(5), Error);
    CHECK_THROWS_AS(a.truncated(9), Error);
}

TEST_CASE("polynomial arithmetic and evaluation") {
    const Polynomial p{0, 1, 1};  // u + u^2
    const Polynomial q{1, -1};    // 1 - u
    const Polynomial pq = p * q;  // u - u^3
    CHECK(pq.degree() == 3);
    CHECK(pq.coeff(1) == 1);
    CHECK(pq.coeff(2) == 0);
    CHECK(pq.coeff(3) == -1);
    CHECK(pq.evaluate(2) == -6);
    CHECK(p.derivative_at_one() == 3);
    CHECK((p - p).is_zero());
    CHECK(Polynomial{Rational(3, 2), 0, 0, Rational(1, 2)}.to_string() == "1/2*u^3 + 3/2");
}

TEST_CASE("bivariate exp of v z is exp in both variables") {
    BivariateSeries f(8, "v");
    f[1] = Polynomial{0, 1};
    const BivariateSeries e = exp(f);
    for (unsigned n = 0; n <= 8; ++n) CHECK(e[n] == Polynomial::monomial(Rational(1) / Rational(factorial(n)), n));
    const RationalSeries at_one = e.evaluate_marker(1);
    CHECK(at_one[3] == Rational(1, 6));
    const RationalSeries d = e.marker_derivative_at_one();
    CHECK(d[3] == Rational(1, 2));
    CHECK(e.max_marker_degree() == 8);
}

}  // TEST_SUITE
