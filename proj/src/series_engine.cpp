#include "polya/series_engine.hpp"

#include "polya/error.hpp"

#include <cstdlib>
#include <string>

namespace polya {

namespace {

std::size_t env_order(const char* name, std::size_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    const unsigned long long n = std::strtoull(v, &end, 10);
    if (*end != '\0' || n == 0) throw_invalid(std::string(name) + " must be a positive integer");
    return static_cast<std::size_t>(n);
}

void require_order(std::size_t N, std::size_t min, const char* what) {
    if (N < min)
        throw_invalid(std::string(what) + " needs truncation order >= " + std::to_string(min));
}

// sigma[i] = sum_{m | i} sign(i/m) * m * a[m], optionally skipping m = i.
// `alternating` uses sign (-1)^(i/m - 1), as in the identity-tree equation.
template <class T>
std::vector<T> divisor_sums(const std::vector<T>& a, bool proper, bool alternating) {
    const std::size_t N = a.size() - 1;
    std::vector<T> s(N + 1);
    for (std::size_t m = 1; m <= N; ++m) {
        if (a[m] == 0) continue;
        T ma = a[m] * m;
        for (std::size_t q = proper ? 2 : 1; q * m <= N; ++q) {
            if (alternating && q % 2 == 0)
                s[q * m] -= ma;
            else
                s[q * m] += ma;
        }
    }
    return s;
}

// Exact integer division; the recurrences guarantee divisibility.
Integer exact_div(const Integer& num, std::size_t den, const char* what) {
    Integer q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den);
    if (r != 0) throw Error(ErrorKind::CheckFailed, std::string(what) + ": non-integral coefficient");
    return q;
}

BivariateSeries constant_marker(const RationalSeries& f, const std::string& marker) {
    BivariateSeries out(f.order(), marker);
    for (std::size_t n = 0; n <= f.order(); ++n)
        if (f[n] != 0) out[n] = Polynomial::constant(f[n]);
    return out;
}

// exp(sum_{i>=2} sign_i a(z^i)/i) via d_n = (1/n) sum_i d_{n-i} sigma'_i.
RationalSeries multiset_ge2(const std::vector<Integer>& a, bool alternating) {
    const std::size_t N = a.size() - 1;
    const auto s = divisor_sums(a, true, alternating);
    RationalSeries d(N);
    d[0] = 1;
    Rational tmp;
    for (std::size_t n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (std::size_t i = 2; i <= n; ++i) {
            if (s[i] == 0 || d[n - i] == 0) continue;
            tmp = d[n - i] * s[i];
            acc += tmp;
        }
        d[n] = acc / n;
    }
    return d;
}

std::vector<Integer> identity_integers(std::size_t N) {
    std::vector<Integer> r(N + 1);
    if (N >= 1) r[1] = 1;
    // r_n = 1/(n-1) sum_i r_{n-i} sum_{m|i} (-1)^(i/m-1) m r_m
    std::vector<Integer> s(N + 1);
    for (std::size_t n = 2; n <= N; ++n) {
        const std::size_t i_new = n - 1;
        for (std::size_t m = 1; m <= i_new; ++m) {
            if (i_new % m != 0) continue;
            if ((i_new / m) % 2 == 0)
                s[i_new] -= r[m] * m;
            else
                s[i_new] += r[m] * m;
        }
        Integer acc = 0;
        for (std::size_t i = 1; i < n; ++i) acc += r[n - i] * s[i];
        r[n] = exact_div(acc, n - 1, "identity tree recurrence");
    }
    return r;
}

}  // namespace

std::size_t default_order() { return env_order("POLYA_ORDER", 400); }
std::size_t default_bivariate_order() { return env_order("POLYA_BIVARIATE_ORDER", 120); }

std::vector<Integer> polya_integers(std::size_t N) {
    std::vector<Integer> t(N + 1);
    if (N >= 1) t[1] = 1;
    std::vector<Integer> s(N + 1);  // s_i = sum_{m|i} m t_m, filled as t grows
    for (std::size_t n = 2; n <= N; ++n) {
        const std::size_t i_new = n - 1;
        for (std::size_t m = 1; m <= i_new; ++m)
            if (i_new % m == 0) s[i_new] += t[m] * m;
        Integer acc = 0;
        for (std::size_t i = 1; i < n; ++i) acc += t[n - i] * s[i];
        t[n] = exact_div(acc, n - 1, "Polya recurrence");
    }
    return t;
}

RationalSeries polya_coeffs(std::size_t N) {
    require_order(N, 1, "polya_coeffs");
    return from_integers(polya_integers(N), "polya");
}

RationalSeries cayley_coeffs(std::size_t N) {
    require_order(N, 1, "cayley_coeffs");
    RationalSeries c(N, "cayley");
    Integer fact = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        fact *= n;
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), n, n - 1);
        c[n] = Rational(p, fact);
        c[n].canonicalize();
    }
    return c;
}

RationalSeries dforest_coeffs(std::size_t N) {
    RationalSeries d = multiset_ge2(polya_integers(N), false);
    d.set_family("dforest");
    return d;
}

BivariateSeries solve_c_composition(const BivariateSeries& M, bool mark_nodes) {
    const std::size_t N = M.order();
    BivariateSeries X(N, mark_nodes ? "u" : M.marker());
    std::vector<Polynomial> E(N + 1);
    E[0] = Polynomial::constant(1);
    const Polynomial u = Polynomial::monomial(1, 1);
    for (std::size_t n = 1; n <= N; ++n) {
        // E[n-1] only involves X[1..n-1], which are already final.
        if (n >= 2) {
            const std::size_t d = n - 1;
            Polynomial acc;
            for (std::size_t e = 1; e <= d; ++e) {
                if (X[e].is_zero() || E[d - e].is_zero()) continue;
                acc.add_scaled(X[e] * E[d - e], Rational(e));
            }
            acc *= Rational(1, d);
            E[d] = std::move(acc);
        }
        Polynomial p;
        for (std::size_t j = 0; j <= n - 1; ++j) p.add_product(E[j], M[n - 1 - j]);
        X[n] = mark_nodes ? p * u : std::move(p);
    }
    return X;
}

BivariateSeries ctree_polynomials(std::size_t N) {
    require_order(N, 1, "ctree_polynomials");
    BivariateSeries out = solve_c_composition(constant_marker(dforest_coeffs(N), "u"), true);
    out.set_family("ctree-poly");
    return out;
}

RationalSeries pointed_from(const RationalSeries& T) {
    if (T[0] != 0) throw_invalid("T/(1-T) needs T(0) = 0");
    // G = 1/(1-T) = 1 + T G, and T/(1-T) = G - 1.
    const std::size_t N = T.order();
    RationalSeries g(N);
    g[0] = 1;
    Rational tmp;
    for (std::size_t n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (T[i] == 0) continue;
            tmp = T[i] * g[n - i];
            acc += tmp;
        }
        g[n] = acc;
    }
    g[0] = 0;
    return g;
}

RationalSeries pointed_coeffs(std::size_t N) {
    require_order(N, 1, "pointed_coeffs");
    RationalSeries p = pointed_from(polya_coeffs(N));
    p.set_family("pointed");
    return p;
}

RationalSeries forest_size_marked(std::size_t N, std::size_t m) {
    require_order(N, 1, "forest_size_marked");
    const RationalSeries d = dforest_coeffs(N);
    const RationalSeries tc = pointed_from(polya_coeffs(N));
    if (m > N) return RationalSeries(N, "forest-size-marked");
    RationalSeries out = tc * reciprocal(d);
    out = out.shifted(m);
    out *= d[m];
    out.set_family("forest-size-marked");
    return out;
}

BivariateSeries dforest_component_bivariate(std::size_t N) {
    const auto t = polya_integers(N);
    BivariateSeries f(N, "v");
    for (std::size_t i = 2; i <= N; ++i)
        for (std::size_t m = 1; m * i <= N; ++m)
            if (t[m] != 0) f[m * i] += Polynomial::monomial(Rational(t[m]) / i, i);
    BivariateSeries d = exp(f);
    d.set_family("dforest-components");
    return d;
}

BivariateSeries dtree_bivariate(std::size_t N) {
    require_order(N, 1, "dtree_bivariate");
    BivariateSeries out = solve_c_composition(dforest_component_bivariate(N), false);
    out.set_family("dtree-components");
    return out;
}

RationalSeries gamma_series(std::size_t N) {
    const auto t = polya_integers(N);
    RationalSeries g(N, "gamma");
    for (std::size_t i = 2; i <= N; ++i)
        for (std::size_t m = 1; m * i <= N; ++m) g[m * i] += t[m];
    return g;
}

RationalSeries gamma2_series(std::size_t N) {
    const auto t = polya_integers(N);
    RationalSeries g(N, "gamma2");
    for (std::size_t i = 2; i <= N; ++i)
        for (std::size_t m = 1; m * i <= N; ++m) g[m * i] += t[m] * i;
    return g;
}

DTreeCountSeries dtree_count_series(std::size_t N) {
    require_order(N, 2, "dtree_count_series");
    const RationalSeries T = polya_coeffs(N);
    const RationalSeries D = dforest_coeffs(N);
    const RationalSeries g = gamma_series(N);
    const RationalSeries g2 = gamma2_series(N);
    RationalSeries one(N);
    one[0] = 1;
    const RationalSeries inv = reciprocal(one - T);  // 1/(1-T)
    const RationalSeries tc = T * inv;
    DTreeCountSeries out;
    out.forest_mean = D * g;
    out.tree_mean = tc * g;
    out.tree_second = tc * inv * inv * g * g + tc * g2;
    out.forest_mean.set_family("dforest-components-mean");
    out.tree_mean.set_family("dtree-components-mean");
    out.tree_second.set_family("dtree-components-second");
    return out;
}

CSizeMomentSeries csize_moment_series(std::size_t N) {
    require_order(N, 1, "csize_moment_series");
    const RationalSeries T = polya_coeffs(N);
    RationalSeries one(N);
    one[0] = 1;
    const RationalSeries inv = reciprocal(one - T);
    CSizeMomentSeries out;
    out.first = T * inv;
    out.second = out.first * inv * inv;
    out.first.set_family("pointed");
    out.second.set_family("csize-second");
    return out;
}

Moments csize_moments(const CSizeMomentSeries& s, const RationalSeries& t, std::size_t n) {
    if (n == 0 || n > s.first.order() || n > t.order()) throw_invalid("csize_moments: n out of range");
    Moments m;
    m.mean = s.first[n] / t[n];
    m.variance = s.second[n] / t[n] - m.mean * m.mean;
    return m;
}

Moments ytotal_moments(const DTreeCountSeries& s, const RationalSeries& t, std::size_t n) {
    if (n == 0 || n > s.tree_mean.order() || n > t.order())
        throw_invalid("ytotal_moments: n out of range");
    Moments m;
    m.mean = s.tree_mean[n] / t[n];
    m.variance = s.tree_second[n] / t[n] - m.mean * m.mean;
    return m;
}

Rational xforest_mean(const DTreeCountSeries& s, const RationalSeries& d, std::size_t n) {
    if (n > s.forest_mean.order() || n > d.order()) throw_invalid("xforest_mean: n out of range");
    if (d[n] == 0) throw_invalid("E X_n is undefined: no D-forest of size " + std::to_string(n));
    return s.forest_mean[n] / d[n];
}

RationalSeries hierarchy_coeffs(std::size_t N) {
    require_order(N, 1, "hierarchy_coeffs");
    std::vector<Integer> h(N + 1);
    h[1] = 1;
    std::vector<Integer> s(N + 1);  // s_i = sum_{m|i} m h_m
    for (std::size_t n = 3; n <= N; ++n) {
        const std::size_t i_new = n - 2;
        for (std::size_t m = 1; m <= i_new; ++m)
            if (i_new % m == 0) s[i_new] += h[m] * m;
        Integer acc = 0;
        for (std::size_t i = 1; i + 2 <= n; ++i) acc += (h[n - i] + h[n - i - 1]) * s[i];
        for (std::size_t m = 1; m < n - 1; ++m)
            if ((n - 1) % m == 0) acc += h[m] * m;
        h[n] = exact_div(acc, n - 1, "hierarchy recurrence");
    }
    return from_integers(h, "hierarchy");
}

RationalSeries binary_polya_coeffs(std::size_t N) {
    require_order(N, 1, "binary_polya_coeffs");
    std::vector<Integer> b(N + 1);
    b[1] = 1;
    for (std::size_t n = 3; n <= N; n += 2) {
        Integer acc = 0;
        for (std::size_t i = 1; i + 1 < n; ++i) acc += b[i] * b[n - 1 - i];
        acc += b[(n - 1) / 2];
        b[n] = exact_div(acc, 2, "binary recurrence");
    }
    return from_integers(b, "binary");
}

IdentitySeries identity_tree_coeffs(std::size_t N) {
    require_order(N, 1, "identity_tree_coeffs");
    const auto r = identity_integers(N);
    IdentitySeries out;
    out.r = from_integers(r, "identity");
    out.dstar = multiset_ge2(r, true);
    out.dstar.set_family("identity-dforest");
    out.pointed = pointed_from(out.r);
    out.pointed.set_family("identity-pointed");
    if (!out.pointed.all_integers())
        throw Error(ErrorKind::CheckFailed, "R/(1-R) has a non-integer coefficient");
    const RationalSeries check = compose(cayley_coeffs(N), out.dstar.shifted(1));
    if (!(check == out.r))
        throw Error(ErrorKind::CheckFailed, "R(z) differs from C(z D*(z))");
    return out;
}

BivariateSeries identity_ctree_polynomials(std::size_t N) {
    require_order(N, 1, "identity_ctree_polynomials");
    const auto r = identity_integers(N);
    BivariateSeries out = solve_c_composition(constant_marker(multiset_ge2(r, true), "u"), true);
    out.set_family("identity-ctree-poly");
    return out;
}

RationalSeries e_series(std::size_t N) {
    // z E(z) = R^<-1>(C(z)) needs one extra order for the division by z.
    const std::size_t M = N + 1;
    const RationalSeries r = from_integers(identity_integers(M));
    const RationalSeries zE = compose(reversion(r), cayley_coeffs(M));
    RationalSeries e(N, "e-series");
    for (std::size_t n = 0; n <= N; ++n) e[n] = zE[n + 1];
    return e;
}

}  // namespace polya
