#include "polya/asymptotics.hpp"

#include "polya/error.hpp"
#include "polya/numeric_series.hpp"
#include "polya/series_engine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace polya {

namespace {

constexpr long double kE = std::numbers::e_v<long double>;
constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr std::size_t kStartOrder = 100;
constexpr std::size_t kOrderStep = 50;
constexpr std::size_t kMaxOrder = 1000;
constexpr std::size_t kMaxPowerTerms = 200;

void check_tol(double tol) {
    if (!(tol >= 1e-12 && tol < 1)) throw_invalid("tolerance must lie in [1e-12, 1)");
}

// Bisection down to a narrow bracket, then safeguarded secant steps.
long double find_root(const std::function<long double(long double)>& f, long double lo, long double hi) {
    long double flo = f(lo), fhi = f(hi);
    if (!(flo < 0 && fhi > 0) && !(flo > 0 && fhi < 0))
        throw_numeric("root is not bracketed by [" + std::to_string(static_cast<double>(lo)) + ", " +
                      std::to_string(static_cast<double>(hi)) + "]");
    const bool increasing = flo < 0;
    while (hi - lo > 1e-6L) {
        const long double mid = (lo + hi) / 2;
        const long double fm = f(mid);
        if ((fm < 0) == increasing) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    long double x0 = lo, x1 = hi, f0 = flo, f1 = fhi;
    for (int it = 0; it < 100; ++it) {
        if (f1 == f0) break;
        long double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!(x2 > lo && x2 < hi)) x2 = (lo + hi) / 2;
        const long double f2 = f(x2);
        if ((f2 < 0) == increasing) lo = x2; else hi = x2;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
        if (f2 == 0 || std::fabs(x1 - x0) < 1e-19L) break;
    }
    return x1;
}

// Numerical state of the Polya family at one truncation order.
struct PolyaFit {
    std::size_t N = 0;
    NumericSeries T;
    long double rho = 0;
    long double tail = 0;

    explicit PolyaFit(std::size_t order) : N(order), T(NumericSeries::from(polya_coeffs(order))) {
        rho = find_root([this](long double x) { return std::log(x) + log_d(x, 0) + 1; }, 0.2L, 0.45L);
        tail = T.tail_bound(rho * rho);
    }

    // k-th derivative of log D(x) = sum_{i>=2} T(x^i)/i.
    long double log_d(long double x, int k) const {
        return power_sum(x, 2, kMaxPowerTerms, [&](std::size_t i, long double xi) -> long double {
            const long double li = static_cast<long double>(i);
            if (k == 0) return T.eval(xi) / li;
            const long double xim1 = xi / x;
            if (k == 1) return xim1 * T.eval(xi, 1);
            return (li - 1) * (xim1 / x) * T.eval(xi, 1) + li * xim1 * xim1 * T.eval(xi, 2);
        });
    }

    long double D() const { return std::exp(log_d(rho, 0)); }
    long double Dprime() const { return D() * log_d(rho, 1); }
    long double b2() const { return 2 * kE * (D() + rho * Dprime()); }

    // sum_{i>=from} w_i T(z^i) for real z, with w_i = 1, i, or 1/i.
    long double tsum(long double z, std::size_t from, int weight) const {
        return power_sum(z, from, kMaxPowerTerms, [&](std::size_t i, long double zi) -> long double {
            const long double v = T.eval(zi);
            const long double li = static_cast<long double>(i);
            return weight == 0 ? v : weight == 1 ? li * v : v / li;
        });
    }
    long double gamma_prime(long double z) const {
        return power_sum(z, 2, kMaxPowerTerms, [&](std::size_t i, long double zi) -> long double {
            return static_cast<long double>(i) * (zi / z) * T.eval(zi, 1);
        });
    }
};

// Fits at increasing order until rho and b settle within tol.
struct PolyaSolve {
    PolyaFit fit;
    long double delta = 0;
    bool converged = false;
};

PolyaSolve solve_polya(double tol) {
    check_tol(tol);
    PolyaFit prev(kStartOrder);
    for (std::size_t N = kStartOrder + kOrderStep;; N += kOrderStep) {
        PolyaFit cur(N);
        const long double delta = std::max(std::fabs(cur.rho - prev.rho),
                                           std::fabs(std::sqrt(cur.b2()) - std::sqrt(prev.b2())));
        if ((delta < tol && cur.tail < tol) || N + kOrderStep > kMaxOrder)
            return PolyaSolve{std::move(cur), delta, delta < tol && cur.tail < tol};
        prev = std::move(cur);
    }
}

void fill_base(SingularityReport& r, const PolyaSolve& s, double tol) {
    const PolyaFit& f = s.fit;
    const long double b2 = f.b2();
    r.rho = static_cast<double>(f.rho);
    r.b = static_cast<double>(std::sqrt(b2));
    r.c = static_cast<double>(b2 / 3);
    r.precision = tol;
    r.truncation_order_used = f.N;
    r.refinement_delta = static_cast<double>(s.delta);
    r.tail_bound = static_cast<double>(f.tail);
    r.converged = s.converged;
    if (!s.converged) r.notes.push_back("truncation refinement did not reach the requested tolerance");
}

void add(SingularityReport& r, const std::string& name, long double v) {
    r.derived.push_back({name, static_cast<double>(v)});
}

}  // namespace

std::optional<double> SingularityReport::get(const std::string& name) const {
    for (const auto& v : derived)
        if (v.name == name) return v.value;
    return std::nullopt;
}

double SingularityReport::at(const std::string& name) const {
    const auto v = get(name);
    if (!v) throw_invalid("report has no value named '" + name + "'");
    return *v;
}

SingularityReport solve_polya_singularity(double tol) {
    const PolyaSolve s = solve_polya(tol);
    const PolyaFit& f = s.fit;
    SingularityReport r;
    r.family = "polya";
    fill_base(r, s, tol);
    const long double D = f.D(), Dp = f.Dprime(), b2 = f.b2();
    add(r, "D_rho", D);
    add(r, "Dprime_rho", Dp);
    add(r, "rho_D_rho_e", f.rho * D * kE);
    add(r, "Dprime_identity_residual", Dp - (b2 * f.rho / 2 - 1) / (kE * f.rho * f.rho));
    return r;
}

SingularityReport dforest_constants(double tol) {
    const PolyaSolve s = solve_polya(tol);
    const PolyaFit& f = s.fit;
    SingularityReport r;
    r.family = "dforest";
    fill_base(r, s, tol);
    const long double rho = f.rho, sr = std::sqrt(rho);
    const long double D = f.D(), Dp = f.Dprime(), b2 = f.b2();
    add(r, "D_rho", D);
    add(r, "Dprime_rho", Dp);
    add(r, "D_rho_times_e_rho", D * kE * rho);
    add(r, "Dprime_identity_residual", Dp - (b2 * rho / 2 - 1) / (kE * rho * rho));
    add(r, "xi_plus", std::exp(f.tsum(sr, 3, 2)));
    add(r, "xi_minus", std::exp(f.tsum(-sr, 3, 2)));
    add(r, "gamma_rho", f.tsum(rho, 2, 0));
    add(r, "gammaprime_rho", f.gamma_prime(rho));
    add(r, "gamma2_rho", f.tsum(rho, 2, 1));
    r.tail_bound = std::max(r.tail_bound, static_cast<double>(f.T.tail_bound(std::pow(rho, 1.5L))));
    return r;
}

SingularityReport decomposition_constants(double tol) {
    const PolyaSolve s = solve_polya(tol);
    const PolyaFit& f = s.fit;
    SingularityReport r;
    r.family = "decomposition";
    fill_base(r, s, tol);
    const long double rho = f.rho, sr = std::sqrt(rho);
    const long double D = f.D(), b2 = f.b2();

    add(r, "csize_mean_coefficient", 2 / (b2 * rho));
    add(r, "mean_forest_size", b2 * rho / 2 - 1);

    // rho(v) solves g(z, v) = log z + log D(z, v) + 1 = 0; with mu = -rho'/rho
    // the variance coefficient is -rho''/rho + mu + mu^2.
    const long double gz = b2 / 2;
    const long double gzz = f.log_d(rho, 2) - 1 / (rho * rho);
    auto variance = [&](long double gv, long double gvv, long double gzv) {
        const long double r1 = -gv / gz;
        const long double r2 = -(gvv + 2 * gzv * r1 + gzz * r1 * r1) / gz;
        const long double mu = -r1 / rho;
        return -r2 / rho + mu + mu * mu;
    };
    add(r, "csize_variance_coefficient", variance(1, -1, 0));
    add(r, "csize_variance_coefficient_stated", 11 / (12 * b2 * rho));

    const long double gam = f.tsum(rho, 2, 0);
    const long double gam2 = f.tsum(rho, 2, 1);
    const long double gamp = f.gamma_prime(rho);
    add(r, "gamma_rho", gam);
    add(r, "ytotal_mean_coefficient", 2 * gam / (b2 * rho));
    add(r, "ytotal_variance_coefficient", variance(gam, gam2 - gam, gamp));

    // The T(z^2) part of gamma contributes the constant 3, so mu_0 and mu_1
    // only involve sum_{i>=3} T(z^i).
    const long double xp = std::exp(f.tsum(sr, 3, 2)), xm = std::exp(f.tsum(-sr, 3, 2));
    const long double gp = f.tsum(sr, 3, 0), gm = f.tsum(-sr, 3, 0);
    const long double mu0 = (xp * gp + xm * gm) / (xp + xm);
    const long double mu1 = (xp * gp - xm * gm) / (xp - xm);
    add(r, "mu0", mu0);
    add(r, "mu1", mu1);
    add(r, "xforest_mean_even", 3 + mu0);
    add(r, "xforest_mean_odd", 3 + mu1);

    add(r, "lmax_location", -2 / std::log(rho));
    add(r, "lmax_loglog_coefficient", -3 / std::log(rho));

    const std::size_t M = 9;
    const RationalSeries d = dforest_coeffs(M);
    NamedTable t1{"forest_size", {}}, t2{"forest_size_conditional", {}};
    long double rp = 1;
    for (std::size_t m = 0; m <= M; ++m) {
        const long double w = to_long_double(d[m]) * rp;
        t1.values.push_back(static_cast<double>(w / D));
        t2.values.push_back(m >= 2 ? static_cast<double>(w / (D - 1)) : 0.0);
        rp *= rho;
    }
    r.tables = {t1, t2};
    r.tail_bound = std::max(r.tail_bound, static_cast<double>(f.T.tail_bound(std::pow(rho, 1.5L))));
    return r;
}

SingularityReport solve_variant_singularity(Variant family, double tol) {
    check_tol(tol);
    SingularityReport r;
    r.family = family == Variant::Hierarchy ? "hierarchy" : "binary";
    r.precision = tol;

    struct Fit {
        long double tau = 0, mu = 0, mu_general = 0, b1 = 0, tail = 0, residual = 0;
        NumericSeries A;
    };
    auto fit = [&](std::size_t N) {
        Fit out;
        if (family == Variant::Hierarchy) {
            out.A = NumericSeries::from(hierarchy_coeffs(N));
            const NumericSeries& A = out.A;
            auto logE = [&](long double x, int k) {
                return power_sum(x, 2, kMaxPowerTerms, [&](std::size_t i, long double xi) -> long double {
                    return k == 0 ? A.eval(xi) / static_cast<long double>(i) : (xi / x) * A.eval(xi, 1);
                });
            };
            // A(tau) = 1 and A = z/(1+z) e^A E(z) give tau/(1+tau) e E(tau) = 1.
            out.tau = find_root(
                [&](long double x) { return std::log(x / (1 + x)) + 1 + logE(x, 0); }, 0.3L, 0.55L);
            const long double t = out.tau;
            const long double E = std::exp(logE(t, 0)), Ep = E * logE(t, 1);
            out.mu = t * t * kE * Ep;
            out.mu_general = out.mu;
            out.residual = t / (1 + t) * kE * E - 1;
            const long double Fz = kE * (E / ((1 + t) * (1 + t)) + t * Ep / (1 + t));
            out.b1 = std::sqrt(2 * Fz);
            out.tail = A.tail_bound(t * t);
        } else {
            out.A = NumericSeries::from(binary_polya_coeffs(N));
            const NumericSeries& A = out.A;
            // F = z + z y^2/2 + z A(z^2)/2 with F_y = z y = 1 at the singularity.
            out.tau = find_root([&](long double x) { return x * x * (2 + A.eval(x * x)) - 1; }, 0.5L, 0.7L);
            const long double t = out.tau, t2 = t * t;
            out.mu = t2 * t * (1 + t * A.eval(t2, 1));
            // (tau^2 / A(tau)) d/dx Z(S_2; A(tau), A(x^2)) at x = tau, with A(tau) = 1/tau.
            out.mu_general = t2 * t2 * A.eval(t2, 1);
            out.residual = t2 * (2 + A.eval(t2)) - 1;
            const long double y = 1 / t;
            const long double Fz = 1 + y * y / 2 + A.eval(t2) / 2 + t2 * A.eval(t2, 1);
            out.b1 = std::sqrt(2 * Fz / t);
            out.tail = A.tail_bound(t2);
        }
        return out;
    };

    Fit prev = fit(kStartOrder);
    Fit cur;
    std::size_t N = kStartOrder;
    long double delta = 0;
    for (;;) {
        N += kOrderStep;
        cur = fit(N);
        delta = std::max({std::fabs(cur.tau - prev.tau), std::fabs(cur.mu - prev.mu), std::fabs(cur.b1 - prev.b1)});
        if ((delta < tol && cur.tail < tol) || N + kOrderStep > kMaxOrder) break;
        prev = std::move(cur);
    }
    r.rho = static_cast<double>(cur.tau);
    r.b = static_cast<double>(cur.b1);
    r.truncation_order_used = N;
    r.refinement_delta = static_cast<double>(delta);
    r.tail_bound = static_cast<double>(cur.tail);
    r.converged = delta < tol && cur.tail < tol;
    if (!r.converged) r.notes.push_back("truncation refinement did not reach the requested tolerance");
    add(r, "tau", cur.tau);
    add(r, "mu", cur.mu);
    add(r, "mu_general", cur.mu_general);
    add(r, "csize_mean_coefficient", 1 / (1 + cur.mu_general));
    add(r, "b1", cur.b1);
    const long double t = cur.tau;
    add(r, "equation_residual", cur.residual);

    // Independent checks from exact coefficients: a_n against the square-root
    // law, and the increment of the exact mean of fixed nodes.
    const std::size_t n1 = 150, n2 = 300;
    const std::size_t n_check = family == Variant::Binary ? n2 + 1 : n2;
    const OmegaSet omega = family == Variant::Hierarchy ? OmegaSet::all_except({1}) : OmegaSet::finite({0, 2});
    const RationalSeries a = omega_polya_coeffs(omega, n_check);
    const RationalSeries m = omega_ctree_mean_series(omega, n_check);
    const long double periods = family == Variant::Binary ? 2 : 1;
    const long double law = periods * cur.b1 * std::sqrt(t) / (2 * std::sqrt(kPi)) *
                            std::pow(static_cast<long double>(n_check), -1.5L) *
                            std::pow(t, -static_cast<long double>(n_check));
    add(r, "coefficient_law_ratio", to_long_double(a[n_check]) / law);
    const std::size_t k1 = family == Variant::Binary ? n1 + 1 : n1;
    const std::size_t k2 = n_check;
    const long double e1 = to_long_double(m[k1] / a[k1]);
    const long double e2 = to_long_double(m[k2] / a[k2]);
    add(r, "exact_mean_increment", (e2 - e1) / static_cast<long double>(k2 - k1));

    // Root of the truncated equation A_N(x) = 1, which converges slowly in N.
    const long double naive = find_root(
        [&](long double x) {
            return family == Variant::Hierarchy ? cur.A.eval(x) - 1 : x * cur.A.eval(x) - 1;
        },
        0.3L, 0.9L);
    add(r, "truncated_series_root", naive);
    return r;
}

double dn_asymptotic(std::size_t n, const SingularityReport& dforest) {
    const long double rho = dforest.rho, b = dforest.b;
    const long double xp = dforest.at("xi_plus"), xm = dforest.at("xi_minus");
    const long double nn = static_cast<long double>(n);
    const long double sign = n % 2 == 0 ? 1 : -1;
    return static_cast<double>((xp + sign * xm) * b * std::sqrt(rho * kE / (8 * kPi)) *
                               std::pow(rho, -nn / 2) / std::sqrt(nn * nn * nn));
}

std::vector<DnCheck> dn_asymptotic_check(std::size_t n_lo, std::size_t n_hi, double tol) {
    if (n_lo < 2 || n_hi < n_lo) throw_invalid("dn check needs 2 <= n_lo <= n_hi");
    const SingularityReport rep = dforest_constants(tol);
    const RationalSeries d = dforest_coeffs(n_hi);
    std::vector<DnCheck> out;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        DnCheck c;
        c.n = n;
        c.exact = static_cast<double>(to_long_double(d[n]));
        c.asymptotic = dn_asymptotic(n, rep);
        c.ratio = c.exact / c.asymptotic;
        out.push_back(c);
    }
    return out;
}

ForestTable forest_size_table(bool conditional, std::size_t m_max, std::size_t n_exact, double tol) {
    if (n_exact < 2) throw_invalid("exact table needs n >= 2");
    if (n_exact > 2000) throw_limit("exact table supports n <= 2000");
    if (m_max > n_exact) throw_invalid("m_max must not exceed n");
    const SingularityReport c = dforest_constants(tol);
    const long double rho = c.rho, D = c.at("D_rho");
    const std::size_t N = n_exact;
    const RationalSeries d = dforest_coeffs(N);
    // [z^n] T/(1-T) d_m z^m / D(z) = d_m [z^(n-m)] base
    const RationalSeries tc = pointed_from(polya_coeffs(N));
    const RationalSeries base = tc * reciprocal(d);
    const Rational total = tc[N];

    ForestTable out;
    out.which = conditional ? "forest-size-conditional" : "forest-size";
    out.n_exact = N;
    std::vector<Rational> exact(m_max + 1);
    for (std::size_t m = 0; m <= m_max; ++m) exact[m] = d[m] * base[N - m] / total;
    const Rational big = 1 - (d[0] * base[N] + d[1] * base[N - 1]) / total;
    long double rp = 1;
    for (std::size_t m = 0; m <= m_max; ++m) {
        ForestTableRow row;
        row.m = m;
        const long double w = to_long_double(d[m]) * rp;
        if (!conditional) {
            row.asymptotic = static_cast<double>(w / D);
            row.exact = static_cast<double>(to_long_double(exact[m]));
        } else if (m >= 2) {
            row.asymptotic = static_cast<double>(w / (D - 1));
            row.exact = static_cast<double>(to_long_double(exact[m] / big));
        }
        out.rows.push_back(row);
        rp *= rho;
    }
    return out;
}

std::vector<double> lmax_cdf(std::size_t n, std::size_t m_max) {
    if (n < 1 || n > 10000) throw_limit("lmax_cdf supports 1 <= n <= 10000");
    const long double x = solve_polya_singularity(1e-12).rho;
    const std::vector<long double> tau = scaled_polya_counts(n, x);
    const std::size_t mm = std::min(m_max, n);
    const RationalSeries d = dforest_coeffs(std::max<std::size_t>(mm, 1));
    std::vector<long double> dscaled(mm + 1);
    long double xp = 1;
    for (std::size_t k = 0; k <= mm; ++k) {
        dscaled[k] = to_long_double(d[k]) * xp;
        xp *= x;
    }
    std::vector<double> cdf(m_max + 1, 1.0);
    std::vector<long double> Y(n + 1), E(n + 1);
    for (std::size_t m = 0; m <= mm; ++m) {
        // Y = w e^Y with w = x z D_{<=m}(z), everything scaled by z -> x z.
        std::fill(Y.begin(), Y.end(), 0.0L);
        std::fill(E.begin(), E.end(), 0.0L);
        E[0] = 1;
        for (std::size_t k = 1; k <= n; ++k) {
            if (k >= 2) {
                const std::size_t dd = k - 1;
                long double acc = 0;
                for (std::size_t e = 1; e <= dd; ++e) acc += static_cast<long double>(e) * Y[e] * E[dd - e];
                E[dd] = acc / static_cast<long double>(dd);
            }
            long double y = 0;
            for (std::size_t j = 0; j <= std::min(m, k - 1); ++j) y += x * dscaled[j] * E[k - 1 - j];
            Y[k] = y;
        }
        cdf[m] = static_cast<double>(std::min(1.0L, Y[n] / tau[n]));
    }
    return cdf;
}

}  // namespace polya
