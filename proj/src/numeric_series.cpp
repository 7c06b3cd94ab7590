#include "polya/numeric_series.hpp"

#include "polya/error.hpp"

#include <cmath>
#include <limits>

namespace polya {

NumericSeries::NumericSeries(std::vector<long double> coeffs) : a_(std::move(coeffs)) {}

NumericSeries NumericSeries::from(const RationalSeries& s) {
    std::vector<long double> a(s.order() + 1);
    for (std::size_t n = 0; n <= s.order(); ++n) a[n] = to_long_double(s[n]);
    return NumericSeries(std::move(a));
}

long double NumericSeries::eval(long double x, int k) const {
    if (k < 0 || k > 2) throw_invalid("NumericSeries::eval supports derivatives up to order 2");
    long double acc = 0;
    for (std::size_t n = a_.size(); n-- > static_cast<std::size_t>(k);) {
        long double c = a_[n];
        if (k >= 1) c *= static_cast<long double>(n);
        if (k == 2) c *= static_cast<long double>(n - 1);
        acc = acc * x + c;
    }
    return acc;
}

long double NumericSeries::tail_bound(long double x) const {
    const std::size_t N = order();
    if (N < 2) return std::numeric_limits<long double>::infinity();
    // Use the last nonzero pair with the same parity pattern as the series.
    std::size_t hi = N;
    while (hi > 0 && a_[hi] == 0) --hi;
    std::size_t lo = hi;
    while (lo > 0 && a_[--lo] == 0) {
    }
    if (lo == 0 || a_[lo] == 0 || hi == lo) return std::numeric_limits<long double>::infinity();
    const long double r = std::pow(std::fabs(a_[hi] / a_[lo]), 1.0L / static_cast<long double>(hi - lo));
    const long double q = r * std::fabs(x);
    if (q >= 1) return std::numeric_limits<long double>::infinity();
    return std::fabs(a_[hi]) * std::pow(std::fabs(x), static_cast<long double>(hi)) * q / (1 - q);
}

std::vector<long double> scaled_polya_counts(std::size_t n, long double x) {
    if (!(x > 0)) throw_invalid("scaled_polya_counts needs x > 0");
    std::vector<long double> tau(n + 1, 0.0L), xp(n + 1, 1.0L), s(n + 1, 0.0L);
    for (std::size_t k = 1; k <= n; ++k) xp[k] = xp[k - 1] * x;
    if (n >= 1) tau[1] = x;
    // s_i = x^i sum_{m|i} m t_m = sum_{m|i} m tau_m x^(i-m)
    for (std::size_t k = 2; k <= n; ++k) {
        const std::size_t i_new = k - 1;
        for (std::size_t m = 1; m <= i_new; ++m)
            if (i_new % m == 0) s[i_new] += static_cast<long double>(m) * tau[m] * xp[i_new - m];
        long double acc = 0;
        for (std::size_t i = 1; i < k; ++i) acc += tau[k - i] * s[i];
        tau[k] = acc / static_cast<long double>(k - 1);
    }
    return tau;
}

}  // namespace polya
