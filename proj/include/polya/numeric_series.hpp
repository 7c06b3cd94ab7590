#pragma once

#include "polya/rational_series.hpp"

#include <cstddef>
#include <vector>

namespace polya {

/// Truncated power series with long double coefficients, evaluated inside its
/// radius of convergence.
class NumericSeries {
public:
    NumericSeries() = default;
    explicit NumericSeries(std::vector<long double> coeffs);
    static NumericSeries from(const RationalSeries& s);

    std::size_t order() const { return a_.empty() ? 0 : a_.size() - 1; }
    long double operator[](std::size_t n) const { return a_[n]; }

    /// k-th derivative (k = 0, 1, 2) of the truncation at x.
    long double eval(long double x, int k = 0) const;

    /// Geometric bound on the neglected tail sum_{n>N} |a_n x^n|, using the
    /// growth ratio r = a_N / a_{N-1} of the last coefficients:
    /// a_N |x|^N q / (1 - q) with q = r |x|. Infinity if q >= 1.
    long double tail_bound(long double x) const;

private:
    std::vector<long double> a_;
};

/// t_k x^k for k = 0..n, from the Polya recurrence run in floating point.
/// All terms are positive, so the recurrence is numerically stable; with x
/// near the singularity the values stay in range for n up to 10^4 and beyond.
std::vector<long double> scaled_polya_counts(std::size_t n, long double x);

/// sum_{i >= from} term(i, x^i), stopping once |x^i| < 1e-40 or after
/// max_terms terms.
template <class Term>
long double power_sum(long double x, std::size_t from, std::size_t max_terms, Term term) {
    long double acc = 0;
    long double xi = 1;
    for (std::size_t i = 1; i < from; ++i) xi *= x;
    for (std::size_t i = from; i < from + max_terms; ++i) {
        xi *= x;
        if (xi == 0 || (xi < 0 ? -xi : xi) < 1e-40L) break;
        acc += term(i, xi);
    }
    return acc;
}

}  // namespace polya
