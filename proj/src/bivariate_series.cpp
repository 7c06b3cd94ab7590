#include "polya/bivariate_series.hpp"

#include "polya/error.hpp"

#include <algorithm>

namespace polya {

BivariateSeries::BivariateSeries(std::size_t order, std::string marker, std::string family)
    : coeffs_(order + 1), marker_(std::move(marker)), family_(std::move(family)) {}

const Polynomial& BivariateSeries::at(std::size_t n) const {
    if (n >= coeffs_.size())
        throw_invalid("coefficient index " + std::to_string(n) + " beyond truncation order " +
                      std::to_string(order()));
    return coeffs_[n];
}

RationalSeries BivariateSeries::evaluate_marker(const Rational& value) const {
    RationalSeries out(order(), family_);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) out[n] = coeffs_[n].evaluate(value);
    return out;
}

RationalSeries BivariateSeries::marker_derivative_at_one() const {
    RationalSeries out(order());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) out[n] = coeffs_[n].derivative_at_one();
    return out;
}

std::size_t BivariateSeries::max_marker_degree() const {
    std::size_t d = 0;
    for (const auto& p : coeffs_) d = std::max(d, p.degree());
    return d;
}

BivariateSeries exp(const BivariateSeries& f) {
    if (!f[0].is_zero()) throw_invalid("exp of a bivariate series needs F[0] = 0");
    BivariateSeries e(f.order(), f.marker());
    e[0] = Polynomial::constant(1);
    for (std::size_t n = 1; n <= f.order(); ++n) {
        Polynomial acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (f[k].is_zero() || e[n - k].is_zero()) continue;
            Polynomial term = f[k] * e[n - k];
            acc.add_scaled(term, Rational(k));
        }
        acc *= Rational(1, n);
        e[n] = std::move(acc);
    }
    return e;
}

}  // namespace polya
