#include "polya/rational_series.hpp"

#include "polya/error.hpp"

#include <algorithm>

namespace polya {

RationalSeries::RationalSeries(std::size_t order, std::string family)
    : coeffs_(order + 1), family_(std::move(family)) {}

RationalSeries::RationalSeries(std::vector<Rational> coeffs, std::string family)
    : coeffs_(std::move(coeffs)), family_(std::move(family)) {
    if (coeffs_.empty()) throw_invalid("a series needs at least the constant coefficient");
}

const Rational& RationalSeries::at(std::size_t n) const {
    if (n >= coeffs_.size())
        throw_invalid("coefficient index " + std::to_string(n) + " beyond truncation order " +
                      std::to_string(order()));
    return coeffs_[n];
}

std::size_t RationalSeries::valuation() const {
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        if (coeffs_[n] != 0) return n;
    return coeffs_.size();
}

RationalSeries RationalSeries::truncated(std::size_t order) const {
    if (order > this->order())
        throw_invalid("cannot extend a series from order " + std::to_string(this->order()) +
                      " to " + std::to_string(order));
    return RationalSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1),
                          family_);
}

RationalSeries RationalSeries::substitute_power(std::size_t k) const {
    if (k == 0) throw_invalid("substitute_power needs k >= 1");
    RationalSeries out(order());
    for (std::size_t n = 0; n * k <= order(); ++n) out.coeffs_[n * k] = coeffs_[n];
    return out;
}

RationalSeries RationalSeries::shifted(std::size_t k) const {
    RationalSeries out(order());
    for (std::size_t n = 0; n + k <= order(); ++n) out.coeffs_[n + k] = coeffs_[n];
    return out;
}

RationalSeries RationalSeries::derivative() const {
    if (order() == 0) return RationalSeries(0);
    RationalSeries out(order() - 1);
    for (std::size_t n = 1; n <= order(); ++n) out.coeffs_[n - 1] = coeffs_[n] * n;
    return out;
}

bool RationalSeries::all_integers() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return is_integer(q); });
}

bool RationalSeries::all_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return sgn(q) >= 0; });
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& other) {
    if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
    return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& other) {
    if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
    return *this;
}

RationalSeries& RationalSeries::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    RationalSeries out(order);
    Rational tmp;
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (b.coeffs_[j] == 0) continue;
            tmp = a.coeffs_[i] * b.coeffs_[j];
            out.coeffs_[i + j] += tmp;
        }
    }
    return out;
}

RationalSeries exp(const RationalSeries& f) {
    if (f[0] != 0) throw_invalid("exp of a series needs a zero constant term");
    const std::size_t order = f.order();
    RationalSeries e(order);
    e[0] = 1;
    Rational tmp;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (f[k] == 0 || e[n - k] == 0) continue;
            tmp = f[k] * e[n - k];
            tmp *= k;
            acc += tmp;
        }
        e[n] = acc / n;
    }
    return e;
}

RationalSeries reciprocal(const RationalSeries& f) {
    if (f[0] == 0) throw_invalid("reciprocal of a series needs a nonzero constant term");
    const std::size_t order = f.order();
    RationalSeries r(order);
    const Rational inv0 = 1 / f[0];
    r[0] = inv0;
    Rational tmp;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (f[k] == 0) continue;
            tmp = f[k] * r[n - k];
            acc += tmp;
        }
        r[n] = -acc * inv0;
    }
    return r;
}

RationalSeries compose(const RationalSeries& f, const RationalSeries& g) {
    if (g[0] != 0) throw_invalid("compose(f, g) needs g(0) = 0");
    const std::size_t order = std::min(f.order(), g.order());
    const RationalSeries inner = g.truncated(order);
    RationalSeries out(order);
    out[0] = f[0];
    if (order == 0) return out;
    // Powers of g have valuation >= k, so at most `order` of them matter.
    RationalSeries power = inner;
    for (std::size_t k = 1; k <= order; ++k) {
        if (power.valuation() > order) break;
        if (f[k] != 0) {
            Rational tmp;
            for (std::size_t n = power.valuation(); n <= order; ++n) {
                if (power[n] == 0) continue;
                tmp = f[k] * power[n];
                out[n] += tmp;
            }
        }
        if (k < order) power = power * inner;
    }
    return out;
}

RationalSeries reversion(const RationalSeries& f) {
    if (f.order() < 1 || f[0] != 0 || f[1] == 0)
        throw_invalid("reversion needs f(0) = 0 and f'(0) != 0");
    const std::size_t order = f.order();
    // Lagrange: [z^n] g = (1/n) [z^(n-1)] (z / f(z))^n.
    RationalSeries f_over_z(order - 1);
    for (std::size_t n = 0; n + 1 <= order; ++n) f_over_z[n] = f[n + 1];
    const RationalSeries phi = reciprocal(f_over_z);
    RationalSeries out(order);
    RationalSeries power = phi;
    for (std::size_t n = 1; n <= order; ++n) {
        out[n] = power[n - 1] / n;
        if (n < order) power = power * phi;
    }
    return out;
}

RationalSeries from_integers(const std::vector<Integer>& values, std::string family) {
    std::vector<Rational> c;
    c.reserve(values.size());
    for (const auto& v : values) c.emplace_back(v);
    return RationalSeries(std::move(c), std::move(family));
}

}  // namespace polya
