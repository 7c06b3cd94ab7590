#pragma once

#include "polya/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace polya {

/// Power series in z truncated at z^N, with exact rational coefficients.
///
/// Every operation reads indices 0..N of its operands only and returns a
/// result truncated at the smaller operand order. `family()` is an optional
/// label naming the generating function the series represents (e.g. "polya").
class RationalSeries {
public:
    RationalSeries() = default;
    /// Zero series of the given truncation order.
    explicit RationalSeries(std::size_t order, std::string family = {});
    /// Takes coeffs[0..N]; the order is coeffs.size() - 1. Must be non-empty.
    explicit RationalSeries(std::vector<Rational> coeffs, std::string family = {});

    std::size_t order() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::string& family() const { return family_; }
    void set_family(std::string family) { family_ = std::move(family); }

    const Rational& operator[](std::size_t n) const { return coeffs_[n]; }
    Rational& operator[](std::size_t n) { return coeffs_[n]; }
    /// Coefficient of z^n with bounds checking.
    const Rational& at(std::size_t n) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Index of the first nonzero coefficient, or order()+1 for the zero series.
    std::size_t valuation() const;

    /// Copy truncated to a smaller order (throws if `order` exceeds this one).
    RationalSeries truncated(std::size_t order) const;
    /// f(z^k), truncated at the same order.
    RationalSeries substitute_power(std::size_t k) const;
    /// z^k * f(z), truncated at the same order.
    RationalSeries shifted(std::size_t k) const;
    /// f'(z); the top coefficient is lost, so the order drops by one.
    RationalSeries derivative() const;

    bool all_integers() const;
    bool all_nonnegative() const;

    RationalSeries& operator+=(const RationalSeries& other);
    RationalSeries& operator-=(const RationalSeries& other);
    RationalSeries& operator*=(const Rational& scalar);

    friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
    friend RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
    friend RationalSeries operator*(RationalSeries a, const Rational& s) { return a *= s; }
    friend RationalSeries operator*(const Rational& s, RationalSeries a) { return a *= s; }
    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
    friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Rational> coeffs_;
    std::string family_;
};

/// exp(f) for f with zero constant term, via (exp f)' = f' exp f.
RationalSeries exp(const RationalSeries& f);
/// 1/f for f(0) != 0.
RationalSeries reciprocal(const RationalSeries& f);
/// f(g(z)) for g(0) = 0. The order is min(order f, order g).
RationalSeries compose(const RationalSeries& f, const RationalSeries& g);
/// Compositional inverse g with f(g(z)) = z, for f(0) = 0 and f'(0) != 0.
RationalSeries reversion(const RationalSeries& f);
/// Series with integer coefficients a_n of the given order.
RationalSeries from_integers(const std::vector<Integer>& values, std::string family = {});

}  // namespace polya
