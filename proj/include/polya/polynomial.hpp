#pragma once

#include "polya/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace polya {

// Dense univariate polynomial with exact rational coefficients. Used for the
// marker variable (u or v) of bivariate families and for the per-tree
// fixed-point polynomials of the oracle. Trailing zeros are trimmed, so the
// zero polynomial has no stored coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs);
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; the zero polynomial reports 0.
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    /// Coefficient of x^k (zero beyond the degree).
    Rational coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational evaluate(const Rational& x) const;
    /// p'(1)
    Rational derivative_at_one() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);
    /// Add scalar * other without building a temporary.
    void add_scaled(const Polynomial& other, const Rational& scalar);
    /// Add a * b.
    void add_product(const Polynomial& a, const Polynomial& b);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Human readable, highest degree first, e.g. "3/2*u^3 + 1/2*u".
    std::string to_string(const std::string& var = "u") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace polya
