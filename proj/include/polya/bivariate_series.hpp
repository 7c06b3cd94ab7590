#pragma once

#include "polya/polynomial.hpp"
#include "polya/rational_series.hpp"

#include <string>
#include <vector>

namespace polya {

/// Series in z truncated at z^N whose coefficients are polynomials in a
/// marker variable ("u" for C-tree nodes, "v" for D-forest components).
class BivariateSeries {
public:
    BivariateSeries() = default;
    BivariateSeries(std::size_t order, std::string marker, std::string family = {});

    std::size_t order() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::string& marker() const { return marker_; }
    const std::string& family() const { return family_; }
    void set_family(std::string family) { family_ = std::move(family); }

    const Polynomial& operator[](std::size_t n) const { return coeffs_[n]; }
    Polynomial& operator[](std::size_t n) { return coeffs_[n]; }
    const Polynomial& at(std::size_t n) const;

    /// Set the marker to a value; n-th coefficient becomes p_n(value).
    RationalSeries evaluate_marker(const Rational& value) const;
    /// d/d(marker) at marker = 1, coefficient-wise.
    RationalSeries marker_derivative_at_one() const;
    /// Largest marker degree over all coefficients.
    std::size_t max_marker_degree() const;

private:
    std::vector<Polynomial> coeffs_;
    std::string marker_;
    std::string family_;
};

/// exp(F) for F with F[0] = 0.
BivariateSeries exp(const BivariateSeries& f);

}  // namespace polya
