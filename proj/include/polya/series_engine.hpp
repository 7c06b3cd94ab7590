#pragma once

#include "polya/bivariate_series.hpp"
#include "polya/rational_series.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace polya {

/// Default truncation orders. POLYA_ORDER and POLYA_BIVARIATE_ORDER override them.
std::size_t default_order();
std::size_t default_bivariate_order();

/// t_0..t_N of T(z) = z exp(sum_i T(z^i)/i), as exact integers.
std::vector<Integer> polya_integers(std::size_t N);

RationalSeries polya_coeffs(std::size_t N);
/// n^(n-1)/n!
RationalSeries cayley_coeffs(std::size_t N);
/// D(z) = exp(sum_{i>=2} T(z^i)/i)
RationalSeries dforest_coeffs(std::size_t N);
/// t_{c,n}(u) from T_c = z u exp(T_c) D(z).
BivariateSeries ctree_polynomials(std::size_t N);
/// T/(1-T)
RationalSeries pointed_coeffs(std::size_t N);
/// T/(1-T) for a given T; throws if T(0) != 0.
RationalSeries pointed_from(const RationalSeries& T);
/// T/(1-T) * d_m z^m / D(z). Its n-th coefficient over [z^n] T/(1-T) is the
/// probability that a uniformly chosen C-tree node carries a forest of size m.
RationalSeries forest_size_marked(std::size_t N, std::size_t m);
/// D(z,v) = exp(sum_{i>=2} v^i T(z^i)/i); v counts forest components.
BivariateSeries dforest_component_bivariate(std::size_t N);
/// T(z,v) = z exp(T(z,v)) D(z,v); v counts all forest components in the tree.
BivariateSeries dtree_bivariate(std::size_t N);

/// gamma(z) = sum_{i>=2} T(z^i)
RationalSeries gamma_series(std::size_t N);
/// gamma_2(z) = sum_{i>=2} i T(z^i)
RationalSeries gamma2_series(std::size_t N);

struct DTreeCountSeries {
    RationalSeries forest_mean;  ///< A = D gamma; E X_n = [z^n]A / d_n
    RationalSeries tree_mean;    ///< B = T/(1-T) gamma; E Y_n = [z^n]B / t_n
    RationalSeries tree_second;  ///< T gamma^2/(1-T)^3 + T gamma_2/(1-T); E Y_n^2 = [z^n] / t_n
};
DTreeCountSeries dtree_count_series(std::size_t N);

struct CSizeMomentSeries {
    RationalSeries first;   ///< T/(1-T)
    RationalSeries second;  ///< T/(1-T)^3, so E|C_n|^2 = [z^n] / t_n
};
CSizeMomentSeries csize_moment_series(std::size_t N);

/// Exact finite-n moments derived from the series above (index n, n >= 1).
struct Moments {
    Rational mean;
    Rational variance;
};
Moments csize_moments(const CSizeMomentSeries& s, const RationalSeries& t, std::size_t n);
Moments ytotal_moments(const DTreeCountSeries& s, const RationalSeries& t, std::size_t n);
/// E X_n; throws for n = 1 where d_1 = 0.
Rational xforest_mean(const DTreeCountSeries& s, const RationalSeries& d, std::size_t n);

/// Trees without outdegree-1 nodes, by the two-sum recurrence.
RationalSeries hierarchy_coeffs(std::size_t N);
/// Trees with outdegrees in {0,2}.
RationalSeries binary_polya_coeffs(std::size_t N);

struct IdentitySeries {
    RationalSeries r;       ///< R(z)
    RationalSeries dstar;   ///< D*(z)
    RationalSeries pointed; ///< R/(1-R)
};
/// Throws CheckFailed-kind Error if R != C(z D*(z)) to order N.
IdentitySeries identity_tree_coeffs(std::size_t N);
/// R_c(z,u) = z u exp(R_c) D*(z); sum over trees of r_T(u).
BivariateSeries identity_ctree_polynomials(std::size_t N);
/// E(z) with C(z) = R(z E(z)).
RationalSeries e_series(std::size_t N);

/// Solve X = z * u * exp(X) * M(z, marker) degree by degree. With
/// mark_nodes = false the factor u is dropped.
BivariateSeries solve_c_composition(const BivariateSeries& M, bool mark_nodes);

/// Permitted outdegrees: either a finite set, or every k >= 0 except a finite set.
class OmegaSet {
public:
    static OmegaSet finite(std::vector<std::size_t> members);
    static OmegaSet all_except(std::vector<std::size_t> excluded);
    /// "all", "all-1", "all-1,3", "0,2", "hierarchy", "binary".
    static OmegaSet parse(const std::string& text);

    bool contains(std::size_t k) const;
    bool is_cofinite() const { return cofinite_; }
    /// Members (finite) or excluded values (cofinite), sorted.
    const std::vector<std::size_t>& listed() const { return listed_; }
    std::string to_string() const;

private:
    bool cofinite_ = false;
    std::vector<std::size_t> listed_;
};

/// A(z) = z sum_{k in Omega} Z(S_k; A(z), A(z^2), ..., A(z^k)).
RationalSeries omega_polya_coeffs(const OmegaSet& omega, std::size_t N);
/// A / (1 - z sum_{k in Omega, k>=1} Z(S_{k-1}; A(z), ...)); divided by a_n it
/// gives the exact mean number of automorphism-fixed nodes.
RationalSeries omega_ctree_mean_series(const OmegaSet& omega, std::size_t N);

}  // namespace polya
