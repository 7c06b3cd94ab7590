#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace polya {

struct NamedValue {
    std::string name;
    double value = 0;
};

struct NamedTable {
    std::string name;
    std::vector<double> values;  ///< indexed by m
};

/// A family's dominant singularity plus derived constants.
struct SingularityReport {
    std::string family;
    double rho = 0;  ///< dominant singularity (tau for the variants)
    double b = 0;    ///< square-root coefficient (b_1 for the variants)
    double c = 0;    ///< b^2/3 for the Polya family, 0 otherwise
    std::vector<NamedValue> derived;
    std::vector<NamedTable> tables;
    double precision = 0;                 ///< requested tolerance
    std::size_t truncation_order_used = 0;
    double refinement_delta = 0;  ///< |rho(N) - rho(N - 50)|
    double tail_bound = 0;        ///< largest tail bound over evaluated series
    bool converged = false;
    std::vector<std::string> notes;

    std::optional<double> get(const std::string& name) const;
    double at(const std::string& name) const;  ///< throws if missing
};

/// rho from x D(x) e = 1, b^2 = 2 e (D(rho) + rho D'(rho)), c = b^2/3.
SingularityReport solve_polya_singularity(double tol = 1e-12);

/// D(rho), D'(rho), xi(+-sqrt rho), gamma(rho), gamma'(rho), gamma_2(rho) and
/// the identity residuals.
SingularityReport dforest_constants(double tol = 1e-12);

/// Every decomposition constant: C-tree share and variance, forest-size
/// tables, E X_n limits, E Y_n and Var Y_n coefficients, L_n location.
SingularityReport decomposition_constants(double tol = 1e-12);

enum class Variant { Hierarchy, Binary };
/// tau, mu and b_1 for hierarchies or binary trees.
SingularityReport solve_variant_singularity(Variant family, double tol = 1e-12);

/// Asymptotic d_n including the (-1)^n term.
double dn_asymptotic(std::size_t n, const SingularityReport& dforest);

struct DnCheck {
    std::size_t n = 0;
    double exact = 0;
    double asymptotic = 0;
    double ratio = 0;
};
std::vector<DnCheck> dn_asymptotic_check(std::size_t n_lo, std::size_t n_hi, double tol = 1e-12);

struct ForestTableRow {
    std::size_t m = 0;
    double asymptotic = 0;
    double exact = 0;  ///< at n = n_exact
};

/// P(|F| = m) for a uniform C-tree node (conditional: given |F| >= 2), from
/// d_m rho^m / D(rho) and exactly at finite n from the marked series.
struct ForestTable {
    std::string which;  ///< "forest-size" or "forest-size-conditional"
    std::size_t n_exact = 0;
    std::vector<ForestTableRow> rows;
};
ForestTable forest_size_table(bool conditional, std::size_t m_max, std::size_t n_exact,
                              double tol = 1e-12);

/// P(L_n <= m) for m = 0..m_max from [z^n] C(z D_{<=m}(z)) / t_n, in long
/// double with the z -> rho z scaling. n <= 10000.
std::vector<double> lmax_cdf(std::size_t n, std::size_t m_max);

}  // namespace polya
