#pragma once

#include "polya/polynomial.hpp"
#include "polya/rational.hpp"
#include "polya/tree.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

namespace polya {

constexpr std::size_t kTreeEnumerationCap = 14;
constexpr std::size_t kForestEnumerationCap = 12;

/// All trees of size n in canonical order, optionally restricted to outdegrees
/// in `outdegrees` (applied to every node, leaves included).
std::vector<TreePtr> enumerate_trees(std::size_t n,
                                     const std::optional<std::set<std::size_t>>& outdegrees = {});

Integer aut_order(const CanonicalTree& t);
bool is_identity_tree(const CanonicalTree& t);

/// Z(S_m; a_1, ..., a_m) for polynomial arguments, by m Z_m = sum_k a_k Z_{m-k}.
/// `a` must hold at least m entries (a[0] is a_1).
Polynomial cycle_index_sym(std::size_t m, const std::vector<Polynomial>& a);

/// t_T(u) = average of u^(fixed points) over Aut(T).
Polynomial fixed_point_polynomial(const CanonicalTree& t);

/// Signed version r_T(u). Every node cycle of an automorphism carries the sign
/// (-1)^(L/L' - 1), with L its length and L' the length of its parent's cycle.
/// r_T(1) is 1 for identity trees and 0 otherwise.
Polynomial signed_fixed_point_polynomial(const CanonicalTree& t);

/// Product over classes of !m / m!. Throws for multiplicity 1.
Rational forest_weight(const ForestSpec& f);
/// Product over classes of (sum over derangements of S_m of sign) / m!.
/// Components must be identity trees.
Rational signed_forest_weight(const ForestSpec& f);

/// All D-forests of size n (every multiplicity >= 2), in canonical order.
std::vector<ForestSpec> enumerate_dforests(std::size_t n, bool identity_only = false);

/// Number of plane embeddings e(T).
Integer plane_embeddings(const CanonicalTree& t);
/// e(T) * prod_k (1/k!)^(n_k(T)), n_k = number of nodes of outdegree k.
Rational ctree_weight(const CanonicalTree& t);
/// Number of node orbits under Aut(T).
Integer pointed_tree_count(const CanonicalTree& t);

}  // namespace polya
