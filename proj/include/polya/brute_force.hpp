#pragma once

#include "polya/polynomial.hpp"
#include "polya/rational.hpp"
#include "polya/tree.hpp"

namespace polya {

/// Node count limit for permutation-by-permutation automorphism enumeration.
constexpr std::size_t kBruteForceCap = 9;

/// Statistics gathered by checking every root-fixing permutation of the nodes.
struct BruteForceTree {
    Integer aut_count;
    Polynomial fixed_points;      ///< average of u^(fixed points)
    Polynomial signed_relative;   ///< sign (-1)^(L/L_parent - 1) per node cycle
    Polynomial signed_node_level; ///< sign (-1)^(number of even cycles)
    Integer orbits;               ///< node orbits under the whole group
};

BruteForceTree brute_force_tree(const CanonicalTree& t);

/// Forest automorphisms enumerated under a virtual common root.
struct BruteForceForest {
    Integer aut_count;
    Rational weight;         ///< share of automorphisms moving every node
    Rational signed_weight;  ///< same, each counted with its relative cycle sign
};

BruteForceForest brute_force_forest(const ForestSpec& f);

}  // namespace polya
