#include "polya/brute_force.hpp"

#include "polya/error.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace polya {

namespace {

// parent[0] = 0 marks the root.
void flatten(const CanonicalTree& t, std::size_t parent, std::vector<std::size_t>& parents) {
    const std::size_t self = parents.size();
    parents.push_back(parent);
    for (const auto& c : t.classes())
        for (std::size_t k = 0; k < c.multiplicity; ++k) flatten(*c.tree, self, parents);
}

struct PermStats {
    std::size_t fixed = 0;
    int relative_sign = 1;
    int node_sign = 1;
};

std::size_t find(std::vector<std::size_t>& uf, std::size_t x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
}

// Calls visit(perm, stats) for every automorphism of the rooted tree given by parents.
template <class Visit>
void for_each_automorphism(const std::vector<std::size_t>& parents, Visit visit) {
    const std::size_t n = parents.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> cycle_len(n);
    do {
        bool ok = true;
        for (std::size_t v = 1; v < n && ok; ++v) ok = parents[perm[v]] == perm[parents[v]];
        if (!ok) continue;
        PermStats s;
        for (std::size_t v = 0; v < n; ++v) {
            std::size_t len = 1;
            for (std::size_t w = perm[v]; w != v; w = perm[w]) ++len;
            cycle_len[v] = len;
        }
        std::vector<bool> seen(n, false);
        for (std::size_t v = 0; v < n; ++v) {
            if (seen[v]) continue;
            for (std::size_t w = v; !seen[w]; w = perm[w]) seen[w] = true;
            const std::size_t len = cycle_len[v];
            if (len == 1) ++s.fixed;
            if (len % 2 == 0) s.node_sign = -s.node_sign;
            if (v != 0) {
                const std::size_t ratio = len / cycle_len[parents[v]];
                if (ratio % 2 == 0) s.relative_sign = -s.relative_sign;
            }
        }
        visit(perm, s);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
}

}  // namespace

BruteForceTree brute_force_tree(const CanonicalTree& t) {
    if (t.size() > kBruteForceCap)
        throw_limit("brute-force automorphism enumeration is capped at " +
                    std::to_string(kBruteForceCap) + " nodes");
    std::vector<std::size_t> parents;
    flatten(t, 0, parents);
    const std::size_t n = parents.size();
    std::vector<Rational> fixed(n + 1), rel(n + 1), node(n + 1);
    std::vector<std::size_t> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    Integer count = 0;
    for_each_automorphism(parents, [&](const std::vector<std::size_t>& perm, const PermStats& s) {
        ++count;
        fixed[s.fixed] += 1;
        rel[s.fixed] += s.relative_sign;
        node[s.fixed] += s.node_sign;
        for (std::size_t v = 0; v < n; ++v) uf[find(uf, v)] = find(uf, perm[v]);
    });
    BruteForceTree out;
    out.aut_count = count;
    for (std::size_t k = 0; k <= n; ++k) {
        fixed[k] /= count;
        rel[k] /= count;
        node[k] /= count;
    }
    out.fixed_points = Polynomial(fixed);
    out.signed_relative = Polynomial(rel);
    out.signed_node_level = Polynomial(node);
    out.orbits = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (find(uf, v) == v) ++out.orbits;
    return out;
}

BruteForceForest brute_force_forest(const ForestSpec& f) {
    if (f.size() + 1 > kBruteForceCap)
        throw_limit("brute-force forest enumeration is capped at " +
                    std::to_string(kBruteForceCap - 1) + " nodes");
    std::vector<std::size_t> parents{0};
    for (const auto& c : f.components)
        for (std::size_t k = 0; k < c.multiplicity; ++k) flatten(*c.tree, 0, parents);
    Integer count = 0, moving = 0, signed_moving = 0;
    for_each_automorphism(parents, [&](const std::vector<std::size_t>&, const PermStats& s) {
        ++count;
        if (s.fixed == 1) {
            ++moving;
            signed_moving += s.relative_sign;
        }
    });
    BruteForceForest out;
    out.aut_count = count;
    out.weight = Rational(moving, count);
    out.weight.canonicalize();
    out.signed_weight = Rational(signed_moving, count);
    out.signed_weight.canonicalize();
    return out;
}

}  // namespace polya
