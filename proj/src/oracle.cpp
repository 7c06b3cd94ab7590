#include "polya/oracle.hpp"

#include "polya/error.hpp"

#include <functional>
#include <map>

namespace polya {

namespace {

// Trees of a given size per outdegree filter, built bottom-up.
class TreeTable {
public:
    explicit TreeTable(std::optional<std::set<std::size_t>> filter) : filter_(std::move(filter)) {}

    const std::vector<TreePtr>& of_size(std::size_t n) {
        while (by_size_.size() <= n) build(by_size_.size());
        return by_size_[n];
    }

private:
    bool allowed(std::size_t k) const { return !filter_ || filter_->count(k); }

    void build(std::size_t n) {
        by_size_.emplace_back();
        if (n == 0) return;
        // Flattened list of all candidate subtrees of size < n in canonical order.
        std::vector<TreePtr> pool;
        for (std::size_t s = 1; s < n; ++s)
            for (const auto& t : of_size(s)) pool.push_back(t);
        auto& out = by_size_[n];
        std::vector<TreePtr> chosen;
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t first, std::size_t left) {
            if (left == 0) {
                if (allowed(chosen.size())) out.push_back(CanonicalTree::from_children(chosen));
                return;
            }
            for (std::size_t i = first; i < pool.size(); ++i) {
                if (pool[i]->size() > left) break;
                chosen.push_back(pool[i]);
                rec(i, left - pool[i]->size());
                chosen.pop_back();
            }
        };
        rec(0, n - 1);
        std::sort(out.begin(), out.end(),
                  [](const TreePtr& a, const TreePtr& b) { return tree_less(*a, *b); });
    }

    std::optional<std::set<std::size_t>> filter_;
    std::vector<std::vector<TreePtr>> by_size_;
};

// Signed count of derangements of S_m by cycle type: sum over partitions of m
// without parts 1 of (m! / prod k^c_k c_k!) * prod ((-1)^(k-1))^c_k.
Integer derangement_sign_sum(std::size_t m) {
    Integer total = 0;
    std::vector<std::size_t> parts;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t max_part) {
        if (left == 0) {
            Integer count = factorial(static_cast<unsigned>(m));
            std::map<std::size_t, unsigned> mult;
            int sign = 1;
            for (auto k : parts) {
                ++mult[k];
                if (k % 2 == 0) sign = -sign;
            }
            for (auto [k, c] : mult) {
                Integer kc;
                mpz_ui_pow_ui(kc.get_mpz_t(), k, c);
                count /= kc * factorial(c);
            }
            total += sign * count;
            return;
        }
        for (std::size_t k = std::min(left, max_part); k >= 2; --k) {
            parts.push_back(k);
            rec(left - k, k);
            parts.pop_back();
        }
    };
    rec(m, m);
    return total;
}

}  // namespace

std::vector<TreePtr> enumerate_trees(std::size_t n, const std::optional<std::set<std::size_t>>& outdegrees) {
    if (n < 1) throw_invalid("enumerate_trees needs n >= 1");
    if (n > kTreeEnumerationCap)
        throw_limit("tree enumeration is capped at size " + std::to_string(kTreeEnumerationCap));
    TreeTable table(outdegrees);
    return table.of_size(n);
}

Integer aut_order(const CanonicalTree& t) {
    Integer a = 1;
    for (const auto& c : t.classes()) {
        Integer sub;
        mpz_pow_ui(sub.get_mpz_t(), aut_order(*c.tree).get_mpz_t(), c.multiplicity);
        a *= factorial(static_cast<unsigned>(c.multiplicity)) * sub;
    }
    return a;
}

bool is_identity_tree(const CanonicalTree& t) {
    for (const auto& c : t.classes())
        if (c.multiplicity > 1 || !is_identity_tree(*c.tree)) return false;
    return true;
}

Polynomial cycle_index_sym(std::size_t m, const std::vector<Polynomial>& a) {
    if (a.size() < m) throw_invalid("cycle_index_sym needs m arguments");
    std::vector<Polynomial> z(m + 1);
    z[0] = Polynomial::constant(1);
    for (std::size_t j = 1; j <= m; ++j) {
        Polynomial acc;
        for (std::size_t k = 1; k <= j; ++k) acc.add_product(a[k - 1], z[j - k]);
        acc *= Rational(1, j);
        z[j] = std::move(acc);
    }
    return z[m];
}

Polynomial fixed_point_polynomial(const CanonicalTree& t) {
    Polynomial p = Polynomial::monomial(1, 1);
    for (const auto& c : t.classes()) {
        std::vector<Polynomial> a(c.multiplicity, Polynomial::constant(1));
        a[0] = fixed_point_polynomial(*c.tree);
        p = p * cycle_index_sym(c.multiplicity, a);
    }
    return p;
}

Polynomial signed_fixed_point_polynomial(const CanonicalTree& t) {
    Polynomial p = Polynomial::monomial(1, 1);
    for (const auto& c : t.classes()) {
        const Polynomial sub = signed_fixed_point_polynomial(*c.tree);
        const Rational at_one = sub.evaluate(1);
        std::vector<Polynomial> a(c.multiplicity);
        a[0] = sub;
        for (std::size_t k = 2; k <= c.multiplicity; ++k)
            a[k - 1] = Polynomial::constant(k % 2 == 0 ? Rational(-at_one) : at_one);
        p = p * cycle_index_sym(c.multiplicity, a);
    }
    return p;
}

Rational forest_weight(const ForestSpec& f) {
    Rational w = 1;
    for (const auto& c : f.components) {
        if (c.multiplicity < 2) throw_invalid("D-forest component with multiplicity 1");
        const auto m = static_cast<unsigned>(c.multiplicity);
        Rational part(derangements(m), factorial(m));
        part.canonicalize();
        w *= part;
    }
    return w;
}

Rational signed_forest_weight(const ForestSpec& f) {
    Rational w = 1;
    for (const auto& c : f.components) {
        if (c.multiplicity < 2) throw_invalid("D*-forest component with multiplicity 1");
        if (!is_identity_tree(*c.tree)) throw_invalid("D*-forest component is not an identity tree");
        Rational part(derangement_sign_sum(c.multiplicity),
                      factorial(static_cast<unsigned>(c.multiplicity)));
        part.canonicalize();
        w *= part;
    }
    return w;
}

std::vector<ForestSpec> enumerate_dforests(std::size_t n, bool identity_only) {
    if (n < 2) throw_invalid("enumerate_dforests needs n >= 2");
    if (n > kForestEnumerationCap)
        throw_limit("forest enumeration is capped at size " + std::to_string(kForestEnumerationCap));
    std::vector<TreePtr> pool;
    for (std::size_t s = 1; 2 * s <= n; ++s)
        for (const auto& t : enumerate_trees(s))
            if (!identity_only || is_identity_tree(*t)) pool.push_back(t);
    std::vector<ForestSpec> out;
    std::vector<ChildClass> chosen;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t first, std::size_t left) {
        if (left == 0) {
            out.push_back(ForestSpec{chosen});
            return;
        }
        for (std::size_t i = first; i < pool.size(); ++i) {
            const std::size_t s = pool[i]->size();
            if (2 * s > left) break;
            for (std::size_t m = 2; m * s <= left; ++m) {
                chosen.push_back({pool[i], m});
                rec(i + 1, left - m * s);
                chosen.pop_back();
            }
        }
    };
    rec(0, n);
    return out;
}

Integer plane_embeddings(const CanonicalTree& t) {
    Integer e = factorial(static_cast<unsigned>(t.outdegree()));
    for (const auto& c : t.classes()) {
        Integer sub;
        mpz_pow_ui(sub.get_mpz_t(), plane_embeddings(*c.tree).get_mpz_t(), c.multiplicity);
        e = e / factorial(static_cast<unsigned>(c.multiplicity)) * sub;
    }
    return e;
}

Rational ctree_weight(const CanonicalTree& t) {
    Rational w(plane_embeddings(t));
    const auto prof = t.outdegree_profile();
    for (std::size_t k = 2; k < prof.size(); ++k) {
        if (prof[k] == 0) continue;
        Integer fk;
        mpz_pow_ui(fk.get_mpz_t(), factorial(static_cast<unsigned>(k)).get_mpz_t(), prof[k]);
        w /= fk;
    }
    return w;
}

Integer pointed_tree_count(const CanonicalTree& t) {
    Integer orbits = 1;
    for (const auto& c : t.classes()) orbits += pointed_tree_count(*c.tree);
    return orbits;
}

}  // namespace polya
