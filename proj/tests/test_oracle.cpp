#include <doctest.h>

#include "polya/brute_force.hpp"
#include "polya/error.hpp"
#include "polya/oracle.hpp"
#include "polya/verify.hpp"
#include "support/aut_oracle.hpp"

#include <algorithm>

using namespace polya;

namespace {

Rational q(const char* s) { return parse_rational(s); }
TreePtr tree(const char* s) { return CanonicalTree::parse(s); }

const char* kChain3 = "((()))";
const char* kCherry = "(()())";
const char* kChain4 = "(((())))";
const char* kFork4 = "((())())";   // identity tree with a 2-chain and a leaf
const char* kStem4 = "((()()))";   // root above a cherry
const char* kStar4 = "(()()())";

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("canonical form does not depend on child order") {
    CHECK(tree("(()(()))")->encoding() == tree("((())())")->encoding());
    CHECK(tree(kStar4)->size() == 4);
    CHECK(tree(kStar4)->outdegree() == 3);
    CHECK(tree(kStar4)->classes().size() == 1);
    CHECK(tree(kStar4)->classes()[0].multiplicity == 3);
    CHECK(tree("()")->encoding() == "()");
    for (const char* bad : {"", "(", "())", "()()", "(x)"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(tree(bad), Error);
    }
    const auto profile = tree(kStem4)->outdegree_profile();
    CHECK(profile.at(0) == 2);
    CHECK(profile.at(1) == 1);
    CHECK(profile.at(2) == 1);
}

TEST_CASE("tree enumeration is canonical and complete") {
    for (std::size_t n = 1; n <= 9; ++n) {
        const auto all = enumerate_trees(n);
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(tree_less(*all[i - 1], *all[i]));
        for (const auto& t : all) CHECK(t->size() == n);
    }
    CHECK(enumerate_trees(4).size() == 4);
    CHECK_THROWS_AS(enumerate_trees(kTreeEnumerationCap + 1), Error);
    CHECK_THROWS_AS(enumerate_trees(0), Error);
}

TEST_CASE("automorphism counts") {
    CHECK(aut_order(*tree(kChain3)) == 1);
    CHECK(aut_order(*tree(kCherry)) == 2);
    CHECK(aut_order(*tree(kStar4)) == 6);
    CHECK(aut_order(*tree("((()())(()()))")) == 8);
    CHECK(is_identity_tree(*tree(kFork4)));
    CHECK_FALSE(is_identity_tree(*tree(kStem4)));
    for (std::size_t n = 1; n <= 8; ++n)
        for (const auto& t : enumerate_trees(n)) {
            const auto auts = oracle_test::automorphisms(oracle_test::from_parens(t->encoding()));
            CHECK(aut_order(*t) == static_cast<long>(auts.size()));
        }
}

TEST_CASE("fixed-point polynomials of the small example trees") {
    CHECK(fixed_point_polynomial(*tree(kChain3)) == Polynomial{0, 0, 0, 1});
    CHECK(fixed_point_polynomial(*tree(kCherry)) == Polynomial{0, q("1/2"), 0, q("1/2")});
    CHECK(fixed_point_polynomial(*tree(kChain4)) == Polynomial{0, 0, 0, 0, 1});
    CHECK(fixed_point_polynomial(*tree(kFork4)) == Polynomial{0, 0, 0, 0, 1});
    CHECK(fixed_point_polynomial(*tree(kStem4)) == Polynomial{0, 0, q("1/2"), 0, q("1/2")});
    CHECK(fixed_point_polynomial(*tree(kStar4)) == Polynomial{0, q("1/3"), q("1/2"), 0, q("1/6")});
}

TEST_CASE("signed polynomials of the small example trees") {
    CHECK(signed_fixed_point_polynomial(*tree(kChain3)) == Polynomial{0, 0, 0, 1});
    CHECK(signed_fixed_point_polynomial(*tree(kCherry)) == Polynomial{0, q("-1/2"), 0, q("1/2")});
    CHECK(signed_fixed_point_polynomial(*tree(kFork4)) == Polynomial{0, 0, 0, 0, 1});
    CHECK(signed_fixed_point_polynomial(*tree(kStem4)) == Polynomial{0, 0, q("-1/2"), 0, q("1/2")});
    CHECK(signed_fixed_point_polynomial(*tree(kStar4)) == Polynomial{0, q("1/3"), q("-1/2"), 0, q("1/6")});
    // A swap of two 2-chains is a single sign change under the relative rule.
    CHECK(signed_fixed_point_polynomial(*tree("((())(()))")).evaluate(1) == 0);
}

TEST_CASE("per-tree polynomials agree with the test-side permutation oracle") {
    for (std::size_t n = 1; n <= 8; ++n)
        for (const auto& t : enumerate_trees(n)) {
            CAPTURE(t->encoding());
            const auto auts = oracle_test::automorphisms(oracle_test::from_parens(t->encoding()));
            Polynomial fp, sp;
            const Rational w(1, static_cast<unsigned long>(auts.size()));
            for (const auto& a : auts) {
                fp += Polynomial::monomial(w, a.fixed);
                sp += Polynomial::monomial(w * a.relative_sign, a.fixed);
            }
            CHECK(fixed_point_polynomial(*t) == fp);
            CHECK(signed_fixed_point_polynomial(*t) == sp);
            CHECK(signed_fixed_point_polynomial(*t).evaluate(1) == (is_identity_tree(*t) ? 1 : 0));
        }
}

TEST_CASE("cycle index of S_3") {
    std::vector<Polynomial> a = {Polynomial{0, 1}, Polynomial{1}, Polynomial{1}};
    // Z(S_3; u, 1, 1) = (u^3 + 3u + 2)/6
    CHECK(cycle_index_sym(3, a) == Polynomial{q("1/3"), q("1/2"), 0, q("1/6")});
    CHECK(cycle_index_sym(0, a) == Polynomial{1});
}

TEST_CASE("forest weights") {
    const ForestSpec two_leaves = make_forest({{CanonicalTree::leaf(), 2}});
    CHECK(two_leaves.is_dforest());
    CHECK(forest_weight(two_leaves) == q("1/2"));
    CHECK(signed_forest_weight(two_leaves) == q("-1/2"));
    const ForestSpec four = make_forest({{CanonicalTree::leaf(), 4}});
    CHECK(forest_weight(four) == q("9/24"));
    const ForestSpec pair_of_edges = make_forest({{tree("(())"), 2}});
    CHECK(signed_forest_weight(four) + signed_forest_weight(pair_of_edges) == q("-5/8"));
    const ForestSpec mixed = make_forest({{CanonicalTree::leaf(), 1}});
    CHECK_FALSE(mixed.is_dforest());
    CHECK_THROWS_AS(forest_weight(mixed), Error);
    CHECK(make_forest({{CanonicalTree::leaf(), 2}, {tree("(())"), 2}}).to_string() == "()^2 (())^2");
    for (std::size_t n = 2; n <= 8; ++n)
        for (const auto& f : enumerate_dforests(n)) {
            const BruteForceForest bf = brute_force_forest(f);
            CHECK(forest_weight(f) == bf.weight);
            if (std::all_of(f.components.begin(), f.components.end(),
                            [](const ChildClass& c) { return is_identity_tree(*c.tree); }))
                CHECK(signed_forest_weight(f) == bf.signed_weight);
        }
}

TEST_CASE("plane embeddings, C-tree weights and pointed counts") {
    CHECK(plane_embeddings(*tree(kStar4)) == 1);
    CHECK(plane_embeddings(*tree(kFork4)) == 2);
    CHECK(ctree_weight(*tree(kStar4)) == q("1/6"));
    CHECK(pointed_tree_count(*tree(kStar4)) == 2);
    CHECK(pointed_tree_count(*tree(kChain4)) == 4);
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& t : enumerate_trees(n)) {
            const BruteForceTree bf = brute_force_tree(*t);
            CHECK(bf.aut_count == aut_order(*t));
            CHECK(bf.orbits == pointed_tree_count(*t));
            CHECK(bf.fixed_points == fixed_point_polynomial(*t));
        }
}

TEST_CASE("verify runs clean at small caps and rejects bad caps") {
    VerifyOptions o;
    o.oracle_max = 6;
    o.series_order = 40;
    const VerifyReport r = run_verify(o);
    CHECK(r.all_passed());
    CHECK(r.checks.size() >= 15);
    o.oracle_max = 0;
    CHECK_THROWS_AS(run_verify(o), Error);
    o.oracle_max = kTreeEnumerationCap + 1;
    CHECK_THROWS_AS(run_verify(o), Error);
    VerifyOptions one;
    one.oracle_max = 1;
    CHECK(run_verify(one).all_passed());
}

}  // TEST_SUITE
