#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace polya {

class CanonicalTree;
using TreePtr = std::shared_ptr<const CanonicalTree>;

struct ChildClass {
    TreePtr tree;
    std::size_t multiplicity = 0;
};

/// Unlabeled rooted tree in canonical multiset form. Children are grouped into
/// isomorphism classes sorted by (size, encoding), so two trees are isomorphic
/// iff their encodings are equal.
///
/// The encoding is a balanced-parenthesis string: "(" followed by the
/// encodings of all children in canonical order (each repeated by its
/// multiplicity), then ")". A single node is "()".
class CanonicalTree {
public:
    static TreePtr leaf();
    /// Builds the tree whose root has the given children (any order).
    static TreePtr from_children(const std::vector<TreePtr>& children);
    /// Same, from (tree, multiplicity) pairs; equal classes are merged.
    static TreePtr from_classes(std::vector<ChildClass> classes);
    /// Parses a balanced-parenthesis string; need not be canonical.
    static TreePtr parse(std::string_view encoding);

    std::size_t size() const { return size_; }
    std::size_t outdegree() const { return outdegree_; }
    const std::vector<ChildClass>& classes() const { return classes_; }
    const std::string& encoding() const { return encoding_; }
    /// Number of nodes of each outdegree, indexed by outdegree.
    std::vector<std::size_t> outdegree_profile() const;

private:
    CanonicalTree() = default;
    std::size_t size_ = 1;
    std::size_t outdegree_ = 0;
    std::vector<ChildClass> classes_;
    std::string encoding_;
};

/// Canonical total order: size first, then encoding.
bool tree_less(const CanonicalTree& a, const CanonicalTree& b);
bool tree_equal(const CanonicalTree& a, const CanonicalTree& b);

/// Multiset of trees given as (tree, multiplicity) classes in canonical order.
struct ForestSpec {
    std::vector<ChildClass> components;

    std::size_t size() const;
    std::size_t component_count() const;
    /// Every class has multiplicity >= 2.
    bool is_dforest() const;
    /// Space separated component encodings, with "^m" for multiplicities > 1.
    std::string to_string() const;
};

ForestSpec make_forest(std::vector<ChildClass> components);

}  // namespace polya
