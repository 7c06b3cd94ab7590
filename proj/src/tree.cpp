#include "polya/tree.hpp"

#include "polya/error.hpp"

#include <algorithm>
#include <functional>

namespace polya {

namespace {

std::vector<ChildClass> normalize(std::vector<ChildClass> classes) {
    classes.erase(std::remove_if(classes.begin(), classes.end(),
                                 [](const ChildClass& c) { return c.multiplicity == 0; }),
                  classes.end());
    for (const auto& c : classes)
        if (!c.tree) throw_invalid("null subtree");
    std::sort(classes.begin(), classes.end(), [](const ChildClass& a, const ChildClass& b) {
        return tree_less(*a.tree, *b.tree);
    });
    std::vector<ChildClass> merged;
    for (auto& c : classes) {
        if (!merged.empty() && tree_equal(*merged.back().tree, *c.tree))
            merged.back().multiplicity += c.multiplicity;
        else
            merged.push_back(std::move(c));
    }
    return merged;
}

}  // namespace

bool tree_less(const CanonicalTree& a, const CanonicalTree& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.encoding() < b.encoding();
}

bool tree_equal(const CanonicalTree& a, const CanonicalTree& b) {
    return a.encoding() == b.encoding();
}

TreePtr CanonicalTree::leaf() {
    static const TreePtr single = [] {
        auto t = std::shared_ptr<CanonicalTree>(new CanonicalTree());
        t->encoding_ = "()";
        return TreePtr(t);
    }();
    return single;
}

TreePtr CanonicalTree::from_classes(std::vector<ChildClass> classes) {
    classes = normalize(std::move(classes));
    if (classes.empty()) return leaf();
    auto t = std::shared_ptr<CanonicalTree>(new CanonicalTree());
    std::size_t enc_len = 2;
    for (const auto& c : classes) {
        t->size_ += c.multiplicity * c.tree->size();
        t->outdegree_ += c.multiplicity;
        enc_len += c.multiplicity * c.tree->encoding().size();
    }
    t->encoding_.reserve(enc_len);
    t->encoding_ += '(';
    for (const auto& c : classes)
        for (std::size_t k = 0; k < c.multiplicity; ++k) t->encoding_ += c.tree->encoding();
    t->encoding_ += ')';
    t->classes_ = std::move(classes);
    return t;
}

TreePtr CanonicalTree::from_children(const std::vector<TreePtr>& children) {
    std::vector<ChildClass> classes;
    classes.reserve(children.size());
    for (const auto& c : children) classes.push_back({c, 1});
    return from_classes(std::move(classes));
}

TreePtr CanonicalTree::parse(std::string_view text) {
    std::size_t pos = 0;
    std::function<TreePtr()> node = [&]() -> TreePtr {
        if (pos >= text.size() || text[pos] != '(')
            throw_invalid("malformed tree encoding at offset " + std::to_string(pos));
        ++pos;
        std::vector<TreePtr> kids;
        while (pos < text.size() && text[pos] == '(') kids.push_back(node());
        if (pos >= text.size() || text[pos] != ')')
            throw_invalid("malformed tree encoding at offset " + std::to_string(pos));
        ++pos;
        return from_children(kids);
    };
    TreePtr t = node();
    if (pos != text.size()) throw_invalid("trailing characters in tree encoding");
    return t;
}

std::vector<std::size_t> CanonicalTree::outdegree_profile() const {
    std::vector<std::size_t> prof(outdegree_ + 1);
    prof[outdegree_] = 1;
    for (const auto& c : classes_) {
        const auto sub = c.tree->outdegree_profile();
        if (sub.size() > prof.size()) prof.resize(sub.size());
        for (std::size_t k = 0; k < sub.size(); ++k) prof[k] += c.multiplicity * sub[k];
    }
    return prof;
}

std::size_t ForestSpec::size() const {
    std::size_t s = 0;
    for (const auto& c : components) s += c.multiplicity * c.tree->size();
    return s;
}

std::size_t ForestSpec::component_count() const {
    std::size_t s = 0;
    for (const auto& c : components) s += c.multiplicity;
    return s;
}

bool ForestSpec::is_dforest() const {
    return std::all_of(components.begin(), components.end(),
                       [](const ChildClass& c) { return c.multiplicity >= 2; });
}

std::string ForestSpec::to_string() const {
    std::string out;
    for (const auto& c : components) {
        if (!out.empty()) out += ' ';
        out += c.tree->encoding();
        if (c.multiplicity > 1) out += "^" + std::to_string(c.multiplicity);
    }
    return out;
}

ForestSpec make_forest(std::vector<ChildClass> components) {
    return ForestSpec{normalize(std::move(components))};
}

}  // namespace polya
