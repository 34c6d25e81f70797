#pragma once

#include "treealg/hopf.hpp"

namespace treealg {

// Planar binary tree: a leaf "|" or the joining of two binary trees under a
// new root. The degree is the number of internal vertices.
class BinaryTree {
public:
    BinaryTree() = default;  // leaf
    BinaryTree(BinaryTree left, BinaryTree right);

    bool is_leaf() const { return sub_.empty(); }
    const BinaryTree& left() const { return sub_[0]; }
    const BinaryTree& right() const { return sub_[1]; }
    int degree() const { return degree_; }

    bool operator==(const BinaryTree& other) const;

private:
    std::vector<BinaryTree> sub_;  // empty or exactly two
    int degree_ = 0;
};

// Text form: "|" for the leaf, "(L^R)" for a join.
BinaryTree parse_binary(const std::string& text);
std::string render_binary(const BinaryTree& b);

// Grafting product on binary trees: st grafts t onto the leftmost leaf of s.
BinaryTree binary_mul(const BinaryTree& s, const BinaryTree& t);

// Degree-preserving bijections between binary trees and undecorated forests.
Forest binary_to_forest(const BinaryTree& b);
BinaryTree forest_to_binary(const Forest& f);

// The second coproduct on forests, by its recursion and by left cuts.
TensorK coproduct_fr_recursive(const Element& x, const Limits& limits = {});
TensorK coproduct_fr_cuts(const Forest& f, const Limits& limits = {});
TensorK coproduct_fr_cuts(const Element& x, const Limits& limits = {});

}  // namespace treealg
