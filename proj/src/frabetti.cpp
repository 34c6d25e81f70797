#include "treealg/frabetti.hpp"

namespace treealg {

BinaryTree::BinaryTree(BinaryTree left, BinaryTree right) {
    degree_ = 1 + left.degree_ + right.degree_;
    sub_.reserve(2);
    sub_.push_back(std::move(left));
    sub_.push_back(std::move(right));
}

bool BinaryTree::operator==(const BinaryTree& other) const {
    return degree_ == other.degree_ && sub_ == other.sub_;
}

namespace {

BinaryTree parse_binary_at(const std::string& text, std::size_t& pos) {
    if (pos >= text.size()) throw parse_error("unexpected end of binary tree", pos);
    if (text[pos] == '|') {
        ++pos;
        return BinaryTree();
    }
    if (text[pos] != '(') throw parse_error("expected '|' or '('", pos);
    ++pos;
    BinaryTree left = parse_binary_at(text, pos);
    if (pos >= text.size() || text[pos] != '^') throw parse_error("expected '^'", pos);
    ++pos;
    BinaryTree right = parse_binary_at(text, pos);
    if (pos >= text.size() || text[pos] != ')') throw parse_error("expected ')'", pos);
    ++pos;
    return BinaryTree(std::move(left), std::move(right));
}

}  // namespace

BinaryTree parse_binary(const std::string& text) {
    std::size_t pos = 0;
    BinaryTree b = parse_binary_at(text, pos);
    if (pos != text.size()) throw parse_error("trailing input", pos);
    return b;
}

std::string render_binary(const BinaryTree& b) {
    if (b.is_leaf()) return "|";
    return "(" + render_binary(b.left()) + "^" + render_binary(b.right()) + ")";
}

BinaryTree binary_mul(const BinaryTree& s, const BinaryTree& t) {
    // | t = t ; (s^l v s^r) t = (s^l t) v s^r.
    if (s.is_leaf()) return t;
    return BinaryTree(binary_mul(s.left(), t), s.right());
}

Forest binary_to_forest(const BinaryTree& b) {
    // f(|) = 1 ; f(l v r) = B^+(f(r)) f(l).
    if (b.is_leaf()) return Forest();
    Forest right = binary_to_forest(b.right());
    Forest left = binary_to_forest(b.left());
    return Forest(bplus(right, 0)).concat(left);
}

BinaryTree forest_to_binary(const Forest& f) {
    // g(1) = | ; g(tF) = g(F) v g(B^-(t)).
    if (f.empty()) return BinaryTree();
    const PlanarTree& t = f.trees()[0];
    std::vector<PlanarTree> rest(f.trees().begin() + 1, f.trees().end());
    return BinaryTree(forest_to_binary(Forest(std::move(rest))), forest_to_binary(bminus(t)));
}

namespace {

TensorK coproduct_fr_tree(const PlanarTree& t, std::map<PlanarTree, TensorK, TreeLess>& memo,
                          const Limits& limits);

TensorK coproduct_fr_forest(const Forest& f, std::map<PlanarTree, TensorK, TreeLess>& memo,
                            const Limits& limits) {
    TensorK out = TensorK::pure({Forest(), Forest()});
    for (const PlanarTree& t : f.trees()) out = tensor_mul(out, coproduct_fr_tree(t, memo, limits));
    return out;
}

TensorK apply_bplus_right(const TensorK& t, Decoration d) {
    TensorK out(2);
    for (const auto& [key, c] : t.terms()) out.add_term({key[0], Forest(bplus(key[1], d))}, c);
    return out;
}

TensorK coproduct_fr_tree(const PlanarTree& t, std::map<PlanarTree, TensorK, TreeLess>& memo,
                          const Limits& limits) {
    auto found = memo.find(t);
    if (found != memo.end()) return found->second;
    const Forest f = bminus(t);
    Decoration d = t.decoration();
    TensorK out = TensorK::pure({Forest(t), Forest()});
    out += apply_bplus_right(coproduct_fr_forest(f, memo, limits), d);
    if (!f.empty()) {
        // minus (Id (x) B^+)[(B^+(D(F)) (x) 1) Delta_Fr(G(F))]; B^+(D(F)) is
        // the first tree of F put back together.
        Forest head(f.trees()[0]);
        std::vector<PlanarTree> tail_trees(f.trees().begin() + 1, f.trees().end());
        TensorK tail = coproduct_fr_forest(Forest(std::move(tail_trees)), memo, limits);
        TensorK shifted = tensor_mul(TensorK::pure({head, Forest()}), tail);
        out -= apply_bplus_right(shifted, d);
    }
    memo.emplace(t, out);
    return out;
}

}  // namespace

TensorK coproduct_fr_recursive(const Element& x, const Limits& limits) {
    std::map<PlanarTree, TensorK, TreeLess> memo;
    TensorK out(2);
    for (const auto& [f, c] : x.terms()) out += scale(c, coproduct_fr_forest(f, memo, limits));
    return out;
}

TensorK coproduct_fr_cuts(const Forest& f, const Limits& limits) {
    TensorK out(2);
    for (const auto& [p, r] : left_admissible_cuts(f, limits)) out.add_term({p, r}, 1);
    return out;
}

TensorK coproduct_fr_cuts(const Element& x, const Limits& limits) {
    TensorK out(2);
    for (const auto& [f, c] : x.terms()) out += scale(c, coproduct_fr_cuts(f, limits));
    return out;
}

}  // namespace treealg
