#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace treealg {

// Vertex labels are indices into a configured, totally ordered decoration set.
using Decoration = int;

class DecorationSet {
public:
    DecorationSet() : DecorationSet(std::vector<std::string>{"*"}) {}
    explicit DecorationSet(std::vector<std::string> tokens);

    int size() const { return static_cast<int>(tokens_.size()); }
    const std::string& token(Decoration d) const;
    std::optional<Decoration> find(const std::string& token) const;

private:
    std::vector<std::string> tokens_;
    std::map<std::string, Decoration> index_;
};

struct Limits {
    // Enumeration-style operations refuse to materialize more items than this.
    std::uint64_t max_items = 1'000'000;
};

class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Ordered rooted tree; children keep their left-to-right order (planarity).
class PlanarTree {
public:
    PlanarTree(Decoration d, std::vector<PlanarTree> children = {});

    Decoration decoration() const { return dec_; }
    const std::vector<PlanarTree>& children() const& { return children_; }
    std::vector<PlanarTree> children() && { return std::move(children_); }
    int weight() const { return weight_; }

    bool operator==(const PlanarTree& other) const;

private:
    Decoration dec_;
    std::vector<PlanarTree> children_;
    int weight_;
};

// Ordered word of planar trees; the empty word is the unit forest 1.
class Forest {
public:
    Forest() = default;
    explicit Forest(std::vector<PlanarTree> trees);
    explicit Forest(PlanarTree tree);

    const std::vector<PlanarTree>& trees() const& { return trees_; }
    std::vector<PlanarTree> trees() && { return std::move(trees_); }
    int weight() const { return weight_; }
    std::size_t length() const { return trees_.size(); }  // lg(F)
    bool empty() const { return trees_.empty(); }

    Forest concat(const Forest& other) const;

    bool operator==(const Forest& other) const;

private:
    std::vector<PlanarTree> trees_;
    int weight_ = 0;
};

// Preorder rank of a vertex: trees left to right, within a tree root first,
// then subtrees left to right.
struct VertexRef {
    int index = 0;
    bool operator==(const VertexRef&) const = default;
};

enum class Ordering { LT, EQ, GT };

// Total order on forests: weight first, then a single tree beats a proper
// forest, then root decorations, then the recursion under the root, then
// rightmost-first comparison of the trees.
Ordering compare_trees(const PlanarTree& a, const PlanarTree& b);
Ordering compare_forests(const Forest& a, const Forest& b);

struct TreeLess {
    bool operator()(const PlanarTree& a, const PlanarTree& b) const {
        return compare_trees(a, b) == Ordering::LT;
    }
};
struct ForestLess {
    bool operator()(const Forest& a, const Forest& b) const {
        return compare_forests(a, b) == Ordering::LT;
    }
};

// Text form: forest := "1" | tree (" " tree)* ; tree := DECOR ("[" forest "]")?
Forest parse_forest(const std::string& text, const DecorationSet& decor);
std::string render_forest(const Forest& f, const DecorationSet& decor);
std::string render_tree(const PlanarTree& t, const DecorationSet& decor);

// Grafting under a new root / root removal; B^- o B_d^+ = id.
PlanarTree bplus(const Forest& f, Decoration d);
Forest bminus(const PlanarTree& t);

// gamma_d removes a trailing one-vertex tree decorated d; nullopt encodes 0.
std::optional<Forest> gamma(const Forest& f, Decoration d);

// All trees (forests) of weight n over the decoration set, ascending.
std::vector<PlanarTree> enumerate_trees(int n, const DecorationSet& decor,
                                        const Limits& limits = {});
std::vector<Forest> enumerate_forests(int n, const DecorationSet& decor,
                                      const Limits& limits = {});

// Flat view of a forest's vertex structure in preorder.
struct ForestStructure {
    explicit ForestStructure(const Forest& f);

    int size() const { return static_cast<int>(dec.size()); }

    std::vector<Decoration> dec;
    std::vector<int> parent;       // -1 for tree roots
    std::vector<int> tree_index;   // which tree of the forest a vertex lies in
    std::vector<int> child_rank;   // position among the parent's children
    std::vector<std::vector<int>> children;
    std::vector<int> roots;        // preorder indices of the tree roots
};

// x >=_haut y: y lies on the root path of x (within one tree).
bool ge_haut(const Forest& f, VertexRef x, VertexRef y);
bool ge_haut(const ForestStructure& s, int x, int y);

// x >=_gauche y: x lies strictly to the left of y (incomparable when one is
// on the root path of the other).
bool ge_gauche(const Forest& f, VertexRef x, VertexRef y);
bool ge_gauche(const ForestStructure& s, int x, int y);

// Vertices sorted ascending for the total order
// x >=_tot y  iff  x >=_haut y or y >=_gauche x.
std::vector<VertexRef> tot_order(const Forest& f);

// The weight-preserving involution m with (F, m(F)) = 1.
Forest mirror(const Forest& f);

}  // namespace treealg
