#include "treealg/hopf.hpp"

#include <algorithm>
#include <cassert>

namespace treealg {

namespace {

struct TreeCut {
    Forest pruned;              // cut-off components, leftmost cut first
    std::optional<PlanarTree> trunk;  // root component; nullopt encodes the total cut
};

void guard(std::size_t count, const Limits& limits) {
    if (count > limits.max_items)
        throw resource_limit_error("cut enumeration exceeds the configured cap");
}

// All edge-subset admissible cuts of t (the empty cut first); per child edge a
// cut either severs it, pruning the child whole, or recurses below it.
std::vector<TreeCut> tree_edge_cuts(const PlanarTree& t, bool left_allowed,
                                    const Limits& limits) {
    std::vector<std::vector<TreeCut>> child_choices;
    child_choices.reserve(t.children().size());
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        const PlanarTree& child = t.children()[i];
        std::vector<TreeCut> choices = tree_edge_cuts(child, left_allowed, limits);
        if (left_allowed || i > 0)
            choices.push_back(TreeCut{Forest(child), std::nullopt});  // sever this edge
        child_choices.push_back(std::move(choices));
    }
    std::vector<TreeCut> out;
    std::vector<std::size_t> pick(child_choices.size(), 0);
    while (true) {
        Forest pruned;
        std::vector<PlanarTree> kept;
        for (std::size_t i = 0; i < child_choices.size(); ++i) {
            const TreeCut& c = child_choices[i][pick[i]];
            pruned = pruned.concat(c.pruned);
            if (c.trunk) kept.push_back(*c.trunk);
        }
        out.push_back(TreeCut{std::move(pruned), PlanarTree(t.decoration(), std::move(kept))});
        guard(out.size(), limits);
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < child_choices[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    return out;
}

std::vector<std::pair<Forest, Forest>> cuts_of_forest(const Forest& f, bool left_allowed,
                                                      const Limits& limits) {
    // Per tree: edge-subset cuts (empty first), then the formal total cut.
    std::vector<std::vector<TreeCut>> per_tree;
    per_tree.reserve(f.trees().size());
    for (const PlanarTree& t : f.trees()) {
        auto cuts = tree_edge_cuts(t, left_allowed, limits);
        cuts.push_back(TreeCut{Forest(t), std::nullopt});
        per_tree.push_back(std::move(cuts));
    }
    std::vector<std::pair<Forest, Forest>> out;
    std::vector<std::size_t> pick(per_tree.size(), 0);
    while (true) {
        Forest pruned, trunk;
        for (std::size_t i = 0; i < per_tree.size(); ++i) {
            const TreeCut& c = per_tree[i][pick[i]];
            pruned = pruned.concat(c.pruned);
            if (c.trunk) trunk = trunk.concat(Forest(*c.trunk));
        }
        out.emplace_back(std::move(pruned), std::move(trunk));
        guard(out.size(), limits);
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < per_tree[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    return out;
}

}  // namespace

std::vector<std::pair<Forest, Forest>> admissible_cuts(const Forest& f, const Limits& limits) {
    return cuts_of_forest(f, true, limits);
}

std::vector<std::pair<Forest, Forest>> left_admissible_cuts(const Forest& f,
                                                            const Limits& limits) {
    return cuts_of_forest(f, false, limits);
}

TensorK coproduct(const Forest& f, const Limits& limits) {
    TensorK out(2);
    for (const auto& [p, r] : admissible_cuts(f, limits)) out.add_term({p, r}, 1);
    return out;
}

TensorK coproduct(const Element& x, const Limits& limits) {
    TensorK out(2);
    for (const auto& [f, c] : x.terms()) out += scale(c, coproduct(f, limits));
    return out;
}

TensorK reduced_coproduct(const Element& x, const Limits& limits) {
    TensorK out = coproduct(x, limits);
    out -= tensor_of(x, Element::one());
    out -= tensor_of(Element::one(), x);
    return out;
}

TensorK reduced_coproduct_iter(const Element& x, int k, const Limits& limits) {
    if (k < 0) throw std::invalid_argument("reduced coproduct iterate requires k >= 0");
    if (k == 0) return TensorK::of_element(x);
    // D~^k = (D~^{k-1} (x) Id) o D~, expanding the left factor.
    TensorK step = reduced_coproduct(x, limits);
    if (k == 1) return step;
    TensorK out(k + 1);
    for (const auto& [key, c] : step.terms()) {
        TensorK left = reduced_coproduct_iter(Element::monomial(key[0]), k - 1, limits);
        for (const auto& [lkey, lc] : left.terms()) {
            TensorK::Key full = lkey;
            full.push_back(key[1]);
            out.add_term(full, c * lc);
        }
    }
    return out;
}

int deg_p(const Element& x, const Limits& limits) {
    if (x.is_zero()) throw std::invalid_argument("deg_p of the zero element");
    Element reduced = x - scale(counit(x), Element::one());
    if (reduced.is_zero()) return 0;
    // Iterate by expanding the leftmost factor; coassociativity makes this
    // equal to the nested definition, and the weight bounds the degree.
    TensorK cur = TensorK::of_element(reduced);
    for (int n = 1;; ++n) {
        TensorK next(cur.arity() + 1);
        for (const auto& [key, c] : cur.terms()) {
            TensorK step = reduced_coproduct(Element::monomial(key[0]), limits);
            for (const auto& [skey, sc] : step.terms()) {
                TensorK::Key full(skey.begin(), skey.end());
                full.insert(full.end(), key.begin() + 1, key.end());
                next.add_term(full, c * sc);
            }
        }
        if (next.is_zero()) return n;
        cur = std::move(next);
    }
}

namespace {

Element antipode_tree(const PlanarTree& t,
                      std::map<PlanarTree, Element, TreeLess>& memo, const Limits& limits);

Element antipode_forest(const Forest& f, std::map<PlanarTree, Element, TreeLess>& memo,
                        const Limits& limits) {
    // Antimorphism: S(t_1...t_n) = S(t_n)...S(t_1).
    Element out = Element::one();
    for (auto it = f.trees().rbegin(); it != f.trees().rend(); ++it)
        out = out * antipode_tree(*it, memo, limits);
    return out;
}

Element antipode_tree(const PlanarTree& t, std::map<PlanarTree, Element, TreeLess>& memo,
                      const Limits& limits) {
    auto found = memo.find(t);
    if (found != memo.end()) return found->second;
    Element out = -Element::monomial(Forest(t));
    for (const auto& [p, r] : admissible_cuts(Forest(t), limits)) {
        if (p.empty() || r.empty()) continue;  // proper cuts only
        out -= antipode_forest(p, memo, limits) * Element::monomial(r);
    }
    memo.emplace(t, out);
    return out;
}

}  // namespace

Element antipode_recursive(const Element& x, const Limits& limits) {
    std::map<PlanarTree, Element, TreeLess> memo;
    Element out;
    for (const auto& [f, c] : x.terms()) out += scale(c, antipode_forest(f, memo, limits));
    return out;
}

namespace {

PlanarTree component_tree(const ForestStructure& s, int root, const std::vector<char>& cut) {
    std::vector<PlanarTree> kids;
    for (int c : s.children[static_cast<std::size_t>(root)])
        if (!cut[static_cast<std::size_t>(c)]) kids.push_back(component_tree(s, c, cut));
    return PlanarTree(s.dec[static_cast<std::size_t>(root)], std::move(kids));
}

}  // namespace

Element antipode_cuts(const Forest& f, const Limits& limits) {
    if (f.empty()) return Element::one();
    ForestStructure s(f);
    std::vector<int> edges;  // identified by the child vertex
    for (int v = 0; v < s.size(); ++v)
        if (s.parent[static_cast<std::size_t>(v)] >= 0) edges.push_back(v);
    if (edges.size() >= 63 || (std::uint64_t{1} << edges.size()) > limits.max_items)
        throw resource_limit_error("edge-subset antipode exceeds the configured cap");

    Element out;
    int sign_forest = (f.length() % 2 == 0) ? 1 : -1;
    std::vector<char> cut(static_cast<std::size_t>(s.size()), 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
        std::fill(cut.begin(), cut.end(), 0);
        int n_c = 0;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) {
                cut[static_cast<std::size_t>(edges[i])] = 1;
                ++n_c;
            }
        // Component roots in descending preorder rank; preorder rank is the
        // ascending total order on vertices.
        std::vector<PlanarTree> parts;
        for (int v = s.size() - 1; v >= 0; --v)
            if (s.parent[static_cast<std::size_t>(v)] < 0 || cut[static_cast<std::size_t>(v)])
                parts.push_back(component_tree(s, v, cut));
        int sign = sign_forest * ((n_c % 2 == 0) ? 1 : -1);
        out.add_term(Forest(std::move(parts)), sign);
    }
    return out;
}

Element antipode_cuts(const Element& x, const Limits& limits) {
    Element out;
    for (const auto& [f, c] : x.terms()) out += scale(c, antipode_cuts(f, limits));
    return out;
}

Element bplus_linear(const Element& x, Decoration d) {
    return apply_linear(x, [&](const Forest& f) { return Element::monomial(Forest(bplus(f, d))); });
}

Element convolve_left(const std::function<Element(const Element&)>& s, const Element& x,
                      const Limits& limits) {
    Element out;
    for (const auto& [key, c] : coproduct(x, limits).terms())
        out += scale(c, s(Element::monomial(key[0])) * Element::monomial(key[1]));
    return out;
}

Element convolve_right(const std::function<Element(const Element&)>& s, const Element& x,
                       const Limits& limits) {
    Element out;
    for (const auto& [key, c] : coproduct(x, limits).terms())
        out += scale(c, Element::monomial(key[0]) * s(Element::monomial(key[1])));
    return out;
}

}  // namespace treealg
