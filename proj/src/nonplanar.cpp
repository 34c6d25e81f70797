#include "treealg/nonplanar.hpp"

#include <algorithm>

namespace treealg {

Ordering rtree_compare(const PlanarTree& a, const PlanarTree& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight() ? Ordering::LT : Ordering::GT;
    if (a.decoration() != b.decoration())
        return a.decoration() < b.decoration() ? Ordering::LT : Ordering::GT;
    // children are expected canonical and sorted; compare lexicographically
    const auto& ca = a.children();
    const auto& cb = b.children();
    if (ca.size() != cb.size()) return ca.size() < cb.size() ? Ordering::LT : Ordering::GT;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        Ordering c = rtree_compare(ca[i], cb[i]);
        if (c != Ordering::EQ) return c;
    }
    return Ordering::EQ;
}

PlanarTree canonical_tree(const PlanarTree& t) {
    std::vector<PlanarTree> kids;
    kids.reserve(t.children().size());
    for (const PlanarTree& c : t.children()) kids.push_back(canonical_tree(c));
    std::sort(kids.begin(), kids.end(), [](const PlanarTree& x, const PlanarTree& y) {
        return rtree_compare(x, y) == Ordering::LT;
    });
    return PlanarTree(t.decoration(), std::move(kids));
}

Forest project(const Forest& f) {
    std::vector<PlanarTree> trees;
    trees.reserve(f.trees().size());
    for (const PlanarTree& t : f.trees()) trees.push_back(canonical_tree(t));
    std::sort(trees.begin(), trees.end(), [](const PlanarTree& x, const PlanarTree& y) {
        return rtree_compare(x, y) == Ordering::LT;
    });
    return Forest(std::move(trees));
}

bool is_canonical(const Forest& f) { return project(f) == f; }

Element project(const Element& x) {
    Element out;
    for (const auto& [f, c] : x.terms()) out.add_term(project(f), c);
    return out;
}

TensorK project(const TensorK& t) {
    TensorK out(t.arity());
    for (const auto& [key, c] : t.terms()) {
        TensorK::Key k;
        k.reserve(key.size());
        for (const Forest& f : key) k.push_back(project(f));
        out.add_term(k, c);
    }
    return out;
}

namespace {

void guard_size(std::size_t n, const Limits& limits) {
    if (n > limits.max_items)
        throw resource_limit_error("fiber enumeration exceeds the configured cap");
}

// Distinct permutations of a sorted list of trees under a structural equality.
void distinct_permutations(std::vector<PlanarTree> pool, std::vector<PlanarTree>& cur,
                           std::vector<std::vector<PlanarTree>>& out, const Limits& limits) {
    if (pool.empty()) {
        out.push_back(cur);
        guard_size(out.size(), limits);
        return;
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (i > 0 && pool[i] == pool[i - 1]) continue;
        std::vector<PlanarTree> rest;
        rest.reserve(pool.size() - 1);
        for (std::size_t j = 0; j < pool.size(); ++j)
            if (j != i) rest.push_back(pool[j]);
        cur.push_back(pool[i]);
        distinct_permutations(std::move(rest), cur, out, limits);
        cur.pop_back();
    }
}

std::vector<PlanarTree> tree_fiber(const PlanarTree& canonical, const Limits& limits) {
    // Lifts: each distinct ordering of the children multiset, with each child
    // replaced independently by one of its own lifts.
    if (canonical.children().empty()) return {canonical};
    std::vector<std::vector<PlanarTree>> orders;
    std::vector<PlanarTree> cur;
    distinct_permutations(canonical.children(), cur, orders, limits);
    std::vector<PlanarTree> out;
    for (const auto& order : orders) {
        std::vector<std::vector<PlanarTree>> child_lifts;
        child_lifts.reserve(order.size());
        for (const PlanarTree& c : order) child_lifts.push_back(tree_fiber(c, limits));
        std::vector<std::size_t> pick(order.size(), 0);
        while (true) {
            std::vector<PlanarTree> kids;
            kids.reserve(order.size());
            for (std::size_t i = 0; i < order.size(); ++i) kids.push_back(child_lifts[i][pick[i]]);
            out.push_back(PlanarTree(canonical.decoration(), std::move(kids)));
            guard_size(out.size(), limits);
            std::size_t i = 0;
            for (; i < pick.size(); ++i) {
                if (++pick[i] < child_lifts[i].size()) break;
                pick[i] = 0;
            }
            if (i == pick.size()) break;
        }
    }
    return out;
}

}  // namespace

std::vector<Forest> fiber(const Forest& canonical, const Limits& limits) {
    if (!is_canonical(canonical))
        throw std::invalid_argument("fiber requires a canonical forest");
    std::vector<std::vector<PlanarTree>> orders;
    std::vector<PlanarTree> cur;
    distinct_permutations(canonical.trees(), cur, orders, limits);
    std::vector<Forest> out;
    for (const auto& order : orders) {
        std::vector<std::vector<PlanarTree>> lifts;
        lifts.reserve(order.size());
        for (const PlanarTree& t : order) lifts.push_back(tree_fiber(t, limits));
        std::vector<std::size_t> pick(order.size(), 0);
        while (true) {
            std::vector<PlanarTree> trees;
            trees.reserve(order.size());
            for (std::size_t i = 0; i < order.size(); ++i) trees.push_back(lifts[i][pick[i]]);
            out.push_back(Forest(std::move(trees)));
            guard_size(out.size(), limits);
            std::size_t i = 0;
            for (; i < pick.size(); ++i) {
                if (++pick[i] < lifts[i].size()) break;
                pick[i] = 0;
            }
            if (i == pick.size()) break;
        }
    }
    return out;
}

TensorK coproduct_r(const Forest& canonical, const Limits& limits) {
    if (!is_canonical(canonical))
        throw std::invalid_argument("coproduct_r requires a canonical forest");
    return project(coproduct(canonical, limits));
}

Element antipode_r(const Forest& canonical, const Limits& limits) {
    if (!is_canonical(canonical))
        throw std::invalid_argument("antipode_r requires a canonical forest");
    return project(antipode_cuts(canonical, limits));
}

EElement ebar_e(const Forest& canonical, const Limits& limits) {
    EElement out;
    for (const Forest& f : fiber(canonical, limits)) out.coords.add_term(f, 1);
    return out;
}

Element ebar(const Forest& canonical, PairingContext& ctx) {
    return ctx.from_dual_basis(ebar_e(canonical, ctx.limits()));
}

mpz_class cut_count_r(const Forest& f, const Forest& g, const Forest& h, const Limits& limits) {
    if (!is_canonical(h)) throw std::invalid_argument("cut_count_r requires a canonical forest");
    mpz_class n = 0;
    for (const auto& [p, r] : admissible_cuts(h, limits))
        if (project(p) == f && project(r) == g) ++n;
    return n;
}

Element bracket_r(const PlanarTree& t1, const PlanarTree& t2, const DecorationSet& decor,
                  const Limits& limits) {
    if (!(Forest(t1) == project(Forest(t1))) || !(Forest(t2) == project(Forest(t2))))
        throw std::invalid_argument("bracket_r requires canonical trees");
    // Enumerate unordered trees of the right weight as projections.
    std::map<Forest, char, ForestLess> seen;
    Element out;
    for (const PlanarTree& t : enumerate_trees(t1.weight() + t2.weight(), decor, limits)) {
        Forest canon = project(Forest(t));
        if (!seen.emplace(canon, 1).second) continue;
        mpz_class c = cut_count_r(Forest(t1), Forest(t2), canon, limits) -
                      cut_count_r(Forest(t2), Forest(t1), canon, limits);
        if (c != 0) out.add_term(canon, RatScalar(c));
    }
    return out;
}

namespace {

PlanarTree graft_at_vertex(const PlanarTree& t, int target, int& next, const Forest& scions) {
    int v = next++;
    std::vector<PlanarTree> kids;
    for (const PlanarTree& c : t.children()) kids.push_back(graft_at_vertex(c, target, next, scions));
    if (v == target)
        for (const PlanarTree& s : scions.trees()) kids.push_back(s);
    return PlanarTree(t.decoration(), std::move(kids));
}

}  // namespace

Element graft_average(const Forest& f, const Forest& g) {
    if (!is_canonical(f) || !is_canonical(g))
        throw std::invalid_argument("graft_average requires canonical forests");
    if (g.empty()) return Element::zero();
    Element out;
    RatScalar inv_weight(1, g.weight());
    for (std::size_t i = 0; i < g.trees().size(); ++i) {
        const PlanarTree& host = g.trees()[i];
        for (int v = 0; v < host.weight(); ++v) {
            int next = 0;
            PlanarTree grafted = graft_at_vertex(host, v, next, f);
            std::vector<PlanarTree> trees = g.trees();
            trees[i] = grafted;
            out.add_term(project(Forest(std::move(trees))), inv_weight);
        }
    }
    return out;
}

}  // namespace treealg
