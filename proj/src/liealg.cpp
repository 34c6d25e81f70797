#include "treealg/liealg.hpp"

#include <algorithm>

namespace treealg {

namespace {

void sweep_angles(const PlanarTree& t, int& next_vertex, std::vector<Angle>& out) {
    int v = next_vertex++;
    int fanout = static_cast<int>(t.children().size());
    for (int i = 0; i < fanout; ++i) {
        out.push_back(Angle{v, i});
        sweep_angles(t.children()[static_cast<std::size_t>(i)], next_vertex, out);
    }
    out.push_back(Angle{v, fanout});
}

}  // namespace

std::vector<Angle> angles(const PlanarTree& t) {
    std::vector<Angle> out;
    int next_vertex = 0;
    sweep_angles(t, next_vertex, out);
    return out;
}

namespace {

PlanarTree rebuild_with_scions(const PlanarTree& t, int& next_vertex,
                               const std::vector<std::vector<std::vector<PlanarTree>>>& at) {
    int v = next_vertex++;
    const auto& slots = at[static_cast<std::size_t>(v)];
    std::vector<PlanarTree> kids;
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        for (const PlanarTree& s : slots[i]) kids.push_back(s);
        kids.push_back(rebuild_with_scions(t.children()[i], next_vertex, at));
    }
    for (const PlanarTree& s : slots[t.children().size()]) kids.push_back(s);
    return PlanarTree(t.decoration(), std::move(kids));
}

std::vector<int> preorder_fanouts(const PlanarTree& t) {
    std::vector<int> fanout;
    std::vector<const PlanarTree*> stack{&t};
    while (!stack.empty()) {
        const PlanarTree* u = stack.back();
        stack.pop_back();
        fanout.push_back(static_cast<int>(u->children().size()));
        for (std::size_t k = u->children().size(); k-- > 0;) stack.push_back(&u->children()[k]);
    }
    return fanout;
}

}  // namespace

PlanarTree graft(const Grafting& g) {
    std::vector<Angle> all = angles(g.target);
    if (g.slots.size() != g.scions.trees().size())
        throw std::invalid_argument("grafting arity mismatch");
    if (!std::is_sorted(g.slots.begin(), g.slots.end()))
        throw std::invalid_argument("grafting slots must be weakly increasing");
    std::vector<int> fanout = preorder_fanouts(g.target);
    // scions assigned to the same angle keep their order: earlier goes left.
    std::vector<std::vector<std::vector<PlanarTree>>> at(fanout.size());
    for (std::size_t v = 0; v < at.size(); ++v)
        at[v].resize(static_cast<std::size_t>(fanout[v]) + 1);
    for (std::size_t i = 0; i < g.slots.size(); ++i) {
        int s = g.slots[i];
        if (s < 0 || s >= static_cast<int>(all.size()))
            throw std::invalid_argument("grafting slot out of range");
        const Angle& a = all[static_cast<std::size_t>(s)];
        at[static_cast<std::size_t>(a.vertex)][static_cast<std::size_t>(a.slot)].push_back(
            g.scions.trees()[i]);
    }
    int next_vertex = 0;
    return rebuild_with_scions(g.target, next_vertex, at);
}

std::vector<Grafting> graftings(const Forest& scions, const PlanarTree& target,
                                const Limits& limits) {
    int m = static_cast<int>(scions.trees().size());
    int a = 2 * target.weight() - 1;
    mpz_class count;
    mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(m + a - 1),
                 static_cast<unsigned long>(m));
    if (count > mpz_class(static_cast<unsigned long>(limits.max_items)))
        throw resource_limit_error("grafting enumeration exceeds the configured cap");
    std::vector<Grafting> out;
    std::vector<int> slots(static_cast<std::size_t>(m), 0);
    while (true) {
        out.push_back(Grafting{target, scions, slots});
        if (m == 0) break;
        int i = m - 1;
        while (i >= 0 && slots[static_cast<std::size_t>(i)] == a - 1) --i;
        if (i < 0) break;
        int v = ++slots[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) slots[static_cast<std::size_t>(j)] = v;
    }
    return out;
}

mpz_class cut_count(const Forest& f, const Forest& g, const Forest& h, bool left_only,
                    const Limits& limits) {
    if (f.weight() + g.weight() != h.weight()) return 0;
    auto cuts = left_only ? left_admissible_cuts(h, limits) : admissible_cuts(h, limits);
    mpz_class n = 0;
    for (const auto& [p, r] : cuts)
        if (p == f && r == g) ++n;
    return n;
}

EElement bracket_cuts(const PlanarTree& t1, const PlanarTree& t2, const DecorationSet& decor,
                      const Limits& limits) {
    const Forest f1(t1), f2(t2);
    EElement out;
    for (const PlanarTree& t : enumerate_trees(t1.weight() + t2.weight(), decor, limits)) {
        long c = 0;
        for (const auto& [p, r] : admissible_cuts(Forest(t), limits)) {
            if (p == f1 && r == f2) ++c;
            if (p == f2 && r == f1) --c;
        }
        if (c != 0) out.coords.add_term(Forest(t), RatScalar(c));
    }
    return out;
}

EElement bracket_graft(const PlanarTree& t1, const PlanarTree& t2) {
    EElement out;
    for (const Grafting& g : graftings(Forest(t1), t2))
        out.coords.add_term(Forest(graft(g)), 1);
    for (const Grafting& g : graftings(Forest(t2), t1))
        out.coords.add_term(Forest(graft(g)), -1);
    return out;
}

EElement bracket_cuts(const EElement& x, const EElement& y, const DecorationSet& decor,
                      const Limits& limits) {
    EElement out;
    for (const auto& [fx, cx] : x.coords.terms())
        for (const auto& [fy, cy] : y.coords.terms()) {
            if (fx.length() != 1 || fy.length() != 1)
                throw std::invalid_argument("bracket arguments must be spanned by trees");
            EElement b = bracket_cuts(fx.trees()[0], fy.trees()[0], decor, limits);
            out.coords += scale(cx * cy, b.coords);
        }
    return out;
}

std::pair<mpz_class, mpz_class> counting_sums(const Forest& f, const PlanarTree& t,
                                              const DecorationSet& decor, const Limits& limits) {
    mpz_class all = 0, left = 0;
    for (const PlanarTree& h : enumerate_trees(f.weight() + t.weight(), decor, limits)) {
        all += cut_count(f, Forest(t), Forest(h), false, limits);
        left += cut_count(f, Forest(t), Forest(h), true, limits);
    }
    return {all, left};
}

std::pair<mpz_class, mpz_class> forest_counting_sums(const Forest& f, const Forest& g,
                                                     const DecorationSet& decor,
                                                     const Limits& limits) {
    mpz_class all = 0, left = 0;
    for (const Forest& h : enumerate_forests(f.weight() + g.weight(), decor, limits)) {
        all += cut_count(f, g, h, false, limits);
        left += cut_count(f, g, h, true, limits);
    }
    return {all, left};
}

EElement top_product(const EElement& x, const EElement& p) {
    EElement out;
    for (const auto& [f, cf] : x.coords.terms())
        for (const auto& [g, cg] : p.coords.terms()) {
            if (g.length() != 1)
                throw std::invalid_argument("right factor of |> must be spanned by trees");
            out.coords.add_term(f.concat(g), cf * cg);
        }
    return out;
}

EElement top_product(const EElement& x, std::span<const PlanarTree> trees) {
    EElement out = x;
    for (const PlanarTree& t : trees) out = top_product(out, e_monomial(Forest(t)));
    return out;
}

std::map<Forest, Element, ForestLess> endo_from_primitives(
    const std::map<PlanarTree, Element, TreeLess>& primitive_images, int max_weight,
    PairingContext& ctx) {
    const Limits& limits = ctx.limits();
    for (const auto& [t, p] : primitive_images)
        if (!reduced_coproduct(p, limits).is_zero())
            throw std::invalid_argument("image of a tree is not primitive");

    std::map<PlanarTree, Element, TreeLess> phi_tree;
    for (int n = 1; n <= max_weight; ++n) {
        for (const PlanarTree& t : enumerate_trees(n, ctx.decor(), limits)) {
            auto pit = primitive_images.find(t);
            if (pit == primitive_images.end())
                throw std::invalid_argument("missing primitive image for a tree of weight " +
                                            std::to_string(n));
            Element value = pit->second;
            // Phi(t) = sum Phi(t') |> P_{t''} + P_t over the reduced coproduct;
            // the right leg of a tree's reduced coproduct is always a tree.
            TensorK red = reduced_coproduct(Element::monomial(Forest(t)), limits);
            for (const auto& [key, c] : red.terms()) {
                const Forest& left = key[0];
                const Forest& right = key[1];
                Element phi_left = Element::one();
                for (const PlanarTree& s : left.trees()) phi_left = phi_left * phi_tree.at(s);
                auto rit = primitive_images.find(right.trees()[0]);
                if (rit == primitive_images.end())
                    throw std::invalid_argument("missing primitive image");
                EElement appended =
                    top_product(ctx.to_dual_basis(phi_left), ctx.to_dual_basis(rit->second));
                value += scale(c, ctx.from_dual_basis(appended));
            }
            phi_tree.emplace(t, std::move(value));
        }
    }

    std::map<Forest, Element, ForestLess> out;
    out.emplace(Forest(), Element::one());
    for (int n = 1; n <= max_weight; ++n)
        for (const Forest& f : enumerate_forests(n, ctx.decor(), limits)) {
            Element value = Element::one();
            for (const PlanarTree& t : f.trees()) value = value * phi_tree.at(t);
            out.emplace(f, std::move(value));
        }
    return out;
}

}  // namespace treealg
