#include "treealg/pairing.hpp"

#include <algorithm>
#include <cassert>

namespace treealg {

EElement e_monomial(const Forest& f, const RatScalar& c) { return EElement{Element::monomial(f, c)}; }

EElement e_add(EElement a, const EElement& b) {
    a.coords += b.coords;
    return a;
}

EElement e_scale(const RatScalar& c, const EElement& a) { return EElement{scale(c, a.coords)}; }

bool PairingContext::pair_key_less(const std::pair<Forest, Forest>& a,
                                   const std::pair<Forest, Forest>& b) {
    Ordering c = compare_forests(a.first, b.first);
    if (c != Ordering::EQ) return c == Ordering::LT;
    return compare_forests(a.second, b.second) == Ordering::LT;
}

mpz_class PairingContext::pair_forests(const Forest& f, const Forest& g) {
    if (f.weight() != g.weight()) return 0;
    if (f.empty()) return 1;
    // The form is symmetric; normalize the memo key.
    std::pair<Forest, Forest> key =
        compare_forests(f, g) == Ordering::GT ? std::make_pair(g, f) : std::make_pair(f, g);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    mpz_class value = 0;
    if (f.length() == 1) {
        // (B_d^+(F'), G) = (F', gamma_d(G))
        const PlanarTree& t = f.trees()[0];
        auto g2 = gamma(g, t.decoration());
        if (g2) value = pair_forests(bminus(t), *g2);
    } else {
        // (t_1 F_2, G) = sum over cuts of G of (t_1, P)(F_2, R)
        Forest first{f.trees()[0]};
        std::vector<PlanarTree> rest_trees(f.trees().begin() + 1, f.trees().end());
        Forest rest(std::move(rest_trees));
        for (const auto& [p, r] : admissible_cuts(g, limits_)) {
            if (p.weight() != first.weight()) continue;
            mpz_class left = pair_forests(first, p);
            if (left == 0) continue;
            value += left * pair_forests(rest, r);
        }
    }
    memo_.emplace(std::move(key), value);
    return value;
}

RatScalar PairingContext::pair(const Element& x, const Element& y) {
    RatScalar out = 0;
    for (const auto& [f, cf] : x.terms())
        for (const auto& [g, cg] : y.terms()) {
            if (f.weight() != g.weight()) continue;
            out += cf * cg * RatScalar(pair_forests(f, g));
        }
    return out;
}

namespace {

struct BijectionSearch {
    const ForestStructure& sf;
    const ForestStructure& sg;
    std::vector<std::vector<char>> haut_f, gauche_f, haut_g, gauche_g;
    std::vector<int> image;
    std::vector<char> used;
    mpz_class count = 0;

    BijectionSearch(const ForestStructure& a, const ForestStructure& b) : sf(a), sg(b) {
        auto fill = [](const ForestStructure& s, std::vector<std::vector<char>>& haut,
                       std::vector<std::vector<char>>& gauche) {
            int n = s.size();
            haut.assign(std::size_t(n), std::vector<char>(std::size_t(n), 0));
            gauche.assign(std::size_t(n), std::vector<char>(std::size_t(n), 0));
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    haut[std::size_t(x)][std::size_t(y)] = ge_haut(s, x, y);
                    gauche[std::size_t(x)][std::size_t(y)] = ge_gauche(s, x, y);
                }
        };
        fill(sf, haut_f, gauche_f);
        fill(sg, haut_g, gauche_g);
        image.assign(std::size_t(sf.size()), -1);
        used.assign(std::size_t(sg.size()), 0);
    }

    bool compatible(int x, int fx) const {
        if (sf.dec[std::size_t(x)] != sg.dec[std::size_t(fx)]) return false;
        for (int y = 0; y < x; ++y) {
            int fy = image[std::size_t(y)];
            if (haut_f[std::size_t(x)][std::size_t(y)] && !gauche_g[std::size_t(fx)][std::size_t(fy)]) return false;
            if (haut_f[std::size_t(y)][std::size_t(x)] && !gauche_g[std::size_t(fy)][std::size_t(fx)]) return false;
            if (haut_g[std::size_t(fx)][std::size_t(fy)] && !gauche_f[std::size_t(x)][std::size_t(y)]) return false;
            if (haut_g[std::size_t(fy)][std::size_t(fx)] && !gauche_f[std::size_t(y)][std::size_t(x)]) return false;
        }
        return true;
    }

    void run(int x) {
        if (x == sf.size()) {
            ++count;
            return;
        }
        for (int fx = 0; fx < sg.size(); ++fx) {
            if (used[std::size_t(fx)] || !compatible(x, fx)) continue;
            used[std::size_t(fx)] = 1;
            image[std::size_t(x)] = fx;
            run(x + 1);
            used[std::size_t(fx)] = 0;
        }
    }
};

}  // namespace

mpz_class PairingContext::pair_combinatorial(const Forest& f, const Forest& g) {
    if (f.weight() != g.weight()) return 0;
    if (f.empty()) return 1;
    if (f.weight() > 10)
        throw resource_limit_error("combinatorial pairing is factorial in the weight");
    // Decoration multisets must match.
    std::vector<int> df(std::size_t(decor_.size()), 0), dg(std::size_t(decor_.size()), 0);
    ForestStructure sf(f), sg(g);
    for (Decoration d : sf.dec) ++df[std::size_t(d)];
    for (Decoration d : sg.dec) ++dg[std::size_t(d)];
    if (df != dg) return 0;
    BijectionSearch search(sf, sg);
    search.run(0);
    return search.count;
}

const PairingContext::WeightTable& PairingContext::table(int n) {
    auto it = tables_.find(n);
    if (it != tables_.end()) return it->second;
    WeightTable t;
    t.basis = enumerate_forests(n, decor_, limits_);
    int r = static_cast<int>(t.basis.size());
    for (int i = 0; i < r; ++i) t.index.emplace(t.basis[std::size_t(i)], i);
    t.gram = IntMatrix(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            mpz_class v = pair_forests(t.basis[std::size_t(i)], t.basis[std::size_t(j)]);
            t.gram.at(i, j) = v;
            t.gram.at(j, i) = v;
        }
    t.dual = integral_inverse(t.gram);
    return tables_.emplace(n, std::move(t)).first->second;
}

IntMatrix PairingContext::gram_matrix(int n) { return table(n).gram; }

Element PairingContext::dual_element(const Forest& f) {
    if (f.empty()) return Element::one();
    const WeightTable& t = table(f.weight());
    int j = t.index.at(f);
    Element out;
    for (int i = 0; i < static_cast<int>(t.basis.size()); ++i) {
        const mpz_class& c = t.dual.at(i, j);
        if (c != 0) out.add_term(t.basis[std::size_t(i)], RatScalar(c));
    }
    return out;
}

std::map<Forest, Element, ForestLess> PairingContext::dual_basis(int n) {
    const WeightTable& t = table(n);
    std::map<Forest, Element, ForestLess> out;
    for (const Forest& f : t.basis) out.emplace(f, dual_element(f));
    return out;
}

PairingContext::MirrorDiagnostics PairingContext::mirror_diagnostics(int n) {
    MirrorDiagnostics diag;
    const WeightTable& t = table(n);
    int r = static_cast<int>(t.basis.size());
    diag.det = bareiss_det(t.gram);
    diag.unimodular = (diag.det == 1 || diag.det == -1);
    // Index the basis so that m(F_1) < ... < m(F_r); then (F_i, m(F_j)) is
    // lower unitriangular.
    std::vector<int> order(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) order[std::size_t(i)] = i;
    std::vector<Forest> mirrored;
    mirrored.reserve(std::size_t(r));
    for (const Forest& f : t.basis) mirrored.push_back(mirror(f));
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return compare_forests(mirrored[std::size_t(a)], mirrored[std::size_t(b)]) == Ordering::LT;
    });
    diag.triangular = true;
    for (int i = 0; i < r && diag.triangular; ++i)
        for (int j = 0; j < r; ++j) {
            const Forest& fi = t.basis[std::size_t(order[std::size_t(i)])];
            const Forest& mfj = mirrored[std::size_t(order[std::size_t(j)])];
            mpz_class v = pair_forests(fi, mfj);
            if (i == j && v != 1) diag.triangular = false;
            if (j > i && v != 0) diag.triangular = false;
        }
    return diag;
}

bool PairingContext::dual_pair_check(int n) {
    const WeightTable& t = table(n);
    for (const Forest& f : t.basis) {
        Element ef = dual_element(f);
        for (const Forest& g : t.basis) {
            RatScalar expected = (f == g) ? 1 : 0;
            if (pair(ef, Element::monomial(g)) != expected) return false;
        }
    }
    return true;
}

EElement PairingContext::to_dual_basis(const Element& x) {
    // Coordinates in the dual basis: c_F = (x, F), weight by weight.
    EElement out;
    for (int n = 0; n <= max_weight(x); ++n) {
        Element xn = homogeneous_part(x, n);
        if (xn.is_zero()) continue;
        if (n == 0) {
            out.coords.add_term(Forest(), counit(xn));
            continue;
        }
        const WeightTable& t = table(n);
        for (const Forest& f : t.basis) {
            RatScalar c = pair(xn, Element::monomial(f));
            if (c != 0) out.coords.add_term(f, c);
        }
    }
    return out;
}

Element PairingContext::from_dual_basis(const EElement& x) {
    Element out;
    for (const auto& [f, c] : x.coords.terms()) out += scale(c, dual_element(f));
    return out;
}

}  // namespace treealg
