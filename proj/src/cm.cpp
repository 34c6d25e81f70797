#include "treealg/cm.hpp"

namespace treealg {

namespace {

const DecorationSet& undecorated() {
    static const DecorationSet set;
    return set;
}

mpz_class binom(long n, long k) {
    if (k == 0) return 1;  // including negative upper index (empty selection)
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

// All compositions of k into l positive parts.
void compositions(int k, int l, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (l == 1) {
        cur.push_back(k);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = 1; a + l - 1 <= k; ++a) {
        cur.push_back(a);
        compositions(k - a, l - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Element cm_u(int n, const Limits& limits) {
    if (n < 1) throw std::invalid_argument("u_n requires n >= 1");
    Element out;
    for (const Forest& f : enumerate_forests(n, undecorated(), limits)) out.add_term(f, 1);
    return out;
}

Element cm_v(int n, const Limits& limits) {
    if (n < 1) throw std::invalid_argument("v_n requires n >= 1");
    Element out;
    for (const PlanarTree& t : enumerate_trees(n, undecorated(), limits))
        out.add_term(Forest(t), 1);
    return out;
}

Element eval_word(const CmWord& w, const Limits& limits) {
    Element out = Element::one();
    for (const CmLetter& l : w)
        out = out * (l.kind == CmKind::u ? cm_u(l.index, limits) : cm_v(l.index, limits));
    return out;
}

Element eval_poly(const VPolynomial& p, const Limits& limits) {
    Element out;
    for (const auto& [w, c] : p) out += scale(c, eval_word(w, limits));
    return out;
}

TensorK eval_poly_tensor(const VPolyTensor& t, const Limits& limits) {
    TensorK out(2);
    for (const auto& [ww, c] : t)
        out += scale(c, tensor_of(eval_word(ww.first, limits), eval_word(ww.second, limits)));
    return out;
}

VPolyTensor cm_coproduct_formula(CmKind kind, CmCoproduct which, int n) {
    if (n < 1) throw std::invalid_argument("coproduct formula requires n >= 1");
    VPolyTensor out;
    for (int k = 1; k <= n - 1; ++k) {
        for (int l = 1; l <= k; ++l) {
            long top;
            if (kind == CmKind::v)
                top = which == CmCoproduct::plain ? 2L * (n - k) + l - 2 : (n - k) + l - 2;
            else
                top = which == CmCoproduct::plain ? 2L * (n - k) + l : (n - k) + l;
            mpz_class c = binom(top, l);
            if (c == 0) continue;
            std::vector<std::vector<int>> parts;
            std::vector<int> cur;
            compositions(k, l, cur, parts);
            CmWord right{CmLetter{kind, n - k}};
            for (const auto& comp : parts) {
                CmWord left;
                for (int a : comp) left.push_back(CmLetter{CmKind::v, a});
                out[{left, right}] += RatScalar(c);
            }
        }
    }
    return out;
}

Element cm_z(int n, const Limits& limits) {
    Element out = scale(2, cm_u(n, limits));
    for (int k = 1; k <= n - 1; ++k) out += cm_u(k, limits) * cm_u(n - k, limits);
    return out;
}

Element cm_w(int n, const Limits& limits) {
    std::vector<Element> w;
    w.reserve(static_cast<std::size_t>(n) + 1);
    w.emplace_back();  // unused slot 0
    for (int m = 1; m <= n; ++m) {
        Element out = scale(RatScalar(1, 2), cm_u(m, limits));
        for (int i = 1; i <= m - 1; ++i)
            out -= scale(RatScalar(1, 2),
                         w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(m - i)]);
        w.push_back(std::move(out));
    }
    return w[static_cast<std::size_t>(n)];
}

namespace {

VPolynomial poly_mul(const VPolynomial& a, const VPolynomial& b) {
    VPolynomial out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            CmWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out[w] += ca * cb;
            if (out[w] == 0) out.erase(w);
        }
    return out;
}

}  // namespace

VPolynomial v_as_u_poly(int n) {
    // v_n = u_n - sum_{k<n} v_k u_{n-k}
    std::vector<VPolynomial> v(static_cast<std::size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) {
        VPolynomial out;
        out[{CmLetter{CmKind::u, m}}] = 1;
        for (int k = 1; k <= m - 1; ++k) {
            VPolynomial tail;
            tail[{CmLetter{CmKind::u, m - k}}] = 1;
            for (auto& [w, c] : poly_mul(v[static_cast<std::size_t>(k)], tail)) {
                out[w] -= c;
                if (out[w] == 0) out.erase(w);
            }
        }
        v[static_cast<std::size_t>(m)] = std::move(out);
    }
    return v[static_cast<std::size_t>(n)];
}

VPolynomial word_as_u_poly(const CmWord& w) {
    VPolynomial out;
    out[{}] = 1;
    for (const CmLetter& l : w) {
        VPolynomial letter;
        if (l.kind == CmKind::u)
            letter[{l}] = 1;
        else
            letter = v_as_u_poly(l.index);
        out = poly_mul(out, letter);
    }
    return out;
}

Element phi_of_u_poly(const VPolynomial& p, const Limits& limits) {
    Element out;
    for (const auto& [w, c] : p) {
        Element prod = Element::one();
        for (const CmLetter& l : w) {
            if (l.kind != CmKind::u) throw std::invalid_argument("expected a u-polynomial");
            prod = prod * cm_z(l.index, limits);
        }
        out += scale(c, prod);
    }
    return out;
}

PhiReport phi_check(int n_max, const Limits& limits) {
    PhiReport report;
    for (int n = 1; n <= n_max; ++n) {
        // Phi(w_n) = u_n: w_n as a u-polynomial is its defining recursion.
        // Rebuild it symbolically to stay inside the subalgebra.
        std::map<int, VPolynomial> w_poly;
        for (int m = 1; m <= n; ++m) {
            VPolynomial p;
            p[{CmLetter{CmKind::u, m}}] = RatScalar(1, 2);
            for (int i = 1; i <= m - 1; ++i)
                for (auto& [w, c] : poly_mul(w_poly[i], w_poly[m - i])) {
                    p[w] -= RatScalar(1, 2) * c;
                    if (p[w] == 0) p.erase(w);
                }
            w_poly[m] = std::move(p);
        }
        if (phi_of_u_poly(w_poly[n], limits) != cm_u(n, limits)) {
            report.ok = false;
            report.failed_at = n;
            report.detail = "Phi(w_n) != u_n";
            return report;
        }

        // Delta(z_n) = (Phi (x) Phi) Delta_Fr(u_n), via the closed form of
        // the reduced Fr coproduct of u_n.
        TensorK lhs = coproduct(cm_z(n, limits), limits);
        TensorK rhs = tensor_of(cm_z(n, limits), Element::one());
        rhs += tensor_of(Element::one(), cm_z(n, limits));
        for (const auto& [ww, c] : cm_coproduct_formula(CmKind::u, CmCoproduct::fr, n)) {
            Element left = phi_of_u_poly(word_as_u_poly(ww.first), limits);
            Element right = phi_of_u_poly(word_as_u_poly(ww.second), limits);
            rhs += scale(c, tensor_of(left, right));
        }
        if (!(lhs == rhs)) {
            report.ok = false;
            report.failed_at = n;
            report.detail = "Delta(Phi(u_n)) != (Phi (x) Phi) Delta_Fr(u_n)";
            return report;
        }
    }
    return report;
}

}  // namespace treealg
