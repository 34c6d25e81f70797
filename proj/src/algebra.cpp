#include "treealg/algebra.hpp"

namespace treealg {

RatScalar rat_from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rat_to_string(const RatScalar& q) { return q.get_str(); }

Element Element::monomial(const Forest& f, const RatScalar& c) {
    Element e;
    e.add_term(f, c);
    return e;
}

RatScalar Element::coeff(const Forest& f) const {
    auto it = terms_.find(f);
    return it == terms_.end() ? RatScalar(0) : it->second;
}

void Element::add_term(const Forest& f, const RatScalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(f, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& other) {
    for (const auto& [f, c] : other.terms_) add_term(f, c);
    return *this;
}

Element& Element::operator-=(const Element& other) {
    for (const auto& [f, c] : other.terms_) add_term(f, -c);
    return *this;
}

Element Element::operator-() const { return scale(-1, *this); }

Element operator*(const Element& a, const Element& b) {
    Element out;
    for (const auto& [fa, ca] : a.terms())
        for (const auto& [fb, cb] : b.terms()) out.add_term(fa.concat(fb), ca * cb);
    return out;
}

Element scale(const RatScalar& c, const Element& a) {
    Element out;
    if (c == 0) return out;
    for (const auto& [f, k] : a.terms()) out.add_term(f, c * k);
    return out;
}

RatScalar counit(const Element& a) { return a.coeff(Forest()); }

Element homogeneous_part(const Element& a, int n) {
    Element out;
    for (const auto& [f, c] : a.terms())
        if (f.weight() == n) out.add_term(f, c);
    return out;
}

int max_weight(const Element& a) {
    int n = 0;
    for (const auto& [f, c] : a.terms()) n = std::max(n, f.weight());
    return n;
}

Element apply_linear(const Element& a, const std::function<Element(const Forest&)>& f) {
    Element out;
    for (const auto& [g, c] : a.terms()) out += scale(c, f(g));
    return out;
}

bool TensorK::KeyLess::operator()(const Key& a, const Key& b) const {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        Ordering c = compare_forests(a[i], b[i]);
        if (c != Ordering::EQ) return c == Ordering::LT;
    }
    return a.size() < b.size();
}

TensorK TensorK::pure(std::vector<Forest> factors, const RatScalar& c) {
    TensorK t(static_cast<int>(factors.size()));
    t.add_term(std::move(factors), c);
    return t;
}

TensorK TensorK::of_element(const Element& a) {
    TensorK t(1);
    for (const auto& [f, c] : a.terms()) t.add_term({f}, c);
    return t;
}

void TensorK::add_term(const Key& k, const RatScalar& c) {
    if (static_cast<int>(k.size()) != arity_)
        throw std::invalid_argument("tensor term arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorK& TensorK::operator+=(const TensorK& other) {
    if (arity_ != other.arity_) throw std::invalid_argument("tensor arity mismatch");
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
}

TensorK& TensorK::operator-=(const TensorK& other) {
    if (arity_ != other.arity_) throw std::invalid_argument("tensor arity mismatch");
    for (const auto& [k, c] : other.terms_) add_term(k, -c);
    return *this;
}

TensorK TensorK::operator-() const { return scale(-1, *this); }

TensorK scale(const RatScalar& c, const TensorK& a) {
    TensorK out(a.arity());
    if (c == 0) return out;
    for (const auto& [k, q] : a.terms()) out.add_term(k, c * q);
    return out;
}

TensorK tensor_mul(const TensorK& a, const TensorK& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("tensor arity mismatch");
    TensorK out(a.arity());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            TensorK::Key k;
            k.reserve(ka.size());
            for (std::size_t i = 0; i < ka.size(); ++i) k.push_back(ka[i].concat(kb[i]));
            out.add_term(k, ca * cb);
        }
    return out;
}

TensorK tensor_concat(const TensorK& a, const TensorK& b) {
    TensorK out(a.arity() + b.arity());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            TensorK::Key k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            out.add_term(k, ca * cb);
        }
    return out;
}

TensorK tensor_of(const Element& a, const Element& b) {
    return tensor_concat(TensorK::of_element(a), TensorK::of_element(b));
}

TensorK apply_at_factor(const TensorK& t, int i,
                        const std::function<TensorK(const Forest&)>& f) {
    if (i < 0 || i >= t.arity()) throw std::invalid_argument("factor index out of range");
    int out_arity = -1;
    TensorK out(1);
    bool first = true;
    for (const auto& [k, c] : t.terms()) {
        TensorK expansion = f(k[static_cast<std::size_t>(i)]);
        if (first) {
            out_arity = t.arity() - 1 + expansion.arity();
            out = TensorK(out_arity);
            first = false;
        }
        if (expansion.arity() + t.arity() - 1 != out_arity)
            throw std::invalid_argument("inconsistent expansion arity");
        for (const auto& [ke, ce] : expansion.terms()) {
            TensorK::Key key(k.begin(), k.begin() + i);
            key.insert(key.end(), ke.begin(), ke.end());
            key.insert(key.end(), k.begin() + i + 1, k.end());
            out.add_term(key, c * ce);
        }
    }
    if (first) {
        // Empty tensor: assume the conventional coproduct-style expansion arity 2.
        return TensorK(t.arity() + 1);
    }
    return out;
}

TensorK contract_counit(const TensorK& t, int i) {
    if (t.arity() < 2) throw std::invalid_argument("cannot contract an arity-1 tensor");
    if (i < 0 || i >= t.arity()) throw std::invalid_argument("factor index out of range");
    TensorK out(t.arity() - 1);
    for (const auto& [k, c] : t.terms()) {
        if (!k[static_cast<std::size_t>(i)].empty()) continue;  // counit kills non-unit forests
        TensorK::Key key(k.begin(), k.begin() + i);
        key.insert(key.end(), k.begin() + i + 1, k.end());
        out.add_term(key, c);
    }
    return out;
}

Element factor_product(const TensorK& t) {
    Element out;
    for (const auto& [k, c] : t.terms()) {
        Forest prod;
        for (const Forest& f : k) prod = prod.concat(f);
        out.add_term(prod, c);
    }
    return out;
}

}  // namespace treealg
