#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <vector>

#include "treealg/forest.hpp"

namespace treealg {

// Exact rational scalar; always stored reduced with positive denominator.
using RatScalar = mpq_class;

RatScalar rat_from_string(const std::string& text);   // "p" or "p/q"
std::string rat_to_string(const RatScalar& q);

// Finite linear combination of forests with rational coefficients.
// Terms iterate in the canonical ascending forest order; zero coefficients
// are never stored.
class Element {
public:
    using Terms = std::map<Forest, RatScalar, ForestLess>;

    Element() = default;
    static Element zero() { return Element(); }
    static Element one() { return monomial(Forest()); }
    static Element monomial(const Forest& f, const RatScalar& c = 1);

    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }

    RatScalar coeff(const Forest& f) const;
    void add_term(const Forest& f, const RatScalar& c);

    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);  // concatenation product
    Element operator-() const;

    bool operator==(const Element& other) const { return terms_ == other.terms_; }

private:
    Terms terms_;
};

Element scale(const RatScalar& c, const Element& a);
RatScalar counit(const Element& a);
Element homogeneous_part(const Element& a, int n);
int max_weight(const Element& a);

// Applies a linear map given on the forest basis.
Element apply_linear(const Element& a, const std::function<Element(const Forest&)>& f);

// Sparse linear combination of k-tuples of forests.
class TensorK {
public:
    using Key = std::vector<Forest>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const;
    };
    using Terms = std::map<Key, RatScalar, KeyLess>;

    explicit TensorK(int arity) : arity_(arity) {
        if (arity < 1) throw std::invalid_argument("tensor arity must be >= 1");
    }
    static TensorK pure(std::vector<Forest> factors, const RatScalar& c = 1);
    static TensorK of_element(const Element& a);  // arity 1

    int arity() const { return arity_; }
    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const RatScalar& c);

    TensorK& operator+=(const TensorK& other);
    TensorK& operator-=(const TensorK& other);
    friend TensorK operator+(TensorK a, const TensorK& b) { return a += b; }
    friend TensorK operator-(TensorK a, const TensorK& b) { return a -= b; }
    TensorK operator-() const;

    bool operator==(const TensorK& other) const {
        return arity_ == other.arity_ && terms_ == other.terms_;
    }

private:
    int arity_;
    Terms terms_;
};

TensorK scale(const RatScalar& c, const TensorK& a);

// Componentwise concatenation product; arities must agree.
TensorK tensor_mul(const TensorK& a, const TensorK& b);

// a (x) b as a tensor of arity a.arity() + b.arity().
TensorK tensor_concat(const TensorK& a, const TensorK& b);
TensorK tensor_of(const Element& a, const Element& b);

// Replaces factor i by the expansion f(forest); the result has arity
// arity + (arity of f) - 1.
TensorK apply_at_factor(const TensorK& t, int i,
                        const std::function<TensorK(const Forest&)>& f);

// Replaces factor i by a scalar via the counit; arity must be >= 2.
TensorK contract_counit(const TensorK& t, int i);

Element factor_product(const TensorK& t);  // multiplies the factors of each term

}  // namespace treealg
