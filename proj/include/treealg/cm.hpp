#pragma once

#include "treealg/frabetti.hpp"
#include "treealg/hopf.hpp"

namespace treealg {

// Words and polynomials in the graded generators u_n, v_n (noncommutative:
// words keep their letter order).
enum class CmKind { u, v };
struct CmLetter {
    CmKind kind;
    int index;  // >= 1
    auto operator<=>(const CmLetter&) const = default;
};
using CmWord = std::vector<CmLetter>;
using VPolynomial = std::map<CmWord, RatScalar>;
using VPolyTensor = std::map<std::pair<CmWord, CmWord>, RatScalar>;

// u_n: sum of all forests of weight n; v_n: sum of all trees (D = {*}).
Element cm_u(int n, const Limits& limits = {});
Element cm_v(int n, const Limits& limits = {});
Element eval_word(const CmWord& w, const Limits& limits = {});
Element eval_poly(const VPolynomial& p, const Limits& limits = {});
TensorK eval_poly_tensor(const VPolyTensor& t, const Limits& limits = {});

// Closed forms of the reduced coproducts of u_n and v_n for both coproducts;
// left legs are words in the v generators, right legs single letters.
enum class CmCoproduct { plain, fr };
VPolyTensor cm_coproduct_formula(CmKind kind, CmCoproduct which, int n);

// Change of variables: z_n = 2u_n + sum u_k u_{n-k}; w defined by the mirror
// recursion with rational coefficients.
Element cm_z(int n, const Limits& limits = {});
Element cm_w(int n, const Limits& limits = {});

// v_n rewritten as a polynomial in the u generators.
VPolynomial v_as_u_poly(int n);
VPolynomial word_as_u_poly(const CmWord& w);

// The algebra morphism sending u_n to z_n, applied to a u-polynomial.
Element phi_of_u_poly(const VPolynomial& p, const Limits& limits = {});

struct PhiReport {
    bool ok = true;
    int failed_at = 0;
    std::string detail;
};

// Checks Phi(w_n) = u_n and Delta(z_n) = (Phi (x) Phi) Delta_Fr(u_n) for
// n <= n_max, with both sides fully expanded to forest tensors.
PhiReport phi_check(int n_max, const Limits& limits = {});

}  // namespace treealg
