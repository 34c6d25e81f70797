#pragma once

#include "treealg/algebra.hpp"
#include "treealg/hopf.hpp"
#include "treealg/linalg.hpp"

namespace treealg {

// Linear combination expressed in the dual basis (e_F); keys are the indexing
// forests. Brackets live here with small support even though their monomial
// expansions are dense.
struct EElement {
    Element coords;

    bool is_zero() const { return coords.is_zero(); }
    bool operator==(const EElement& other) const { return coords == other.coords; }
};

EElement e_monomial(const Forest& f, const RatScalar& c = 1);
EElement e_add(EElement a, const EElement& b);
EElement e_scale(const RatScalar& c, const EElement& a);

// Hopf pairing engine with memoized recursion and per-weight basis tables.
class PairingContext {
public:
    explicit PairingContext(DecorationSet decor = {}, Limits limits = {})
        : decor_(std::move(decor)), limits_(limits) {}

    const DecorationSet& decor() const { return decor_; }
    const Limits& limits() const { return limits_; }

    // (F, G) by the defining recursion; values are natural numbers.
    mpz_class pair_forests(const Forest& f, const Forest& g);
    RatScalar pair(const Element& x, const Element& y);

    // (F, G) as the count of order-compatible, decoration-preserving bijections.
    mpz_class pair_combinatorial(const Forest& f, const Forest& g);

    struct WeightTable {
        std::vector<Forest> basis;                 // ascending order
        std::map<Forest, int, ForestLess> index;
        IntMatrix gram{0, 0};                      // A'_n
        IntMatrix dual{0, 0};                      // P'_n = inverse of A'_n
    };
    const WeightTable& table(int n);

    IntMatrix gram_matrix(int n);
    Element dual_element(const Forest& f);                     // e_F in the forest basis
    std::map<Forest, Element, ForestLess> dual_basis(int n);

    // Recomputes (F_i, m(F_j)) triangularity in the m-sorted order and the
    // Gram determinant.
    struct MirrorDiagnostics {
        mpz_class det;
        bool unimodular = false;
        bool triangular = false;
    };
    MirrorDiagnostics mirror_diagnostics(int n);
    bool dual_pair_check(int n);  // (e_F, G) = delta via the pairing recursion

    // Basis changes between the forest basis and the dual basis, degree by degree.
    EElement to_dual_basis(const Element& x);
    Element from_dual_basis(const EElement& x);

private:
    DecorationSet decor_;
    Limits limits_;
    std::map<std::pair<Forest, Forest>, mpz_class,
             bool (*)(const std::pair<Forest, Forest>&, const std::pair<Forest, Forest>&)>
        memo_{&PairingContext::pair_key_less};
    std::map<int, WeightTable> tables_;

    static bool pair_key_less(const std::pair<Forest, Forest>& a,
                              const std::pair<Forest, Forest>& b);
};

}  // namespace treealg
