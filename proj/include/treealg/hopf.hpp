#pragma once

#include "treealg/algebra.hpp"

namespace treealg {

// One entry per admissible cut (empty and total cuts included); a pruned/trunk
// pair may repeat when distinct cuts produce it.
std::vector<std::pair<Forest, Forest>> admissible_cuts(const Forest& f, const Limits& limits = {});

// Admissible cuts avoiding every leftmost-sibling edge (empty and total included).
std::vector<std::pair<Forest, Forest>> left_admissible_cuts(const Forest& f,
                                                            const Limits& limits = {});

TensorK coproduct(const Forest& f, const Limits& limits = {});
TensorK coproduct(const Element& x, const Limits& limits = {});

// Reduced coproduct D~(x) = D(x) - x(x)1 - 1(x)x and its left iterates;
// reduced_coproduct_iter(x, k) has arity k+1 (k = 0 returns x itself).
TensorK reduced_coproduct(const Element& x, const Limits& limits = {});
TensorK reduced_coproduct_iter(const Element& x, int k, const Limits& limits = {});

// Minimal n with D~^n applied to x - counit(x)*1 vanishing; errors on x = 0.
int deg_p(const Element& x, const Limits& limits = {});

// Antipode by the recursion S(t) = -t - sum S(t')t'' over proper cuts.
Element antipode_recursive(const Element& x, const Limits& limits = {});

// Antipode as the signed sum over all edge subsets; components are reordered
// by descending position of their roots in the total vertex order.
Element antipode_cuts(const Forest& f, const Limits& limits = {});
Element antipode_cuts(const Element& x, const Limits& limits = {});

// B_d^+ extended linearly, and the convolution checks m(S(x)Id)Delta.
Element bplus_linear(const Element& x, Decoration d);
Element convolve_left(const std::function<Element(const Element&)>& s, const Element& x,
                      const Limits& limits = {});
Element convolve_right(const std::function<Element(const Element&)>& s, const Element& x,
                       const Limits& limits = {});

}  // namespace treealg
