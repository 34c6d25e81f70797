#pragma once

#include "treealg/pairing.hpp"

namespace treealg {

// Unordered rooted trees and forests are carried by canonical planar
// representatives: children (and forest factors) sorted by a fixed total
// order, so equality of canonical forms is isomorphism of the unordered
// objects.
Ordering rtree_compare(const PlanarTree& a, const PlanarTree& b);
PlanarTree canonical_tree(const PlanarTree& t);
Forest project(const Forest& f);
bool is_canonical(const Forest& f);

// Linear combinations of canonical forests reuse Element/TensorK.
Element project(const Element& x);
TensorK project(const TensorK& t);

// All planar forests mapping onto the canonical forest.
std::vector<Forest> fiber(const Forest& canonical, const Limits& limits = {});

// Coproduct and antipode of the quotient, computed on the canonical lift.
TensorK coproduct_r(const Forest& canonical, const Limits& limits = {});
Element antipode_r(const Forest& canonical, const Limits& limits = {});

// Sum of the planar dual-basis elements over the fiber.
EElement ebar_e(const Forest& canonical, const Limits& limits = {});
Element ebar(const Forest& canonical, PairingContext& ctx);

// Number of admissible cuts of the canonical forest with the given parts
// (edges individuated on the canonical representative).
mpz_class cut_count_r(const Forest& f, const Forest& g, const Forest& h,
                      const Limits& limits = {});

// Structure constants of the quotient's primitive Lie algebra.
Element bracket_r(const PlanarTree& t1, const PlanarTree& t2, const DecorationSet& decor,
                  const Limits& limits = {});

// Averaged grafting: all trees of f attached to one vertex of g, averaged
// over the vertices of g; zero when g is the unit.
Element graft_average(const Forest& f, const Forest& g);

}  // namespace treealg
