#pragma once

#include "treealg/pairing.hpp"

namespace treealg {

// Planar insertion slot around a vertex: slot i is the gap left of child i,
// slot = fanout the rightmost gap. A tree of weight n has 2n-1 angles.
struct Angle {
    int vertex = 0;
    int slot = 0;
    bool operator==(const Angle&) const = default;
};

// All angles of t in the left-to-right sweep order; the leftmost angle of a
// vertex is the one with slot 0.
std::vector<Angle> angles(const PlanarTree& t);

// Grafting of the scion forest onto the target: one angle per scion, weakly
// increasing as positions into angles(target); ties put earlier scions left.
struct Grafting {
    PlanarTree target;
    Forest scions;
    std::vector<int> slots;  // indices into angles(target), weakly increasing
};

PlanarTree graft(const Grafting& g);

// All weakly increasing slot sequences; count is C(m + a - 1, m).
std::vector<Grafting> graftings(const Forest& scions, const PlanarTree& target,
                                const Limits& limits = {});

// Number of (left-)admissible cuts c of H with pruned part F and trunk G.
mpz_class cut_count(const Forest& f, const Forest& g, const Forest& h, bool left_only,
                    const Limits& limits = {});

// Lie bracket of dual-basis primitives, two routes.
EElement bracket_cuts(const PlanarTree& t1, const PlanarTree& t2, const DecorationSet& decor,
                      const Limits& limits = {});
EElement bracket_graft(const PlanarTree& t1, const PlanarTree& t2);
EElement bracket_cuts(const EElement& x, const EElement& y, const DecorationSet& decor,
                      const Limits& limits = {});

// Sums of cut counts over all trees (forests) of the matching weight; these
// close to binomial coefficients.
std::pair<mpz_class, mpz_class> counting_sums(const Forest& f, const PlanarTree& t,
                                              const DecorationSet& decor,
                                              const Limits& limits = {});
std::pair<mpz_class, mpz_class> forest_counting_sums(const Forest& f, const Forest& g,
                                                     const DecorationSet& decor,
                                                     const Limits& limits = {});

// e_F |> e_t = e_{Ft} extended bilinearly; every key of p must be a single tree.
EElement top_product(const EElement& x, const EElement& p);
EElement top_product(const EElement& x, std::span<const PlanarTree> trees);

// Algebra endomorphism determined by a choice of primitive images P_t,
// tabulated on all forests of weight <= max_weight.
std::map<Forest, Element, ForestLess> endo_from_primitives(
    const std::map<PlanarTree, Element, TreeLess>& primitive_images, int max_weight,
    PairingContext& ctx);

}  // namespace treealg
