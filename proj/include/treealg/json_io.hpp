#pragma once

#include <json.hpp>

#include "treealg/cm.hpp"
#include "treealg/linalg.hpp"
#include "treealg/pairing.hpp"
#include "treealg/series.hpp"
#include "treealg/shuffle.hpp"

namespace treealg {

using json = nlohmann::json;

// {"d": token, "children": [...]}; a forest is an array of trees, [] the unit.
json tree_to_json(const PlanarTree& t, const DecorationSet& decor);
json forest_to_json(const Forest& f, const DecorationSet& decor);
Forest forest_from_json(const json& j, const DecorationSet& decor);

// {"terms":[{"coeff":"p/q","forest":"..."}]}
json element_to_json(const Element& x, const DecorationSet& decor);
// {"basis":"e","terms":[...]}
json eelement_to_json(const EElement& x, const DecorationSet& decor);
// {"terms":[{"coeff":"p/q","factors":["...","..."]}]}
json tensor_to_json(const TensorK& t, const DecorationSet& decor);

// {"basis":[...], "rows":[["1","0"],...]}
json matrix_to_json(const IntMatrix& m, const std::vector<Forest>& basis,
                    const DecorationSet& decor);

// {"terms":[{"coeff":"p/q","word":[["u",2],["v",1]]}]}
json vpoly_to_json(const VPolynomial& p);
json vpoly_tensor_to_json(const VPolyTensor& t);

// {"word":["a","b"]}
json word_to_json(const Word& w, const GeneratorSet& gens);
json wordlin_to_json(const WordLin& x, const GeneratorSet& gens);

// {"order": N, "coeffs": ["...", ...]}
json series_to_json(const PowerSeries& s);

// Deterministic plain-text forms used by the CLI.
std::string rat_coeff_prefix(const RatScalar& c, bool first);  // "", "-", "3*", ...
std::string element_to_text(const Element& x, const DecorationSet& decor);
std::string eelement_to_text(const EElement& x, const DecorationSet& decor);
std::string tensor_to_text(const TensorK& t, const DecorationSet& decor);
std::string matrix_to_text(const IntMatrix& m);
std::string wordlin_to_text(const WordLin& x, const GeneratorSet& gens);
std::string vpoly_tensor_to_text(const VPolyTensor& t);

}  // namespace treealg
