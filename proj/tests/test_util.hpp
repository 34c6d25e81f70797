#pragma once

#include <string>
#include <vector>

#include "treealg/algebra.hpp"
#include "treealg/forest.hpp"

namespace treealg::test {

inline const DecorationSet& plain() {
    static const DecorationSet set;
    return set;
}

inline Forest F(const std::string& text) { return parse_forest(text, plain()); }
inline PlanarTree T(const std::string& text) { return F(text).trees()[0]; }

inline Element lin(std::initializer_list<std::pair<std::string, std::string>> terms) {
    Element out;
    for (const auto& [coeff, forest] : terms) out.add_term(F(forest), rat_from_string(coeff));
    return out;
}

inline TensorK ten2(std::initializer_list<std::pair<std::string, std::pair<std::string, std::string>>>
                        terms) {
    TensorK out(2);
    for (const auto& [coeff, pr] : terms)
        out.add_term({F(pr.first), F(pr.second)}, rat_from_string(coeff));
    return out;
}

}  // namespace treealg::test
