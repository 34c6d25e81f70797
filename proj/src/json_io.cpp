#include "treealg/json_io.hpp"

#include <sstream>

namespace treealg {

json tree_to_json(const PlanarTree& t, const DecorationSet& decor) {
    json children = json::array();
    for (const PlanarTree& c : t.children()) children.push_back(tree_to_json(c, decor));
    return json{{"d", decor.token(t.decoration())}, {"children", std::move(children)}};
}

json forest_to_json(const Forest& f, const DecorationSet& decor) {
    json out = json::array();
    for (const PlanarTree& t : f.trees()) out.push_back(tree_to_json(t, decor));
    return out;
}

namespace {

PlanarTree tree_from_json(const json& j, const DecorationSet& decor) {
    auto d = decor.find(j.at("d").get<std::string>());
    if (!d) throw std::invalid_argument("unknown decoration in JSON tree");
    std::vector<PlanarTree> kids;
    for (const json& c : j.at("children")) kids.push_back(tree_from_json(c, decor));
    return PlanarTree(*d, std::move(kids));
}

}  // namespace

Forest forest_from_json(const json& j, const DecorationSet& decor) {
    std::vector<PlanarTree> trees;
    for (const json& t : j) trees.push_back(tree_from_json(t, decor));
    return Forest(std::move(trees));
}

json element_to_json(const Element& x, const DecorationSet& decor) {
    json terms = json::array();
    for (const auto& [f, c] : x.terms())
        terms.push_back(json{{"coeff", rat_to_string(c)}, {"forest", render_forest(f, decor)}});
    return json{{"terms", std::move(terms)}};
}

json eelement_to_json(const EElement& x, const DecorationSet& decor) {
    json j = element_to_json(x.coords, decor);
    j["basis"] = "e";
    return j;
}

json tensor_to_json(const TensorK& t, const DecorationSet& decor) {
    json terms = json::array();
    for (const auto& [key, c] : t.terms()) {
        json factors = json::array();
        for (const Forest& f : key) factors.push_back(render_forest(f, decor));
        terms.push_back(json{{"coeff", rat_to_string(c)}, {"factors", std::move(factors)}});
    }
    return json{{"terms", std::move(terms)}};
}

json matrix_to_json(const IntMatrix& m, const std::vector<Forest>& basis,
                    const DecorationSet& decor) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    json b = json::array();
    for (const Forest& f : basis) b.push_back(render_forest(f, decor));
    return json{{"basis", std::move(b)}, {"rows", std::move(rows)}};
}

namespace {

json cmword_to_json(const CmWord& w) {
    json out = json::array();
    for (const CmLetter& l : w)
        out.push_back(json::array({l.kind == CmKind::u ? "u" : "v", l.index}));
    return out;
}

}  // namespace

json vpoly_to_json(const VPolynomial& p) {
    json terms = json::array();
    for (const auto& [w, c] : p)
        terms.push_back(json{{"coeff", rat_to_string(c)}, {"word", cmword_to_json(w)}});
    return json{{"terms", std::move(terms)}};
}

json vpoly_tensor_to_json(const VPolyTensor& t) {
    json terms = json::array();
    for (const auto& [ww, c] : t)
        terms.push_back(json{{"coeff", rat_to_string(c)},
                             {"left", cmword_to_json(ww.first)},
                             {"right", cmword_to_json(ww.second)}});
    return json{{"terms", std::move(terms)}};
}

json word_to_json(const Word& w, const GeneratorSet& gens) {
    json letters = json::array();
    for (int i : w) letters.push_back(gens.name(i));
    return json{{"word", std::move(letters)}};
}

json wordlin_to_json(const WordLin& x, const GeneratorSet& gens) {
    json terms = json::array();
    for (const auto& [w, c] : x)
        terms.push_back(json{{"coeff", rat_to_string(c)}, {"word", word_to_json(w, gens)["word"]}});
    return json{{"terms", std::move(terms)}};
}

json series_to_json(const PowerSeries& s) {
    json coeffs = json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(rat_to_string(s.coeff(n)));
    return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

std::string rat_coeff_prefix(const RatScalar& c, bool first) {
    RatScalar a = abs(c);
    std::string out;
    if (first)
        out = (c < 0) ? "-" : "";
    else
        out = (c < 0) ? " - " : " + ";
    if (a != 1) out += rat_to_string(a) + "*";
    return out;
}

std::string element_to_text(const Element& x, const DecorationSet& decor) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [f, c] : x.terms()) {
        out += rat_coeff_prefix(c, first);
        out += render_forest(f, decor);
        first = false;
    }
    return out;
}

std::string eelement_to_text(const EElement& x, const DecorationSet& decor) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [f, c] : x.coords.terms()) {
        out += rat_coeff_prefix(c, first);
        out += "e(" + render_forest(f, decor) + ")";
        first = false;
    }
    return out;
}

std::string tensor_to_text(const TensorK& t, const DecorationSet& decor) {
    if (t.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : t.terms()) {
        out += rat_coeff_prefix(c, first);
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) out += " (x) ";
            out += render_forest(key[i], decor);
        }
        first = false;
    }
    return out;
}

std::string matrix_to_text(const IntMatrix& m) {
    // column-aligned grid
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.rows()));
    std::vector<std::size_t> width(static_cast<std::size_t>(m.cols()), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            std::string s = m.at(i, j).get_str();
            width[static_cast<std::size_t>(j)] =
                std::max(width[static_cast<std::size_t>(j)], s.size());
            cells[static_cast<std::size_t>(i)].push_back(std::move(s));
        }
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            const std::string& s = cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            out << std::string(width[static_cast<std::size_t>(j)] - s.size(), ' ') << s;
            out << (j + 1 < m.cols() ? " " : "");
        }
        out << '\n';
    }
    return out.str();
}

std::string wordlin_to_text(const WordLin& x, const GeneratorSet& gens) {
    if (x.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : x) {
        out += rat_coeff_prefix(c, first);
        if (w.empty())
            out += "1";
        else
            for (int i : w) out += gens.name(i);
        first = false;
    }
    return out;
}

namespace {

std::string cmword_to_text(const CmWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += " ";
        out += (w[i].kind == CmKind::u ? "u" : "v") + std::to_string(w[i].index);
    }
    return out;
}

}  // namespace

std::string vpoly_tensor_to_text(const VPolyTensor& t) {
    if (t.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [ww, c] : t) {
        out += rat_coeff_prefix(c, first);
        out += "(" + cmword_to_text(ww.first) + ") (x) (" + cmword_to_text(ww.second) + ")";
        first = false;
    }
    return out;
}

}  // namespace treealg
