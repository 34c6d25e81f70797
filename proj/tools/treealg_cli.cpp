#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "treealg/cm.hpp"
#include "treealg/frabetti.hpp"
#include "treealg/hopf.hpp"
#include "treealg/json_io.hpp"
#include "treealg/liealg.hpp"
#include "treealg/nonplanar.hpp"
#include "treealg/pairing.hpp"
#include "treealg/selfcheck.hpp"
#include "treealg/series.hpp"
#include "treealg/shuffle.hpp"

using namespace treealg;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitDisagreement = 3;

struct Config {
    std::vector<std::string> tokens{"*"};
    std::string format = "text";
    std::uint64_t max_items = 1'000'000;

    DecorationSet decor() const { return DecorationSet(tokens); }
    Limits limits() const { return Limits{max_items}; }
    bool json() const { return format == "json"; }
};

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

void emit(const Config& cfg, const json& j, const std::string& text) {
    if (cfg.json())
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

GeneratorSet letter_generators(const std::string& a, const std::string& b) {
    std::vector<std::pair<std::string, int>> gens;
    std::map<char, bool> seen;
    for (char c : a + b) {
        if (!seen.emplace(c, true).second) continue;
        gens.push_back({std::string(1, c), 1});
    }
    return GeneratorSet(std::move(gens));
}

Word to_word(const std::string& text, const GeneratorSet& gens) {
    Word w;
    for (char c : text) {
        auto i = gens.find(std::string(1, c));
        if (!i) throw std::invalid_argument("unknown generator letter");
        w.push_back(*i);
    }
    return w;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "treealg: exact computations in the Hopf algebra of planar decorated rooted trees"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    if (const char* env = std::getenv("TREEALG_MAX_ITEMS"))
        cfg.max_items = std::strtoull(env, nullptr, 10);
    std::string decor_csv = "*";
    app.add_option("-D,--decorations", decor_csv,
                   "comma-separated decoration tokens (default '*')");
    app.add_option("--format", cfg.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-items", cfg.max_items,
                   "enumeration cap (also env TREEALG_MAX_ITEMS)");

    auto* cmd_enum = app.add_subcommand("enum", "list all trees or forests of a weight");
    std::string enum_kind;
    int enum_n = 1;
    cmd_enum->add_option("kind", enum_kind)->required()->check(CLI::IsMember({"trees", "forests"}));
    cmd_enum->add_option("-n", enum_n, "weight")->required();

    auto* cmd_cop = app.add_subcommand("coproduct", "admissible-cut coproduct of a forest");
    std::string cop_arg;
    cmd_cop->add_option("forest", cop_arg)->required();
    auto* cmd_cofr = app.add_subcommand("coproduct-fr", "left-cut coproduct of a forest");
    std::string cofr_arg;
    cmd_cofr->add_option("forest", cofr_arg)->required();

    auto* cmd_anti = app.add_subcommand("antipode", "antipode of a forest");
    std::string anti_arg, anti_method = "both";
    cmd_anti->add_option("forest", anti_arg)->required();
    cmd_anti->add_option("--method", anti_method)->check(CLI::IsMember({"rec", "cuts", "both"}));

    auto* cmd_pair = app.add_subcommand("pair", "Hopf pairing of two forests");
    std::string pair_a, pair_b, pair_method = "both";
    cmd_pair->add_option("left", pair_a)->required();
    cmd_pair->add_option("right", pair_b)->required();
    cmd_pair->add_option("--method", pair_method)->check(CLI::IsMember({"rec", "comb", "both"}));

    auto* cmd_gram = app.add_subcommand("gram", "Gram matrix of the pairing at a weight");
    int gram_n = 1;
    bool gram_inverse = false;
    cmd_gram->add_option("-n", gram_n)->required();
    cmd_gram->add_flag("--inverse", gram_inverse, "print the inverse matrix instead");

    auto* cmd_dualb = app.add_subcommand("dual-basis", "dual basis elements at a weight");
    int dualb_n = 1;
    cmd_dualb->add_option("-n", dualb_n)->required();
    auto* cmd_dual = app.add_subcommand("dual", "dual basis element of a forest");
    std::string dual_arg;
    cmd_dual->add_option("forest", dual_arg)->required();

    auto* cmd_mirror = app.add_subcommand("mirror", "pairing partner involution of a forest");
    std::string mirror_arg;
    cmd_mirror->add_option("forest", mirror_arg)->required();

    auto* cmd_order = app.add_subcommand("order", "compare two forests in the canonical order");
    std::string order_a, order_b;
    cmd_order->add_option("left", order_a)->required();
    cmd_order->add_option("right", order_b)->required();

    auto* cmd_bracket = app.add_subcommand("bracket", "Lie bracket of two dual tree elements");
    std::string br_a, br_b, br_method = "both";
    cmd_bracket->add_option("left", br_a)->required();
    cmd_bracket->add_option("right", br_b)->required();
    cmd_bracket->add_option("--method", br_method)->check(CLI::IsMember({"cuts", "graft", "both"}));

    auto* cmd_cm = app.add_subcommand("cm", "formal-diffeomorphism subalgebra elements");
    std::string cm_kind;
    int cm_n = 1;
    cmd_cm->add_option("kind", cm_kind)
        ->required()
        ->check(CLI::IsMember({"u", "v", "z", "w", "delta"}));
    cmd_cm->add_option("-n", cm_n)->required();

    auto* cmd_shuffle = app.add_subcommand("shuffle", "shuffle product of two letter words");
    std::string sh_a, sh_b;
    cmd_shuffle->add_option("left", sh_a)->required();
    cmd_shuffle->add_option("right", sh_b)->required();

    auto* cmd_project = app.add_subcommand("project", "forget the planar structure");
    std::string project_arg;
    cmd_project->add_option("forest", project_arg)->required();

    auto* cmd_graft = app.add_subcommand("graft-average",
                                         "vertex-averaged grafting in the non-planar quotient");
    std::string ga_a, ga_b;
    cmd_graft->add_option("scions", ga_a)->required();
    cmd_graft->add_option("target", ga_b)->required();

    auto* cmd_series = app.add_subcommand("series", "counting sequences and Hilbert series");
    std::string series_kind;
    int series_k = 1, series_order = 8;
    std::string series_grades = "1";
    cmd_series->add_option("kind", series_kind)
        ->required()
        ->check(CLI::IsMember({"tau", "dims", "tv"}));
    cmd_series->add_option("-n,-k", series_k, "index (tau, dims)");
    cmd_series->add_option("-N,--order", series_order, "truncation order (tv)");
    cmd_series->add_option("--grades", series_grades, "generator grades, comma-separated (tv)");

    auto* cmd_self = app.add_subcommand("selfcheck", "run the cross-validation suite");
    int self_w = 4;
    cmd_self->add_option("--max-weight", self_w, "weight bound (default 4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        cfg.tokens = split_csv(decor_csv);
        DecorationSet decor = cfg.decor();
        Limits limits = cfg.limits();

        if (*cmd_enum) {
            json j = json::array();
            std::string text;
            if (enum_kind == "trees") {
                for (const PlanarTree& t : enumerate_trees(enum_n, decor, limits)) {
                    j.push_back(render_tree(t, decor));
                    text += render_tree(t, decor) + "\n";
                }
            } else {
                for (const Forest& f : enumerate_forests(enum_n, decor, limits)) {
                    j.push_back(render_forest(f, decor));
                    text += render_forest(f, decor) + "\n";
                }
            }
            if (!text.empty()) text.pop_back();
            emit(cfg, j, text);
        } else if (*cmd_cop) {
            TensorK t = coproduct(parse_forest(cop_arg, decor), limits);
            emit(cfg, tensor_to_json(t, decor), tensor_to_text(t, decor));
        } else if (*cmd_cofr) {
            TensorK t = coproduct_fr_cuts(parse_forest(cofr_arg, decor), limits);
            emit(cfg, tensor_to_json(t, decor), tensor_to_text(t, decor));
        } else if (*cmd_anti) {
            Forest f = parse_forest(anti_arg, decor);
            if (anti_method == "rec") {
                Element s = antipode_recursive(Element::monomial(f), limits);
                emit(cfg, element_to_json(s, decor), element_to_text(s, decor));
            } else if (anti_method == "cuts") {
                Element s = antipode_cuts(f, limits);
                emit(cfg, element_to_json(s, decor), element_to_text(s, decor));
            } else {
                Element s1 = antipode_recursive(Element::monomial(f), limits);
                Element s2 = antipode_cuts(f, limits);
                if (!(s1 == s2)) {
                    std::cerr << "antipode methods disagree\n";
                    return kExitDisagreement;
                }
                emit(cfg, element_to_json(s1, decor), element_to_text(s1, decor));
            }
        } else if (*cmd_pair) {
            PairingContext ctx(decor, limits);
            Forest a = parse_forest(pair_a, decor);
            Forest b = parse_forest(pair_b, decor);
            mpz_class v;
            if (pair_method == "rec") {
                v = ctx.pair_forests(a, b);
            } else if (pair_method == "comb") {
                v = ctx.pair_combinatorial(a, b);
            } else {
                v = ctx.pair_forests(a, b);
                mpz_class v2 = ctx.pair_combinatorial(a, b);
                if (v != v2) {
                    std::cerr << "pairing methods disagree: " << v.get_str() << " vs "
                              << v2.get_str() << "\n";
                    return kExitDisagreement;
                }
            }
            emit(cfg, json{{"value", v.get_str()}}, v.get_str());
        } else if (*cmd_gram) {
            PairingContext ctx(decor, limits);
            const auto& table = ctx.table(gram_n);
            const IntMatrix& m = gram_inverse ? table.dual : table.gram;
            emit(cfg, matrix_to_json(m, table.basis, decor), matrix_to_text(m));
        } else if (*cmd_dualb) {
            PairingContext ctx(decor, limits);
            json j = json::array();
            std::string text;
            for (const auto& [f, e] : ctx.dual_basis(dualb_n)) {
                j.push_back(json{{"forest", render_forest(f, decor)},
                                 {"element", element_to_json(e, decor)}});
                text += "e(" + render_forest(f, decor) + ") = " + element_to_text(e, decor) + "\n";
            }
            if (!text.empty()) text.pop_back();
            emit(cfg, j, text);
        } else if (*cmd_dual) {
            PairingContext ctx(decor, limits);
            Element e = ctx.dual_element(parse_forest(dual_arg, decor));
            emit(cfg, element_to_json(e, decor), element_to_text(e, decor));
        } else if (*cmd_mirror) {
            Forest m = mirror(parse_forest(mirror_arg, decor));
            emit(cfg, json{{"forest", render_forest(m, decor)}}, render_forest(m, decor));
        } else if (*cmd_order) {
            Ordering c =
                compare_forests(parse_forest(order_a, decor), parse_forest(order_b, decor));
            std::string s = c == Ordering::LT ? "LT" : c == Ordering::GT ? "GT" : "EQ";
            emit(cfg, json{{"order", s}}, s);
        } else if (*cmd_bracket) {
            Forest a = parse_forest(br_a, decor);
            Forest b = parse_forest(br_b, decor);
            if (a.length() != 1 || b.length() != 1)
                throw std::invalid_argument("bracket arguments must be single trees");
            EElement e;
            if (br_method == "cuts") {
                e = bracket_cuts(a.trees()[0], b.trees()[0], decor, limits);
            } else if (br_method == "graft") {
                e = bracket_graft(a.trees()[0], b.trees()[0]);
            } else {
                e = bracket_cuts(a.trees()[0], b.trees()[0], decor, limits);
                if (!(e == bracket_graft(a.trees()[0], b.trees()[0]))) {
                    std::cerr << "bracket methods disagree\n";
                    return kExitDisagreement;
                }
            }
            emit(cfg, eelement_to_json(e, decor), eelement_to_text(e, decor));
        } else if (*cmd_cm) {
            DecorationSet plain;
            if (cm_kind == "delta") {
                json j = json::object();
                std::string text;
                const std::pair<const char*, VPolyTensor> items[] = {
                    {"reduced-coproduct-v",
                     cm_coproduct_formula(CmKind::v, CmCoproduct::plain, cm_n)},
                    {"reduced-coproduct-fr-v",
                     cm_coproduct_formula(CmKind::v, CmCoproduct::fr, cm_n)},
                    {"reduced-coproduct-u",
                     cm_coproduct_formula(CmKind::u, CmCoproduct::plain, cm_n)},
                    {"reduced-coproduct-fr-u",
                     cm_coproduct_formula(CmKind::u, CmCoproduct::fr, cm_n)},
                };
                for (const auto& [name, formula] : items) {
                    j[name] = vpoly_tensor_to_json(formula);
                    text += std::string(name) + ": " + vpoly_tensor_to_text(formula) + "\n";
                }
                if (!text.empty()) text.pop_back();
                emit(cfg, j, text);
            } else {
                Element e = cm_kind == "u"   ? cm_u(cm_n, limits)
                            : cm_kind == "v" ? cm_v(cm_n, limits)
                            : cm_kind == "z" ? cm_z(cm_n, limits)
                                             : cm_w(cm_n, limits);
                emit(cfg, element_to_json(e, plain), element_to_text(e, plain));
            }
        } else if (*cmd_shuffle) {
            GeneratorSet gens = letter_generators(sh_a, sh_b);
            WordLin out = shuffle(to_word(sh_a, gens), to_word(sh_b, gens));
            emit(cfg, wordlin_to_json(out, gens), wordlin_to_text(out, gens));
        } else if (*cmd_project) {
            Forest p = project(parse_forest(project_arg, decor));
            emit(cfg, json{{"forest", render_forest(p, decor)}}, render_forest(p, decor));
        } else if (*cmd_graft) {
            Element out = graft_average(project(parse_forest(ga_a, decor)),
                                        project(parse_forest(ga_b, decor)));
            emit(cfg, element_to_json(out, decor), element_to_text(out, decor));
        } else if (*cmd_series) {
            if (series_kind == "tau") {
                mpz_class v = tau(series_k);
                emit(cfg, json{{"tau", v.get_str()}}, v.get_str());
            } else if (series_kind == "dims") {
                auto [rn, pn] = dims(series_k, decor.size());
                emit(cfg, json{{"dim", rn.get_str()}, {"primitive_dim", pn.get_str()}},
                     rn.get_str() + " " + pn.get_str());
            } else {
                std::vector<int> grades;
                for (const std::string& g : split_csv(series_grades))
                    grades.push_back(std::stoi(g));
                TVSeries tv = tv_series(grades, series_order);
                json j{{"generator", series_to_json(tv.generator)},
                       {"total", series_to_json(tv.total)}};
                json rows = json::array();
                std::string text = "total:";
                for (int n = 0; n <= tv.total.order(); ++n)
                    text += " " + rat_to_string(tv.total.coeff(n));
                text += "\nbigraded (rows weight, cols length):";
                for (const auto& row : tv.bigraded) {
                    json jr = json::array();
                    text += "\n";
                    bool first = true;
                    for (const RatScalar& c : row) {
                        jr.push_back(rat_to_string(c));
                        text += (first ? "" : " ") + rat_to_string(c);
                        first = false;
                    }
                    rows.push_back(std::move(jr));
                }
                j["bigraded"] = std::move(rows);
                emit(cfg, j, text);
            }
        } else if (*cmd_self) {
            auto results = run_selfcheck(self_w, decor, limits);
            json j = json::array();
            int fails = 0;
            for (const CheckResult& r : results) {
                j.push_back(json{{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
                std::cout << (r.ok ? "[ok]   " : "[FAIL] ") << r.name
                          << (r.ok ? "" : "  -- " + r.detail) << "\n";
                if (!r.ok) ++fails;
            }
            std::cout << (fails == 0 ? "all checks passed"
                                     : std::to_string(fails) + " check(s) failed")
                      << "\n";
            if (cfg.json()) std::cout << j.dump(2) << "\n";
            if (fails) return kExitDisagreement;
        }
        return 0;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
