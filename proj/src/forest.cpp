#include "treealg/forest.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cassert>

namespace treealg {

DecorationSet::DecorationSet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) throw std::invalid_argument("decoration set must be non-empty");
    for (int i = 0; i < static_cast<int>(tokens_.size()); ++i) {
        const std::string& tok = tokens_[i];
        if (tok.empty() || tok == "1")
            throw std::invalid_argument("invalid decoration token '" + tok + "'");
        for (char c : tok) {
            bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                      (c >= '0' && c <= '9') || c == '_' || c == '*';
            if (!ok) throw std::invalid_argument("invalid decoration token '" + tok + "'");
        }
        if (!index_.emplace(tok, i).second)
            throw std::invalid_argument("duplicate decoration token '" + tok + "'");
    }
}

const std::string& DecorationSet::token(Decoration d) const {
    if (d < 0 || d >= size()) throw std::invalid_argument("decoration out of range");
    return tokens_[static_cast<std::size_t>(d)];
}

std::optional<Decoration> DecorationSet::find(const std::string& token) const {
    auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

PlanarTree::PlanarTree(Decoration d, std::vector<PlanarTree> children)
    : dec_(d), children_(std::move(children)), weight_(1) {
    for (const PlanarTree& c : children_) weight_ += c.weight();
}

bool PlanarTree::operator==(const PlanarTree& other) const {
    return weight_ == other.weight_ && dec_ == other.dec_ && children_ == other.children_;
}

Forest::Forest(std::vector<PlanarTree> trees) : trees_(std::move(trees)) {
    for (const PlanarTree& t : trees_) weight_ += t.weight();
}

Forest::Forest(PlanarTree tree) : weight_(tree.weight()) { trees_.push_back(std::move(tree)); }

Forest Forest::concat(const Forest& other) const {
    std::vector<PlanarTree> ts = trees_;
    ts.insert(ts.end(), other.trees_.begin(), other.trees_.end());
    return Forest(std::move(ts));
}

bool Forest::operator==(const Forest& other) const {
    return weight_ == other.weight_ && trees_ == other.trees_;
}

namespace {

Ordering compare_tree_seq(std::span<const PlanarTree> ta, int wa, std::span<const PlanarTree> tb,
                          int wb) {
    if (wa != wb) return wa < wb ? Ordering::LT : Ordering::GT;
    if (ta.size() == 1 && tb.size() > 1) return Ordering::GT;
    if (tb.size() == 1 && ta.size() > 1) return Ordering::LT;
    if (ta.size() == 1 && tb.size() == 1) return compare_trees(ta[0], tb[0]);
    // Both empty, or both proper forests: compare rightmost trees first.
    std::size_t k = 0;
    while (k < ta.size() && k < tb.size()) {
        Ordering c = compare_trees(ta[ta.size() - 1 - k], tb[tb.size() - 1 - k]);
        if (c != Ordering::EQ) return c;
        ++k;
    }
    // Equal weight forests cannot be a strict suffix of one another.
    assert(ta.size() == tb.size());
    return Ordering::EQ;
}

}  // namespace

Ordering compare_trees(const PlanarTree& a, const PlanarTree& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight() ? Ordering::LT : Ordering::GT;
    if (a.decoration() != b.decoration())
        return a.decoration() < b.decoration() ? Ordering::LT : Ordering::GT;
    return compare_tree_seq(a.children(), a.weight() - 1, b.children(), b.weight() - 1);
}

Ordering compare_forests(const Forest& a, const Forest& b) {
    return compare_tree_seq(a.trees(), a.weight(), b.trees(), b.weight());
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const DecorationSet& decor) : text_(text), decor_(decor) {}

    Forest parse() {
        if (text_ == "1") return Forest();
        Forest f = parse_forest_body();
        if (pos_ != text_.size()) fail("trailing input");
        return f;
    }

private:
    Forest parse_forest_body() {
        if (peek() == '1') {
            ++pos_;
            return Forest();
        }
        std::vector<PlanarTree> trees;
        trees.push_back(parse_tree());
        while (pos_ < text_.size() && text_[pos_] == ' ') {
            ++pos_;
            trees.push_back(parse_tree());
        }
        return Forest(std::move(trees));
    }

    PlanarTree parse_tree() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_decor_char(text_[pos_])) ++pos_;
        if (pos_ == start) fail("expected decoration token");
        std::string tok = text_.substr(start, pos_ - start);
        auto d = decor_.find(tok);
        if (!d) throw parse_error("unknown decoration token '" + tok + "'", start);
        std::vector<PlanarTree> children;
        if (pos_ < text_.size() && text_[pos_] == '[') {
            ++pos_;
            Forest f = parse_forest_body();
            if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
            ++pos_;
            children = f.trees();
        }
        return PlanarTree(*d, std::move(children));
    }

    static bool is_decor_char(char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
               c == '_' || c == '*';
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg + " at position " + std::to_string(pos_), pos_);
    }

    const std::string& text_;
    const DecorationSet& decor_;
    std::size_t pos_ = 0;
};

}  // namespace

Forest parse_forest(const std::string& text, const DecorationSet& decor) {
    return Parser(text, decor).parse();
}

std::string render_tree(const PlanarTree& t, const DecorationSet& decor) {
    std::string out = decor.token(t.decoration());
    if (!t.children().empty()) {
        out += '[';
        out += render_forest(Forest(t.children()), decor);
        out += ']';
    }
    return out;
}

std::string render_forest(const Forest& f, const DecorationSet& decor) {
    if (f.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < f.trees().size(); ++i) {
        if (i) out += ' ';
        out += render_tree(f.trees()[i], decor);
    }
    return out;
}

PlanarTree bplus(const Forest& f, Decoration d) { return PlanarTree(d, f.trees()); }

Forest bminus(const PlanarTree& t) { return Forest(t.children()); }

std::optional<Forest> gamma(const Forest& f, Decoration d) {
    if (f.empty()) return std::nullopt;
    const PlanarTree& last = f.trees().back();
    if (last.weight() != 1 || last.decoration() != d) return std::nullopt;
    std::vector<PlanarTree> rest(f.trees().begin(), f.trees().end() - 1);
    return Forest(std::move(rest));
}

namespace {

mpz_class catalan(int n) {
    // C_n = (2n)! / (n! (n+1)!)
    mpz_class num, den;
    mpz_bin_uiui(num.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    return num / (n + 1);
}

void check_enumeration_budget(const mpz_class& count, const Limits& limits) {
    if (count > mpz_class(static_cast<unsigned long>(limits.max_items)))
        throw resource_limit_error("enumeration of " + count.get_str() +
                                   " items exceeds the configured cap");
}

// All forests of weight n, unsorted.
std::vector<std::vector<Forest>> forests_by_weight(int n, const DecorationSet& decor);

std::vector<std::vector<PlanarTree>> trees_by_weight(int n, const DecorationSet& decor) {
    std::vector<std::vector<PlanarTree>> trees(static_cast<std::size_t>(n) + 1);
    auto forests = forests_by_weight(n - 1, decor);
    for (int k = 1; k <= n; ++k)
        for (Decoration d = 0; d < decor.size(); ++d)
            for (const Forest& f : forests[static_cast<std::size_t>(k - 1)])
                trees[static_cast<std::size_t>(k)].push_back(bplus(f, d));
    return trees;
}

std::vector<std::vector<Forest>> forests_by_weight(int n, const DecorationSet& decor) {
    std::vector<std::vector<Forest>> forests(static_cast<std::size_t>(n) + 1);
    forests[0].push_back(Forest());
    if (n == 0) return forests;
    std::vector<std::vector<PlanarTree>> trees(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        // Trees of weight k are B_d^+ of forests of weight k-1.
        for (Decoration d = 0; d < decor.size(); ++d)
            for (const Forest& f : forests[static_cast<std::size_t>(k - 1)])
                trees[static_cast<std::size_t>(k)].push_back(bplus(f, d));
        // Forests of weight k split as (first tree, remaining forest).
        for (int j = 1; j <= k; ++j)
            for (const PlanarTree& t : trees[static_cast<std::size_t>(j)])
                for (const Forest& rest : forests[static_cast<std::size_t>(k - j)])
                    forests[static_cast<std::size_t>(k)].push_back(Forest(t).concat(rest));
    }
    return forests;
}

}  // namespace

std::vector<PlanarTree> enumerate_trees(int n, const DecorationSet& decor, const Limits& limits) {
    if (n < 1) throw std::invalid_argument("enumerate_trees requires n >= 1");
    mpz_class count = catalan(n - 1);
    for (int i = 0; i < n; ++i) count *= decor.size();
    check_enumeration_budget(count, limits);
    auto trees = trees_by_weight(n, decor);
    std::vector<PlanarTree> out = std::move(trees[static_cast<std::size_t>(n)]);
    std::sort(out.begin(), out.end(), TreeLess{});
    assert(mpz_class(out.size()) == count);
    return out;
}

std::vector<Forest> enumerate_forests(int n, const DecorationSet& decor, const Limits& limits) {
    if (n < 0) throw std::invalid_argument("enumerate_forests requires n >= 0");
    mpz_class count = catalan(n);
    for (int i = 0; i < n; ++i) count *= decor.size();
    check_enumeration_budget(count, limits);
    auto forests = forests_by_weight(n, decor);
    std::vector<Forest> out = std::move(forests[static_cast<std::size_t>(n)]);
    std::sort(out.begin(), out.end(), ForestLess{});
    assert(mpz_class(out.size()) == count);
    return out;
}

ForestStructure::ForestStructure(const Forest& f) {
    int n = f.weight();
    dec.reserve(static_cast<std::size_t>(n));
    parent.reserve(static_cast<std::size_t>(n));
    struct Frame {
        const PlanarTree* tree;
        int parent;
        int tree_idx;
        int rank;
    };
    for (std::size_t i = 0; i < f.trees().size(); ++i) {
        // Explicit stack keeps preorder: root first, then subtrees left to right.
        std::vector<Frame> stack{{&f.trees()[i], -1, static_cast<int>(i), 0}};
        while (!stack.empty()) {
            Frame fr = stack.back();
            stack.pop_back();
            int idx = static_cast<int>(dec.size());
            dec.push_back(fr.tree->decoration());
            parent.push_back(fr.parent);
            tree_index.push_back(fr.tree_idx);
            child_rank.push_back(fr.rank);
            children.emplace_back();
            if (fr.parent >= 0)
                children[static_cast<std::size_t>(fr.parent)].push_back(idx);
            else
                roots.push_back(idx);
            const auto& kids = fr.tree->children();
            for (std::size_t k = kids.size(); k-- > 0;)
                stack.push_back({&kids[k], idx, fr.tree_idx, static_cast<int>(k)});
        }
    }
}

namespace {

void check_vertex(const ForestStructure& s, int v) {
    if (v < 0 || v >= s.size()) throw std::invalid_argument("vertex reference out of range");
}

// Root path of x, from x down to its tree root.
std::vector<int> root_path(const ForestStructure& s, int x) {
    std::vector<int> path;
    for (int v = x; v >= 0; v = s.parent[static_cast<std::size_t>(v)]) path.push_back(v);
    return path;
}

}  // namespace

bool ge_haut(const ForestStructure& s, int x, int y) {
    check_vertex(s, x);
    check_vertex(s, y);
    for (int v = x; v >= 0; v = s.parent[static_cast<std::size_t>(v)])
        if (v == y) return true;
    return false;
}

bool ge_gauche(const ForestStructure& s, int x, int y) {
    check_vertex(s, x);
    check_vertex(s, y);
    if (x == y) return true;
    int tx = s.tree_index[static_cast<std::size_t>(x)];
    int ty = s.tree_index[static_cast<std::size_t>(y)];
    if (tx != ty) return tx < ty;
    // Same tree: incomparable when one lies on the other's root path; otherwise
    // decided by the child branches at the lowest common ancestor.
    auto px = root_path(s, x);
    auto py = root_path(s, y);
    std::size_t ix = px.size(), iy = py.size();
    while (ix > 0 && iy > 0 && px[ix - 1] == py[iy - 1]) {
        --ix;
        --iy;
    }
    if (ix == 0 || iy == 0) return false;  // ancestor relation
    // px[ix] == py[iy] is the lowest common ancestor; the preceding entries
    // are the branches below it.
    return s.child_rank[static_cast<std::size_t>(px[ix - 1])] <
           s.child_rank[static_cast<std::size_t>(py[iy - 1])];
}

bool ge_haut(const Forest& f, VertexRef x, VertexRef y) {
    ForestStructure s(f);
    return ge_haut(s, x.index, y.index);
}

bool ge_gauche(const Forest& f, VertexRef x, VertexRef y) {
    ForestStructure s(f);
    return ge_gauche(s, x.index, y.index);
}

std::vector<VertexRef> tot_order(const Forest& f) {
    ForestStructure s(f);
    std::vector<int> idx(static_cast<std::size_t>(s.size()));
    for (int i = 0; i < s.size(); ++i) idx[static_cast<std::size_t>(i)] = i;
    std::sort(idx.begin(), idx.end(), [&](int x, int y) {
        if (x == y) return false;
        // x <_tot y  iff  y >=_tot x  iff  y >=_haut x or x >=_gauche y.
        return ge_haut(s, y, x) || ge_gauche(s, x, y);
    });
    std::vector<VertexRef> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(VertexRef{i});
    return out;
}

Forest mirror(const Forest& f) {
    if (f.empty()) return f;
    const PlanarTree& last = f.trees().back();
    std::vector<PlanarTree> front(f.trees().begin(), f.trees().end() - 1);
    if (last.weight() == 1) {
        // m(F' bullet_d) = B_d^+(m(F'))
        return Forest(bplus(mirror(Forest(std::move(front))), last.decoration()));
    }
    // m(F1 B_d^+(t1)) = m(t1) B_d^+(m(F1)), t1 != 1; covers single trees via F1 = 1.
    Forest m1 = mirror(bminus(last));
    PlanarTree t = bplus(mirror(Forest(std::move(front))), last.decoration());
    return m1.concat(Forest(std::move(t)));
}

}  // namespace treealg
