#include "treealg/shuffle.hpp"

#include <algorithm>

namespace treealg {

GeneratorSet::GeneratorSet(std::vector<std::pair<std::string, int>> gens) {
    for (auto& [name, grade] : gens) {
        if (grade < 1) throw std::invalid_argument("generator grades must be >= 1");
        if (!index_.emplace(name, static_cast<int>(names_.size())).second)
            throw std::invalid_argument("duplicate generator '" + name + "'");
        names_.push_back(name);
        grades_.push_back(grade);
    }
    if (names_.empty()) throw std::invalid_argument("generator set must be non-empty");
}

std::optional<int> GeneratorSet::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int word_weight(const Word& w, const GeneratorSet& gens) {
    int s = 0;
    for (int i : w) s += gens.grade(i);
    return s;
}

void add_into(WordLin& acc, const Word& w, const RatScalar& c) {
    if (c == 0) return;
    auto [it, inserted] = acc.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

WordLin lin_scale(const RatScalar& c, const WordLin& a) {
    WordLin out;
    if (c == 0) return out;
    for (const auto& [w, q] : a) out.emplace(w, c * q);
    return out;
}

WordLin lin_add(WordLin a, const WordLin& b) {
    for (const auto& [w, c] : b) add_into(a, w, c);
    return a;
}

WordTensor deconcat(const Word& w) {
    WordTensor out;
    for (std::size_t k = 0; k <= w.size(); ++k) {
        Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        Word right(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
        out[{std::move(left), std::move(right)}] += 1;
    }
    return out;
}

namespace {

void shuffle_rec(const Word& x, const Word& y, std::size_t i, std::size_t j, Word& cur,
                 WordLin& out) {
    if (i == x.size() && j == y.size()) {
        add_into(out, cur, 1);
        return;
    }
    if (i < x.size()) {
        cur.push_back(x[i]);
        shuffle_rec(x, y, i + 1, j, cur, out);
        cur.pop_back();
    }
    if (j < y.size()) {
        cur.push_back(y[j]);
        shuffle_rec(x, y, i, j + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

WordLin shuffle(const Word& x, const Word& y) {
    WordLin out;
    Word cur;
    cur.reserve(x.size() + y.size());
    shuffle_rec(x, y, 0, 0, cur, out);
    return out;
}

WordLin shuffle(const WordLin& x, const WordLin& y) {
    WordLin out;
    for (const auto& [wx, cx] : x)
        for (const auto& [wy, cy] : y)
            for (const auto& [w, c] : shuffle(wx, wy)) add_into(out, w, cx * cy * c);
    return out;
}

WordLin antipode_star(const Word& w) {
    Word rev(w.rbegin(), w.rend());
    WordLin out;
    out.emplace(std::move(rev), (w.size() % 2 == 0) ? 1 : -1);
    return out;
}

WordLin antipode_star(const WordLin& x) {
    WordLin out;
    for (const auto& [w, c] : x)
        for (const auto& [rw, rc] : antipode_star(w)) add_into(out, rw, c * rc);
    return out;
}

WordLin antipode_generic_shuffle(const Word& w) {
    return antipode_generic<WordLin>(
        w,
        [](const Word& v) {
            WordLin l;
            l.emplace(v, 1);
            return l;
        },
        [](const WordLin& a, const WordLin& b) { return shuffle(a, b); },
        [](WordLin& acc, const WordLin& x, int sign) {
            for (const auto& [v, c] : x) add_into(acc, v, sign * c);
        });
}

WordLin cocycle_lu(const std::function<GeneratorSpan(const Word&)>& u, const Word& w) {
    WordLin out;
    auto append = [&](const Word& prefix, const GeneratorSpan& span, const RatScalar& c) {
        for (const auto& [g, q] : span) {
            Word v = prefix;
            v.push_back(g);
            add_into(out, v, c * q);
        }
    };
    std::size_t n = w.size();
    for (std::size_t j = 1; j + 1 <= n && n >= 1; ++j) {
        Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j));
        Word suffix(w.begin() + static_cast<std::ptrdiff_t>(j), w.end());
        append(prefix, u(suffix), 1);
    }
    if (n >= 1) append(w, u(Word{}), 1);
    // u applied to the whole word (this also covers the empty word).
    for (const auto& [g, q] : u(w)) add_into(out, Word{g}, q);
    if (n == 0) return out;
    return out;
}

WordLin cocycle_lu(const std::function<GeneratorSpan(const Word&)>& u, const WordLin& x) {
    WordLin out;
    for (const auto& [w, c] : x) out = lin_add(std::move(out), lin_scale(c, cocycle_lu(u, w)));
    return out;
}

}  // namespace treealg
