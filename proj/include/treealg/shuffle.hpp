#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "treealg/algebra.hpp"

namespace treealg {

// Abstract graded generator set for the tensor coalgebra; grades are >= 1.
class GeneratorSet {
public:
    explicit GeneratorSet(std::vector<std::pair<std::string, int>> gens);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    int grade(int i) const { return grades_[static_cast<std::size_t>(i)]; }
    std::optional<int> find(const std::string& name) const;

private:
    std::vector<std::string> names_;
    std::vector<int> grades_;
    std::map<std::string, int> index_;
};

// A word is a sequence of generator indices; the empty word is the unit.
using Word = std::vector<int>;
using WordLin = std::map<Word, RatScalar>;                    // combinations of words
using WordTensor = std::map<std::pair<Word, Word>, RatScalar>;  // arity-2 tensors

int word_weight(const Word& w, const GeneratorSet& gens);

void add_into(WordLin& acc, const Word& w, const RatScalar& c);
WordLin lin_scale(const RatScalar& c, const WordLin& a);
WordLin lin_add(WordLin a, const WordLin& b);

// Deconcatenation: the sum of all splits of the word.
WordTensor deconcat(const Word& w);

// Sum over interleavings that keep both arguments' letter orders.
WordLin shuffle(const Word& x, const Word& y);
WordLin shuffle(const WordLin& x, const WordLin& y);

// Reversal antipode of the shuffle algebra.
WordLin antipode_star(const Word& w);
WordLin antipode_star(const WordLin& x);

// Generic antipode of any bialgebra product on the tensor coalgebra: the
// signed sum over the ways of replacing separators by products. The caller
// supplies the product and the embedding of plain words.
template <class Elem>
Elem antipode_generic(const Word& w, const std::function<Elem(const Word&)>& word_to_elem,
                      const std::function<Elem(const Elem&, const Elem&)>& mul,
                      const std::function<void(Elem&, const Elem&, int)>& add_signed) {
    std::size_t n = w.size();
    Elem out{};
    if (n == 0) return word_to_elem(w);
    if (n >= 63) throw std::invalid_argument("word too long for the subset antipode");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        // split the word at every separator in the subset, multiply the blocks
        std::vector<Word> blocks;
        Word cur;
        for (std::size_t i = 0; i < n; ++i) {
            cur.push_back(w[i]);
            if (i + 1 < n && (mask & (std::uint64_t{1} << i))) {
                blocks.push_back(std::move(cur));
                cur.clear();
            }
        }
        blocks.push_back(std::move(cur));
        Elem prod = word_to_elem(blocks[0]);
        for (std::size_t b = 1; b < blocks.size(); ++b) prod = mul(prod, word_to_elem(blocks[b]));
        int popcount = __builtin_popcountll(mask);
        add_signed(out, prod, (popcount % 2 == 0) ? -1 : 1);
    }
    return out;
}

// The subset antipode instantiated with the shuffle product.
WordLin antipode_generic_shuffle(const Word& w);

// 1-cocycle built from a linear map into the generator span: u takes a word
// to a combination of single letters (index -> coefficient).
using GeneratorSpan = std::map<int, RatScalar>;
WordLin cocycle_lu(const std::function<GeneratorSpan(const Word&)>& u, const Word& w);
WordLin cocycle_lu(const std::function<GeneratorSpan(const Word&)>& u, const WordLin& x);

}  // namespace treealg
