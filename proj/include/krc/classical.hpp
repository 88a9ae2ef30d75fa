#pragma once

#include <deque>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "element.hpp"

namespace krc {

inline constexpr std::size_t kDefaultVertexBudget = 1'000'000;

/// Throws unless every column height is a non-spin classical node (height 0 allowed).
inline void validate_spinless(const Shape& s, const CartanType& t) {
    if (!s.is_partition()) throw DomainError("shape " + to_string(s) + " is not a partition");
    if (s.height() > t.max_nonspin_node())
        throw DomainError("shape " + to_string(s) + " has a spin or over-tall column for " + t.name());
}

/// Classical highest element of B(lambda): column of height h holds 1..h bottom to top.
inline Element highest_word(const Shape& lambda, const CartanType& t) {
    validate_spinless(lambda, t);
    Element b{lambda, {}};
    b.word.reserve(static_cast<std::size_t>(lambda.cells()));
    for (int h : lambda.heights)
        for (int k = h; k >= 1; --k) b.word.emplace_back(k);
    return b;
}

/// One classical component; edges are stored as f-tables indexed by vertex.
struct CrystalGraph {
    CartanType type;
    Shape shape;
    std::vector<Word> words;          // BFS discovery order; words[0] is the highest element
    std::vector<std::vector<int>> f;  // f[i-1][v] = target vertex of f_i, or -1

    std::size_t size() const { return words.size(); }
    Element element(std::size_t v) const { return {shape, words[v]}; }
};

/// BFS closure of highest_word(lambda) under f_1..f_n.
inline CrystalGraph generate_component(const Shape& lambda, const CartanType& t,
                                       std::size_t budget = kDefaultVertexBudget) {
    const auto& lt = letters_for(t);
    const int n = t.rank;
    CrystalGraph g{t, lambda, {}, std::vector<std::vector<int>>(static_cast<std::size_t>(n))};
    std::unordered_map<std::string, int> index;
    g.words.push_back(highest_word(lambda, t).word);
    index.emplace(word_key(g.words[0]), 0);
    for (std::size_t v = 0; v < g.words.size(); ++v) {
        for (int i = 1; i <= n; ++i) {
            Word w = g.words[v];
            int target = -1;
            if (word_step_inplace(i, w, Step::lower, lt)) {
                auto [it, fresh] = index.emplace(word_key(w), static_cast<int>(g.words.size()));
                if (fresh) {
                    if (g.words.size() >= budget)
                        throw ResourceError("component " + to_string(lambda) + " exceeds vertex budget " +
                                            std::to_string(budget));
                    g.words.push_back(std::move(w));
                }
                target = it->second;
            }
            g.f[static_cast<std::size_t>(i - 1)].push_back(target);
        }
    }
    return g;
}

/// Greedily applies e_i (smallest eligible i first) until the word is highest for `nodes`.
/// Returns the reached word and the indices in application order.
inline std::pair<Word, std::vector<int>> raise_to_highest(Word w, std::span<const int> nodes, const LetterTable& lt) {
    std::vector<int> applied;
    for (;;) {
        bool moved = false;
        for (int i : nodes) {
            if (word_step_inplace(i, w, Step::raise, lt)) {
                applied.push_back(i);
                moved = true;
                break;
            }
        }
        if (!moved) return {std::move(w), std::move(applied)};
    }
}

inline std::pair<Element, std::vector<int>> raise_to_highest(const Element& b, std::span<const int> nodes,
                                                              const CartanType& t) {
    auto [w, a] = raise_to_highest(b.word, nodes, letters_for(t));
    return {Element{b.shape, std::move(w)}, std::move(a)};
}

/// The node set {from, ..., n}.
inline std::vector<int> node_range(int from, int n) {
    std::vector<int> v;
    for (int i = from; i <= n; ++i) v.push_back(i);
    return v;
}

/// True if b lies in the component B(shape(b)): raising over 1..n must reach highest_word.
inline bool in_classical_component(const Element& b, const CartanType& t) {
    if (static_cast<int>(b.word.size()) != b.shape.cells()) return false;
    for (Letter x : b.word)
        if (!is_valid_letter(x, t)) return false;
    const auto nodes = node_range(1, t.rank);
    auto [top, a] = raise_to_highest(b, nodes, t);
    return top == highest_word(b.shape, t);
}

/// X_{n-1} weight (x_2, ..., x_n) read as a partition with `ncols` columns.
inline Shape branch_weight_shape(const ClassicalWeight& w, int ncols) {
    std::vector<int> rows;
    for (int k = 2; k <= w.rank(); ++k) {
        if (w.x(k) < 0) throw DomainError("X_{n-1} weight is not a partition");
        if (w.x(k) > 0) rows.push_back(w.x(k));
    }
    return Shape::from_rows(rows, ncols);
}

/// Multiset of X_{n-1} highest weights in B(Lambda), counted over X_{n-1}-highest vertices.
inline std::map<Shape, int> branch_multiplicities(const Shape& Lambda, const CartanType& t,
                                                  std::size_t budget = kDefaultVertexBudget) {
    const auto g = generate_component(Lambda, t, budget);
    const auto& lt = letters_for(t);
    std::map<Shape, int> out;
    for (const auto& w : g.words) {
        bool highest = true;
        for (int i = 2; i <= t.rank && highest; ++i) highest = reduced_signature(i, w, lt).eps == 0;
        if (highest) ++out[branch_weight_shape(word_weight(w, t.rank), Lambda.columns())];
    }
    return out;
}

} // namespace krc
