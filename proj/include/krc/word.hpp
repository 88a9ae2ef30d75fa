#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "letter.hpp"

namespace krc {

/// Tensor factors b_L, ..., b_1 stored left to right (index 0 is b_L).
using Word = std::vector<Letter>;

/// Shared, immutable letter table for a Cartan type.
inline const LetterTable& letters_for(const CartanType& t) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<LetterTable>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{static_cast<int>(t.family), t.rank}];
    if (!slot) slot = std::make_unique<LetterTable>(t);
    return *slot;
}

/// Reduced i-signature summary of a word.
struct Signature {
    int eps = 0;       // number of unmatched +
    int phi = 0;       // number of unmatched -
    int lower_at = -1; // factor carrying the rightmost unmatched -
    int raise_at = -1; // factor carrying the leftmost unmatched +
};

/// Signature rule: each factor contributes phi_i minuses then eps_i pluses; "+-" pairs cancel.
inline Signature reduced_signature(int i, std::span<const Letter> w, const LetterTable& lt) {
    Signature sig;
    std::vector<int> open_plus; // factors of unmatched + so far, left to right
    for (int j = 0; j < static_cast<int>(w.size()); ++j) {
        const Letter x = w[static_cast<std::size_t>(j)];
        for (int k = lt.phi(i, x); k > 0; --k) {
            if (!open_plus.empty()) {
                open_plus.pop_back();
            } else {
                ++sig.phi;
                sig.lower_at = j;
            }
        }
        for (int k = lt.eps(i, x); k > 0; --k) open_plus.push_back(j);
    }
    sig.eps = static_cast<int>(open_plus.size());
    if (!open_plus.empty()) sig.raise_at = open_plus.front();
    return sig;
}

/// Applies e_i or f_i in place. Returns false (word untouched) if the result is 0.
inline bool word_step_inplace(int i, Word& w, Step dir, const LetterTable& lt) {
    const Signature sig = reduced_signature(i, w, lt);
    const int at = dir == Step::lower ? sig.lower_at : sig.raise_at;
    if (at < 0) return false;
    auto& x = w[static_cast<std::size_t>(at)];
    auto y = lt.step(i, x, dir);
    if (!y) throw InternalError("signature selected a factor with no arrow");
    x = *y;
    return true;
}

inline std::optional<Word> word_step(int i, Word w, Step dir, const LetterTable& lt) {
    if (i < 0 || i > lt.type().rank) throw DomainError("node " + std::to_string(i) + " out of range");
    if (!word_step_inplace(i, w, dir, lt)) return std::nullopt;
    return w;
}

inline std::optional<Word> word_step(int i, const Word& w, Step dir, const CartanType& t) {
    return word_step(i, w, dir, letters_for(t));
}

inline std::pair<int, int> word_eps_phi(int i, std::span<const Letter> w, const LetterTable& lt) {
    const Signature sig = reduced_signature(i, w, lt);
    return {sig.eps, sig.phi};
}

inline std::pair<int, int> word_eps_phi(int i, const Word& w, const CartanType& t) {
    return word_eps_phi(i, w, letters_for(t));
}

inline ClassicalWeight word_weight(std::span<const Letter> w, int n) {
    ClassicalWeight wt(n);
    for (Letter x : w) {
        if (x.value > 0) ++wt.x(x.value);
        if (x.value < 0) --wt.x(-x.value);
    }
    return wt;
}

/// Applies operators in sequence order (first index first). False if any step gives 0.
inline bool apply_in_order(Word& w, std::span<const int> indices, Step dir, const LetterTable& lt) {
    for (int i : indices)
        if (!word_step_inplace(i, w, dir, lt)) return false;
    return true;
}

/// Applies the product f_{a_1} f_{a_2} ... f_{a_l}: the rightmost operator acts first.
inline bool apply_product(Word& w, std::span<const int> a, Step dir, const LetterTable& lt) {
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        if (!word_step_inplace(*it, w, dir, lt)) return false;
    return true;
}

} // namespace krc
