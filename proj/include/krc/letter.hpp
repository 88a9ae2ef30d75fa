#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cartan.hpp"

namespace krc {

/// Letter of the vector crystal: k in 1..n, its bar -k, or 0 (B family only).
struct Letter {
    int value = 0;

    constexpr Letter() = default;
    constexpr explicit Letter(int v) : value(v) {}

    constexpr bool barred() const { return value < 0; }
    constexpr int index() const { return value < 0 ? -value : value; }

    friend constexpr auto operator<=>(Letter, Letter) = default;
};

inline std::string to_string(Letter x) {
    if (x.barred()) return std::to_string(x.index()) + "bar";
    return std::to_string(x.value);
}

enum class Step { lower, raise };

inline bool is_valid_letter(Letter x, const CartanType& t) {
    if (x.value == 0) return t.has_zero_letter();
    return x.index() <= t.rank;
}

/// The letters of B(omega_1) in crystal order 1, 2, ..., n, (0), nbar, ..., 1bar.
inline std::vector<Letter> alphabet(const CartanType& t) {
    std::vector<Letter> out;
    for (int k = 1; k <= t.rank; ++k) out.emplace_back(k);
    if (t.has_zero_letter()) out.emplace_back(0);
    for (int k = t.rank; k >= 1; --k) out.emplace_back(-k);
    return out;
}

namespace detail {

// Lowering arrows of the KR crystal B^{1,1}, transcribed per family.
inline std::optional<Letter> letter_lower(int i, Letter x, const CartanType& t) {
    const int n = t.rank;
    const int v = x.value;
    if (i == 0) {
        if (v == -2) return Letter(1);
        if (v == -1) return Letter(2);
        return std::nullopt;
    }
    if (i < n) {
        if (v == i) return Letter(i + 1);
        // For D_n and i = n-1 this is n-1 -> n and nbar -> (n-1)bar.
        if (v == -(i + 1)) return Letter(-i);
        return std::nullopt;
    }
    switch (t.family) {
    case Family::D:
        if (v == n - 1) return Letter(-n);
        if (v == n) return Letter(-(n - 1));
        return std::nullopt;
    case Family::B:
        if (v == n) return Letter(0);
        if (v == 0) return Letter(-n);
        return std::nullopt;
    case Family::A2odd:
        if (v == n) return Letter(-n);
        return std::nullopt;
    }
    return std::nullopt;
}

inline std::optional<Letter> letter_raise(int i, Letter x, const CartanType& t) {
    for (Letter y : alphabet(t)) {
        auto z = letter_lower(i, y, t);
        if (z && *z == x) return y;
    }
    return std::nullopt;
}

} // namespace detail

/// Follows (lower) or reverses (raise) the i-arrow at x; nullopt when there is none.
inline std::optional<Letter> letter_step(int i, Letter x, Step dir, const CartanType& t) {
    if (i < 0 || i > t.rank) throw DomainError("node " + std::to_string(i) + " out of range");
    if (!is_valid_letter(x, t)) throw DomainError("letter " + std::to_string(x.value) + " invalid for " + t.name());
    return dir == Step::lower ? detail::letter_lower(i, x, t) : detail::letter_raise(i, x, t);
}

inline ClassicalWeight letter_weight(Letter x, int n) {
    ClassicalWeight w(n);
    if (x.value > 0) w.x(x.value) = 1;
    if (x.value < 0) w.x(-x.value) = -1;
    return w;
}

/// (epsilon_i, phi_i) of a single letter, by repeated application.
inline std::pair<int, int> letter_eps_phi(int i, Letter x, const CartanType& t) {
    int eps = 0, phi = 0;
    for (auto y = detail::letter_raise(i, x, t); y; y = detail::letter_raise(i, *y, t)) ++eps;
    for (auto y = detail::letter_lower(i, x, t); y; y = detail::letter_lower(i, *y, t)) ++phi;
    return {eps, phi};
}

/// Precomputed letter statistics for one Cartan type; lookups are table reads.
class LetterTable {
public:
    explicit LetterTable(const CartanType& t) : type_(t), n_(t.rank) {
        const int span = 2 * n_ + 1;
        const auto size = static_cast<std::size_t>(span * (n_ + 1));
        lower_.assign(size, kNone);
        raise_.assign(size, kNone);
        eps_.assign(size, 0);
        phi_.assign(size, 0);
        for (int i = 0; i <= n_; ++i) {
            for (Letter x : alphabet(t)) {
                const auto k = slot(i, x);
                if (auto y = detail::letter_lower(i, x, t)) lower_[k] = y->value;
                if (auto y = detail::letter_raise(i, x, t)) raise_[k] = y->value;
                auto [e, p] = letter_eps_phi(i, x, t);
                eps_[k] = e;
                phi_[k] = p;
            }
        }
    }

    const CartanType& type() const { return type_; }

    int eps(int i, Letter x) const { return eps_[slot(i, x)]; }
    int phi(int i, Letter x) const { return phi_[slot(i, x)]; }

    std::optional<Letter> step(int i, Letter x, Step dir) const {
        const int v = dir == Step::lower ? lower_[slot(i, x)] : raise_[slot(i, x)];
        if (v == kNone) return std::nullopt;
        return Letter(v);
    }

private:
    static constexpr int kNone = 1 << 20;

    std::size_t slot(int i, Letter x) const {
        return static_cast<std::size_t>(i * (2 * n_ + 1) + (x.value + n_));
    }

    CartanType type_;
    int n_;
    std::vector<int> lower_, raise_, eps_, phi_;
};

} // namespace krc
