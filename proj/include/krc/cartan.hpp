#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace krc {

/// Affine family. The classical subalgebra is D_n, B_n, C_n respectively.
enum class Family { D, B, A2odd };

struct CartanType {
    Family family = Family::D;
    int rank = 4;

    friend bool operator==(const CartanType&, const CartanType&) = default;

    /// Throws unless the rank is usable for this family (D needs n >= 4, others n >= 3).
    void validate() const {
        const int min_rank = family == Family::D ? 4 : 3;
        if (rank < min_rank)
            throw DomainError("rank " + std::to_string(rank) + " too small for " + name());
    }

    /// Largest non-spin classical node.
    int max_nonspin_node() const {
        switch (family) {
        case Family::D: return rank - 2;
        case Family::B: return rank - 1;
        case Family::A2odd: return rank;
        }
        return 0;
    }

    bool is_spin_node(int i) const { return i > max_nonspin_node() && i <= rank; }

    bool has_zero_letter() const { return family == Family::B; }

    char classical_letter() const {
        switch (family) {
        case Family::D: return 'D';
        case Family::B: return 'B';
        case Family::A2odd: return 'C';
        }
        return '?';
    }

    /// Affine name such as "D_4^(1)" or "A_5^(2)".
    std::string name() const {
        switch (family) {
        case Family::D: return "D_" + std::to_string(rank) + "^(1)";
        case Family::B: return "B_" + std::to_string(rank) + "^(1)";
        case Family::A2odd: return "A_" + std::to_string(2 * rank - 1) + "^(2)";
        }
        return {};
    }

    /// The ["D",4,1] style triple.
    struct Triple {
        std::string letter;
        int index;
        int twist;
    };

    Triple triple() const {
        switch (family) {
        case Family::D: return {"D", rank, 1};
        case Family::B: return {"B", rank, 1};
        case Family::A2odd: return {"A", 2 * rank - 1, 2};
        }
        return {};
    }

    static CartanType from_triple(const std::string& letter, int index, int twist) {
        CartanType t;
        if (letter == "D" && twist == 1) {
            t = {Family::D, index};
        } else if (letter == "B" && twist == 1) {
            t = {Family::B, index};
        } else if (letter == "A" && twist == 2 && index % 2 == 1) {
            t = {Family::A2odd, (index + 1) / 2};
        } else {
            throw DomainError("unsupported Cartan type [" + letter + "," + std::to_string(index) +
                              "," + std::to_string(twist) + "]");
        }
        t.validate();
        return t;
    }
};

/// Column heights h_1 >= h_2 >= ... >= h_s >= 0. Trailing zero columns are significant.
struct Shape {
    std::vector<int> heights;

    Shape() = default;
    explicit Shape(std::vector<int> h) : heights(std::move(h)) {}

    int columns() const { return static_cast<int>(heights.size()); }
    int cells() const { return std::accumulate(heights.begin(), heights.end(), 0); }
    int height() const { return heights.empty() ? 0 : heights.front(); }
    int operator[](int j) const { return heights[static_cast<std::size_t>(j)]; }

    bool is_partition() const {
        if (!heights.empty() && heights.back() < 0) return false;
        return std::is_sorted(heights.begin(), heights.end(), std::greater<>());
    }

    /// Row lengths, bottom row first.
    std::vector<int> rows() const {
        std::vector<int> r(static_cast<std::size_t>(height()), 0);
        for (int h : heights)
            for (int i = 0; i < h; ++i) ++r[static_cast<std::size_t>(i)];
        return r;
    }

    /// Conjugate of a row-length partition, padded (or checked) to `ncols` columns.
    static Shape from_rows(const std::vector<int>& rows, int ncols) {
        std::vector<int> h(static_cast<std::size_t>(ncols), 0);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] < 0) throw DomainError("negative row length");
            if (rows[i] > ncols) throw DomainError("row longer than the column count");
            for (int j = 0; j < rows[i]; ++j) ++h[static_cast<std::size_t>(j)];
        }
        Shape s(std::move(h));
        if (!s.is_partition()) throw DomainError("row lengths are not a partition");
        return s;
    }

    /// Number of columns of height exactly `i`.
    int count_height(int i) const {
        return static_cast<int>(std::count(heights.begin(), heights.end(), i));
    }

    friend auto operator<=>(const Shape&, const Shape&) = default;
    friend bool operator==(const Shape&, const Shape&) = default;
};

inline std::string to_string(const Shape& s) {
    std::string out = "(";
    for (std::size_t j = 0; j < s.heights.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(s.heights[j]);
    }
    return out + ")";
}

/// Weight in the epsilon basis.
struct ClassicalWeight {
    std::vector<int> coords;

    ClassicalWeight() = default;
    explicit ClassicalWeight(int n) : coords(static_cast<std::size_t>(n), 0) {}
    explicit ClassicalWeight(std::vector<int> c) : coords(std::move(c)) {}

    int rank() const { return static_cast<int>(coords.size()); }
    /// 1-based coordinate x_i.
    int x(int i) const { return coords[static_cast<std::size_t>(i - 1)]; }
    int& x(int i) { return coords[static_cast<std::size_t>(i - 1)]; }

    ClassicalWeight& operator+=(const ClassicalWeight& o) {
        for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += o.coords[k];
        return *this;
    }
    ClassicalWeight& operator-=(const ClassicalWeight& o) {
        for (std::size_t k = 0; k < coords.size(); ++k) coords[k] -= o.coords[k];
        return *this;
    }
    friend ClassicalWeight operator+(ClassicalWeight a, const ClassicalWeight& b) { return a += b; }
    friend ClassicalWeight operator-(ClassicalWeight a, const ClassicalWeight& b) { return a -= b; }
    friend auto operator<=>(const ClassicalWeight&, const ClassicalWeight&) = default;
    friend bool operator==(const ClassicalWeight&, const ClassicalWeight&) = default;
};

/// Weight in the basis of fundamental weights Lambda_0..Lambda_n.
struct AffineWeight {
    std::vector<int> coords;

    AffineWeight() = default;
    explicit AffineWeight(std::vector<int> c) : coords(std::move(c)) {}

    static AffineWeight zero(int n) { return AffineWeight(std::vector<int>(static_cast<std::size_t>(n + 1), 0)); }

    int operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }

    /// Swap of the Lambda_i and Lambda_j coordinates.
    AffineWeight swapped(int i, int j) const {
        AffineWeight w = *this;
        std::swap(w[i], w[j]);
        return w;
    }

    friend auto operator<=>(const AffineWeight&, const AffineWeight&) = default;
    friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

inline std::string to_string(const AffineWeight& w) {
    std::string out;
    for (std::size_t i = 0; i < w.coords.size(); ++i) {
        if (w.coords[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (w.coords[i] != 1) out += std::to_string(w.coords[i]);
        out += "L" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

/// Coefficient a_i^vee of h_i in the canonical central element.
inline int level_coefficient(int i, const CartanType& t) {
    const int n = t.rank;
    if (i == 0 || i == 1) return 1;
    switch (t.family) {
    case Family::D: return i >= n - 1 ? 1 : 2;
    case Family::B: return i == n ? 1 : 2;
    case Family::A2odd: return 2;
    }
    return 0;
}

inline int level(const AffineWeight& w, const CartanType& t) {
    if (static_cast<int>(w.coords.size()) != t.rank + 1)
        throw DomainError("affine weight has " + std::to_string(w.coords.size()) +
                          " coordinates, expected " + std::to_string(t.rank + 1));
    int total = 0;
    for (int i = 0; i <= t.rank; ++i) total += level_coefficient(i, t) * w[i];
    return total;
}

/// All dominant weights of level s, lexicographically increasing in (l_0, ..., l_n).
inline std::vector<AffineWeight> dominant_weights(int s, const CartanType& t) {
    if (s < 0) throw DomainError("negative level");
    const int n = t.rank;
    std::vector<AffineWeight> out;
    AffineWeight cur = AffineWeight::zero(n);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == n + 1) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        const int c = level_coefficient(i, t);
        for (int v = 0; v * c <= remaining; ++v) {
            cur[i] = v;
            self(self, i + 1, remaining - v * c);
        }
        cur[i] = 0;
    };
    rec(rec, 0, s);
    return out;
}

inline void validate_kr_index(int r, const CartanType& t) {
    if (r < 1 || r > t.rank) throw DomainError("KR index r=" + std::to_string(r) + " out of range");
    if (t.is_spin_node(r))
        throw DomainError("r=" + std::to_string(r) + " is a spin node of " + t.name());
}

/// Shapes obtained from the r x s rectangle by removing vertical dominoes, tallest first.
inline std::vector<Shape> classical_shapes(int r, int s, const CartanType& t) {
    validate_kr_index(r, t);
    if (s < 1) throw DomainError("s must be positive");
    std::vector<Shape> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int max_h) -> void {
        if (static_cast<int>(cur.size()) == s) {
            out.emplace_back(cur);
            return;
        }
        for (int h = max_h; h >= 0; h -= 2) {
            cur.push_back(h);
            self(self, h);
            cur.pop_back();
        }
    };
    rec(rec, r);
    return out;
}

/// <h_i, w> for the classical projection; node 0 pairs as -(x_1 + x_2).
inline int h_pairing(int i, const ClassicalWeight& w, const CartanType& t) {
    const int n = t.rank;
    if (i < 0 || i > n) throw DomainError("node out of range");
    if (w.rank() != n) throw DomainError("weight rank mismatch");
    if (i == 0) return -(w.x(1) + w.x(2));
    if (i < n) return w.x(i) - w.x(i + 1);
    switch (t.family) {
    case Family::D: return w.x(n - 1) + w.x(n);
    case Family::B: return 2 * w.x(n);
    case Family::A2odd: return w.x(n);
    }
    return 0;
}

/// Classical simple root alpha_i, 1 <= i <= n, in epsilon coordinates.
inline ClassicalWeight simple_root(int i, const CartanType& t) {
    const int n = t.rank;
    ClassicalWeight a(n);
    if (i < n) {
        a.x(i) = 1;
        a.x(i + 1) = -1;
        return a;
    }
    switch (t.family) {
    case Family::D:
        a.x(n - 1) = 1;
        a.x(n) = 1;
        break;
    case Family::B: a.x(n) = 1; break;
    case Family::A2odd: a.x(n) = 2; break;
    }
    return a;
}

/// Classical part of alpha_0 (minus the highest short/long root, eps_1 + eps_2 in all three families).
inline ClassicalWeight affine_root_classical(const CartanType& t) {
    ClassicalWeight a(t.rank);
    a.x(1) = -1;
    a.x(2) = -1;
    return a;
}

/// Coefficients c with v = sum c_i alpha_i (i = 1..n), or nullopt if v is not in the root lattice.
inline std::optional<std::vector<int>> simple_root_coordinates(const ClassicalWeight& v, const CartanType& t) {
    const int n = t.rank;
    std::vector<int> partial(static_cast<std::size_t>(n + 1), 0);
    for (int k = 1; k <= n; ++k) partial[static_cast<std::size_t>(k)] = partial[static_cast<std::size_t>(k - 1)] + v.x(k);
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    auto at = [&](int k) -> int& { return c[static_cast<std::size_t>(k - 1)]; };
    switch (t.family) {
    case Family::D: {
        for (int k = 1; k <= n - 2; ++k) at(k) = partial[static_cast<std::size_t>(k)];
        const int sum = partial[static_cast<std::size_t>(n - 1)];
        const int diff = v.x(n);
        if ((sum + diff) % 2 != 0) return std::nullopt;
        at(n) = (sum + diff) / 2;
        at(n - 1) = (sum - diff) / 2;
        break;
    }
    case Family::B:
        for (int k = 1; k <= n; ++k) at(k) = partial[static_cast<std::size_t>(k)];
        break;
    case Family::A2odd:
        for (int k = 1; k < n; ++k) at(k) = partial[static_cast<std::size_t>(k)];
        if (partial[static_cast<std::size_t>(n)] % 2 != 0) return std::nullopt;
        at(n) = partial[static_cast<std::size_t>(n)] / 2;
        break;
    }
    return c;
}

/// The classical weight of a shape (partition) in epsilon coordinates.
inline ClassicalWeight shape_weight(const Shape& s, int n) {
    ClassicalWeight w(n);
    const auto rows = s.rows();
    if (static_cast<int>(rows.size()) > n) throw DomainError("shape taller than rank");
    for (std::size_t i = 0; i < rows.size(); ++i) w.coords[i] = rows[i];
    return w;
}

} // namespace krc
