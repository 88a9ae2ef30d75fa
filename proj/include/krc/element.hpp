#pragma once

#include <string>
#include <vector>

#include "word.hpp"

namespace krc {

/// A tableau stored as its reading word. Columns run left to right (tallest first),
/// and each column contributes its letters top cell first.
struct Element {
    Shape shape;
    Word word;

    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element& a, const Element& b) {
        if (auto c = a.shape <=> b.shape; c != 0) return c;
        return a.word <=> b.word;
    }
};

using Rows = std::vector<std::vector<int>>;

/// Offset of column j inside the reading word.
inline int column_offset(const Shape& s, int j) {
    int off = 0;
    for (int k = 0; k < j; ++k) off += s[k];
    return off;
}

/// Letter at height h (1 = bottom) of column j.
inline Letter cell(const Element& b, int j, int h) {
    return b.word[static_cast<std::size_t>(column_offset(b.shape, j) + b.shape[j] - h)];
}

/// Rows from top to bottom, each listed left to right.
inline Rows to_rows(const Element& b) {
    Rows rows;
    for (int h = b.shape.height(); h >= 1; --h) {
        std::vector<int> row;
        for (int j = 0; j < b.shape.columns() && b.shape[j] >= h; ++j) row.push_back(cell(b, j, h).value);
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Inverse of to_rows; the shape gets `ncols` columns (missing ones have height 0).
inline Element from_rows(const Rows& rows, int ncols) {
    std::vector<int> lengths;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) lengths.push_back(static_cast<int>(it->size()));
    for (std::size_t i = 1; i < lengths.size(); ++i)
        if (lengths[i] > lengths[i - 1]) throw DomainError("rows must not get longer going up");
    if (!lengths.empty() && lengths.back() == 0) throw DomainError("empty row in tableau");
    Element b{Shape::from_rows(lengths, ncols), {}};
    const int H = static_cast<int>(rows.size());
    for (int j = 0; j < b.shape.columns(); ++j)
        for (int h = b.shape[j]; h >= 1; --h)
            b.word.emplace_back(rows[static_cast<std::size_t>(H - h)][static_cast<std::size_t>(j)]);
    return b;
}

inline std::string rows_string(const Rows& rows) {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ',';
        out += '[';
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(rows[i][j]);
        }
        out += ']';
    }
    return out + "]";
}

inline std::string to_string(const Element& b) { return rows_string(to_rows(b)); }

/// Compact hash key for the word of an element.
inline std::string word_key(const Word& w) {
    std::string k(w.size(), '\0');
    for (std::size_t i = 0; i < w.size(); ++i) k[i] = static_cast<char>(w[i].value + 64);
    return k;
}

inline std::string element_key(const Element& b) {
    std::string k;
    for (int h : b.shape.heights) k += static_cast<char>(h + 1);
    k += '|';
    return k + word_key(b.word);
}

inline ClassicalWeight weight(const Element& b, int n) { return word_weight(b.word, n); }

/// Number of letters equal to x.
inline int multiplicity(const Element& b, Letter x) {
    int m = 0;
    for (Letter y : b.word) m += (y == x);
    return m;
}

} // namespace krc
