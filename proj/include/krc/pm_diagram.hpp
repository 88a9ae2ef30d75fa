#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "classical.hpp"

namespace krc {

/// Nested partitions inner <= middle <= outer with horizontal-strip differences.
/// A + sits at height middle[j] when middle[j] > inner[j]; a - at height outer[j] when outer[j] > middle[j].
struct PMDiagram {
    Shape inner, middle, outer;

    int columns() const { return outer.columns(); }
    bool has_plus(int j) const { return middle[j] > inner[j]; }
    bool has_minus(int j) const { return outer[j] > middle[j]; }

    int plus_count() const {
        int m = 0;
        for (int j = 0; j < columns(); ++j) m += has_plus(j);
        return m;
    }
    int minus_count() const {
        int m = 0;
        for (int j = 0; j < columns(); ++j) m += has_minus(j);
        return m;
    }

    void validate() const {
        const int s = outer.columns();
        if (inner.columns() != s || middle.columns() != s) throw DomainError("diagram column counts differ");
        if (!inner.is_partition() || !middle.is_partition() || !outer.is_partition())
            throw DomainError("diagram shapes are not partitions");
        for (int j = 0; j < s; ++j) {
            const int a = middle[j] - inner[j], b = outer[j] - middle[j];
            if (a < 0 || a > 1 || b < 0 || b > 1) throw DomainError("diagram differences are not horizontal strips");
        }
    }

    friend bool operator==(const PMDiagram&, const PMDiagram&) = default;
    friend auto operator<=>(const PMDiagram& a, const PMDiagram& b) {
        return std::tie(a.outer, a.middle, a.inner) <=> std::tie(b.outer, b.middle, b.inner);
    }
};

struct PMPair {
    PMDiagram P, p;
    friend bool operator==(const PMPair&, const PMPair&) = default;
};

namespace detail {

struct ColumnTriple {
    int lam, mu, La;
};

inline PMDiagram from_triples(std::vector<ColumnTriple> cols) {
    std::sort(cols.begin(), cols.end(), [](const ColumnTriple& a, const ColumnTriple& b) {
        return std::tie(a.lam, a.La, a.mu) > std::tie(b.lam, b.La, b.mu);
    });
    PMDiagram d;
    for (const auto& c : cols) {
        d.inner.heights.push_back(c.lam);
        d.middle.heights.push_back(c.mu);
        d.outer.heights.push_back(c.La);
    }
    d.validate();
    return d;
}

inline std::vector<ColumnTriple> triples(const PMDiagram& d) {
    std::vector<ColumnTriple> out;
    for (int j = 0; j < d.columns(); ++j) out.push_back({d.inner[j], d.middle[j], d.outer[j]});
    return out;
}

} // namespace detail

/// Sorts columns into the unique order in which all three shapes are partitions.
inline PMDiagram canonical(const PMDiagram& d) { return detail::from_triples(detail::triples(d)); }

using SignRows = std::vector<std::vector<std::string>>;

/// Rows top to bottom; "+", "-" or "" per cell of the outer shape.
inline SignRows to_sign_rows(const PMDiagram& d) {
    SignRows rows;
    for (int h = d.outer.height(); h >= 1; --h) {
        std::vector<std::string> row;
        for (int j = 0; j < d.columns() && d.outer[j] >= h; ++j) {
            if (d.has_minus(j) && h == d.outer[j]) row.emplace_back("-");
            else if (d.has_plus(j) && h == d.middle[j]) row.emplace_back("+");
            else row.emplace_back("");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Parses rows top to bottom; the diagram gets `ncols` columns. Accepts "-" and the Unicode minus.
inline PMDiagram diagram_from_rows(const SignRows& rows, int ncols) {
    std::vector<int> lengths;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) lengths.push_back(static_cast<int>(it->size()));
    const Shape outer = Shape::from_rows(lengths, ncols);
    const int H = static_cast<int>(rows.size());
    PMDiagram d{outer, outer, outer};
    for (int j = 0; j < ncols; ++j) {
        bool minus = false, plus = false;
        for (int h = outer[j]; h >= 1; --h) {
            const std::string& c = rows[static_cast<std::size_t>(H - h)][static_cast<std::size_t>(j)];
            if (c.empty()) continue;
            const bool is_minus = c == "-" || c == "−";
            if (is_minus && h == outer[j]) minus = true;
            else if (c == "+" && h == outer[j] - (minus ? 1 : 0)) plus = true;
            else throw DomainError("misplaced or unknown diagram symbol '" + c + "'");
        }
        d.middle.heights[static_cast<std::size_t>(j)] = outer[j] - minus;
        d.inner.heights[static_cast<std::size_t>(j)] = outer[j] - minus - plus;
    }
    d.validate();
    return d;
}

inline std::string to_string(const PMDiagram& d) {
    std::string out = "[";
    const auto rows = to_sign_rows(d);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ',';
        out += '[';
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) out += ',';
            out += '"' + rows[i][j] + '"';
        }
        out += ']';
    }
    return out + "]";
}

/// All diagrams with the given outer shape (optionally fixed inner shape), sorted.
inline std::vector<PMDiagram> enumerate_diagrams(const Shape& outer, const std::optional<Shape>& inner = std::nullopt) {
    if (!outer.is_partition()) throw DomainError("outer shape is not a partition");
    std::vector<PMDiagram> out;
    const int s = outer.columns();
    std::vector<int> lam(static_cast<std::size_t>(s)), mu(static_cast<std::size_t>(s));
    auto rec = [&](auto&& self, int j) -> void {
        if (j == s) {
            out.push_back(PMDiagram{Shape(lam), Shape(mu), outer});
            return;
        }
        const int L = outer[j];
        // (drop of mu below outer, drop of inner below mu)
        static constexpr int kOptions[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
        for (const auto& o : kOptions) {
            const int m = L - o[0], l = m - o[1];
            if (l < 0) continue;
            if (j > 0 && (m > mu[static_cast<std::size_t>(j - 1)] || l > lam[static_cast<std::size_t>(j - 1)])) continue;
            if (inner && l != (*inner)[j]) continue;
            mu[static_cast<std::size_t>(j)] = m;
            lam[static_cast<std::size_t>(j)] = l;
            self(self, j + 1);
        }
    };
    if (inner && inner->columns() != s) return out;
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// The bijection from diagrams to X_{n-1}-highest elements of B(outer).
inline Element phi(const PMDiagram& P) {
    P.validate();
    const int s = P.columns();
    std::vector<std::vector<int>> col(static_cast<std::size_t>(s)); // bottom-up values
    for (int j = 0; j < s; ++j) {
        auto& c = col[static_cast<std::size_t>(j)];
        const int L = P.outer[j] - (P.has_minus(j) ? 1 : 0);
        for (int h = 1; h <= L; ++h) c.push_back(h + 1);
        if (P.has_minus(j)) c.push_back(-1);
    }
    int pj = 0, ph = s > 0 ? P.outer[0] : 0; // scan pointer: column, height (top to bottom)
    auto advance = [&]() -> bool {
        while (pj < s) {
            for (; ph >= 1; --ph) {
                const int v = col[static_cast<std::size_t>(pj)][static_cast<std::size_t>(ph - 1)];
                if (v == -1 || v == 2) return true;
            }
            if (++pj < s) ph = P.outer[pj];
        }
        return false;
    };
    for (int j = 0; j < s; ++j) {
        if (!P.has_plus(j)) continue;
        const int h = P.middle[j];
        if (!advance()) throw InternalError("phi: no cell left for the + in column " + std::to_string(j));
        auto& c = col[static_cast<std::size_t>(pj)];
        if (c[static_cast<std::size_t>(ph - 1)] == -1) {
            c[static_cast<std::size_t>(ph - 1)] = -(h + 1);
            continue;
        }
        const int L = P.outer[pj] - (P.has_minus(pj) ? 1 : 0);
        if (h > L) throw InternalError("phi: + taller than the string it replaces");
        for (int k = 1; k <= L; ++k) c[static_cast<std::size_t>(k - 1)] = k <= h ? k : k + 1;
        if (++pj < s) ph = P.outer[pj];
    }
    Element b{P.outer, {}};
    for (int j = 0; j < s; ++j)
        for (int h = P.outer[j]; h >= 1; --h) b.word.emplace_back(col[static_cast<std::size_t>(j)][static_cast<std::size_t>(h - 1)]);
    return b;
}

/// Index string a with phi(P) = f_{a_1} ... f_{a_l} highest_word(outer(P)).
inline std::vector<int> diagrams_string(const PMDiagram& P, Family family, int n) {
    std::vector<int> a;
    for (int j = P.columns() - 1; j >= 0; --j) {
        if (P.has_plus(j) || P.inner[j] < 1) continue;
        for (int k = 1; k <= P.inner[j]; ++k) a.push_back(k);
    }
    for (int j = 0; j < P.columns(); ++j) {
        if (!P.has_minus(j)) continue;
        const int h = P.outer[j];
        switch (family) {
        case Family::D:
            for (int k = 1; k <= n; ++k) a.push_back(k);
            for (int k = n - 2; k >= h; --k) a.push_back(k);
            break;
        case Family::B:
            for (int k = 1; k <= n; ++k) a.push_back(k);
            for (int k = n; k >= h; --k) a.push_back(k);
            break;
        case Family::A2odd:
            for (int k = 1; k <= n; ++k) a.push_back(k);
            for (int k = n - 1; k >= h; --k) a.push_back(k);
            break;
        }
    }
    return a;
}

inline bool is_highest_for(const Word& w, int from, const LetterTable& lt) {
    for (int i = from; i <= lt.type().rank; ++i)
        if (reduced_signature(i, w, lt).eps != 0) return false;
    return true;
}

/// Inverse of phi on X_{n-1}-highest elements.
inline PMDiagram phi_inverse(const Element& b, const CartanType& t) {
    const auto& lt = letters_for(t);
    if (!is_highest_for(b.word, 2, lt)) throw DomainError("element is not highest for nodes 2..n");
    const int s = b.shape.columns();
    const Shape inner = branch_weight_shape(word_weight(b.word, t.rank), s);
    PMDiagram P{inner, b.shape, b.shape};
    bool direct = true;
    for (int j = 0; j < s && direct; ++j) {
        int barred = 0;
        for (int h = 1; h <= b.shape[j]; ++h) barred += cell(b, j, h).barred();
        if (barred > 1) direct = false;
        P.middle.heights[static_cast<std::size_t>(j)] = b.shape[j] - barred;
    }
    if (direct) {
        try {
            P.validate();
            if (phi(P) == b) return P;
        } catch (const DomainError&) {
        }
    }
    for (const auto& Q : enumerate_diagrams(b.shape, inner))
        if (phi(Q) == b) return Q;
    throw DomainError("no diagram maps to " + to_string(b));
}

/// The involution on diagrams inside B^{r,s}; s is the column count of P.
inline PMDiagram s_involution(const PMDiagram& P, int r) {
    P.validate();
    std::vector<detail::ColumnTriple> out;
    for (int i = 0; i <= r; ++i) {
        int c = 0, p = 0;
        for (int j = 0; j < P.columns(); ++j) {
            if (P.inner[j] != i) continue;
            ++c;
            const bool plus = P.has_plus(j), minus = P.has_minus(j);
            if (i == r) {
                if (plus || minus) throw DomainError("signs above a full-height column");
            } else if ((r - i) % 2 == 1) {
                if (plus == minus) throw DomainError("parity-inconsistent diagram");
                p += plus;
            } else {
                if (plus != minus) throw DomainError("parity-inconsistent diagram");
                p += plus;
            }
        }
        if (i == r) {
            for (int k = 0; k < c; ++k) out.push_back({i, i, i});
        } else if ((r - i) % 2 == 1) {
            for (int k = 0; k < c - p; ++k) out.push_back({i, i + 1, i + 1});
            for (int k = 0; k < p; ++k) out.push_back({i, i, i + 1});
        } else {
            for (int k = 0; k < c - p; ++k) out.push_back({i, i + 1, i + 2});
            for (int k = 0; k < p; ++k) out.push_back({i, i, i});
        }
    }
    if (static_cast<int>(out.size()) != P.columns()) throw DomainError("diagram has columns taller than r");
    return detail::from_triples(std::move(out));
}

/// Shifts every index of a string by `by`.
inline std::vector<int> shifted(std::vector<int> a, int by) {
    for (int& x : a) x += by;
    return a;
}

/// The X_{n-2}-highest element described by (P, p).
inline Element psi(const PMPair& pr, const CartanType& t) {
    pr.p.validate();
    if (pr.P.inner != pr.p.outer) throw DomainError("inner(P) differs from outer(p)");
    Element b = phi(pr.P);
    const auto a = shifted(diagrams_string(pr.p, t.family, t.rank - 1), 1);
    if (!apply_product(b.word, a, Step::lower, letters_for(t)))
        throw InternalError("psi: lowering string annihilated phi(P)");
    return b;
}

/// The pair (P, p) with psi(P, p) = b, for X_{n-2}-highest b.
inline PMPair pair_of(const Element& b, const CartanType& t) {
    const auto& lt = letters_for(t);
    if (!is_highest_for(b.word, 3, lt)) throw DomainError("element is not highest for nodes 3..n");
    const auto nodes = node_range(2, t.rank);
    auto [top, applied] = raise_to_highest(b.word, nodes, lt);
    const PMDiagram P = phi_inverse(Element{b.shape, top}, t);
    const auto wt = word_weight(b.word, t.rank);
    std::vector<int> rows;
    for (int k = 3; k <= t.rank; ++k) {
        if (wt.x(k) < 0) throw DomainError("X_{n-2} weight is not a partition");
        if (wt.x(k) > 0) rows.push_back(wt.x(k));
    }
    const Shape inner_p = Shape::from_rows(rows, b.shape.columns());
    for (const auto& p : enumerate_diagrams(P.inner, inner_p)) {
        if (p.plus_count() - p.minus_count() != wt.x(2)) continue;
        if (psi({P, p}, t) == b) return {P, p};
    }
    throw DomainError("no diagram pair maps to " + to_string(b));
}

/// e_1 acting on a pair of diagrams through the three pairing passes; nullopt when e_1 gives 0.
inline std::optional<PMPair> e1_pair(const PMPair& pr) {
    const PMDiagram& P = pr.P;
    const PMDiagram& p = pr.p;
    if (P.inner != p.outer) throw DomainError("inner(P) differs from outer(p)");
    const int s = P.columns();
    std::vector<int> Pplus, Pminus, pplus, pminus;
    for (int j = 0; j < s; ++j) {
        if (P.has_plus(j)) Pplus.push_back(j);
        if (P.has_minus(j)) Pminus.push_back(j);
        if (p.has_plus(j)) pplus.push_back(j);
        if (p.has_minus(j)) pminus.push_back(j);
    }
    std::vector<bool> Pplus_used(Pplus.size()), Pminus_used(Pminus.size());
    std::vector<bool> pplus_paired(pplus.size()), pminus_paired(pminus.size());

    for (std::size_t a = 0; a < pplus.size(); ++a)
        for (std::size_t k = 0; k < Pplus.size() && Pplus[k] <= pplus[a]; ++k)
            if (!Pplus_used[k]) {
                Pplus_used[k] = pplus_paired[a] = true;
                break;
            }
    for (std::size_t a = 0; a < pminus.size(); ++a)
        for (std::size_t k = Pminus.size(); k-- > 0;)
            if (Pminus[k] <= pminus[a] && !Pminus_used[k]) {
                Pminus_used[k] = pminus_paired[a] = true;
                break;
            }
    for (std::size_t a = 0; a < pplus.size(); ++a) {
        if (pplus_paired[a]) continue;
        for (std::size_t k = 0; k < pminus.size(); ++k)
            if (!pminus_paired[k]) {
                pminus_paired[k] = pplus_paired[a] = true;
                break;
            }
    }

    // columns are re-matched after a move: the partner column is the unique one keeping a valid diagram
    auto Pc = detail::triples(P);
    auto pc = detail::triples(p);
    for (std::size_t a = pplus.size(); a-- > 0;) {
        if (pplus_paired[a]) continue;
        const auto j = static_cast<std::size_t>(pplus[a]);
        const int L = pc[j].La;
        std::optional<std::size_t> c;
        for (std::size_t k = 0; k < Pc.size(); ++k)
            if (Pc[k].lam == L && Pc[k].mu == L && (!c || Pc[k].La < Pc[*c].La)) c = k;
        if (!c) throw InternalError("e1_pair: no column of P can take the +");
        Pc[*c].lam -= 1;
        pc[j].La -= 1;
        pc[j].mu = pc[j].lam;
        return PMPair{detail::from_triples(Pc), detail::from_triples(pc)};
    }
    for (std::size_t k = 0; k < Pminus.size(); ++k) {
        if (Pminus_used[k]) continue;
        const auto j = static_cast<std::size_t>(Pminus[k]);
        const int L = Pc[j].lam;
        std::optional<std::size_t> c;
        for (std::size_t q = 0; q < pc.size(); ++q)
            if (pc[q].La == L && pc[q].mu == L && (!c || pc[q].lam > pc[*c].lam)) c = q;
        if (!c) throw InternalError("e1_pair: no column of p can take the -");
        Pc[j].lam += 1;
        Pc[j].mu = Pc[j].La;
        pc[*c].La += 1;
        return PMPair{detail::from_triples(Pc), detail::from_triples(pc)};
    }
    return std::nullopt;
}

} // namespace krc
