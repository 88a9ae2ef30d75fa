#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pm_diagram.hpp"

namespace krc {

/// The crystal automorphism realizing the Dynkin swap 0 <-> 1, computed on a single element.
/// The element's shape must carry all s columns of B^{r,s}.
inline Element sigma(const Element& b, int r, const CartanType& t) {
    const auto& lt = letters_for(t);
    const auto nodes = node_range(2, t.rank);
    auto [top, applied] = raise_to_highest(b.word, nodes, lt);
    const PMDiagram P = phi_inverse(Element{b.shape, std::move(top)}, t);
    Element c = phi(s_involution(P, r));
    for (auto it = applied.rbegin(); it != applied.rend(); ++it)
        if (!word_step_inplace(*it, c.word, Step::lower, lt)) throw InternalError("sigma: replayed string annihilated");
    return c;
}

/// e_i / f_i for any node, with e_0 = sigma e_1 sigma.
inline std::optional<Element> affine_step(int i, const Element& b, Step dir, int r, const CartanType& t) {
    if (i < 0 || i > t.rank) throw DomainError("node " + std::to_string(i) + " out of range");
    const auto& lt = letters_for(t);
    if (i != 0) {
        Element c = b;
        if (!word_step_inplace(i, c.word, dir, lt)) return std::nullopt;
        return c;
    }
    Element c = sigma(b, r, t);
    if (!word_step_inplace(1, c.word, dir, lt)) return std::nullopt;
    return sigma(c, r, t);
}

/// (epsilon(b), phi(b)) as affine weights, node 0 included.
inline std::pair<AffineWeight, AffineWeight> eps_phi_vec(const Element& b, int r, const CartanType& t) {
    const int n = t.rank;
    const auto& lt = letters_for(t);
    AffineWeight e = AffineWeight::zero(n), f = AffineWeight::zero(n);
    for (int i = 1; i <= n; ++i) std::tie(e[i], f[i]) = word_eps_phi(i, b.word, lt);
    for (auto c = affine_step(0, b, Step::raise, r, t); c; c = affine_step(0, *c, Step::raise, r, t)) ++e[0];
    for (auto c = affine_step(0, b, Step::lower, r, t); c; c = affine_step(0, *c, Step::lower, r, t)) ++f[0];
    return {e, f};
}

namespace detail {

/// Column triples (inner, middle, outer) contributed by Lambda_k.
inline std::vector<ColumnTriple> weight_piece(int k, int r, const CartanType& t) {
    const bool r_even = r % 2 == 0;
    if (k == 0) return r_even ? std::vector<ColumnTriple>{{0, 0, 0}} : std::vector<ColumnTriple>{{0, 1, 1}};
    if (k == 1) return r_even ? std::vector<ColumnTriple>{{0, 1, 2}} : std::vector<ColumnTriple>{{0, 0, 1}};
    if (k <= r) {
        if ((k - r) % 2 != 0) return {{k - 1, k, k + 1}, {k - 1, k - 1, k - 1}};
        return {{k - 1, k, k}, {k - 1, k - 1, k}};
    }
    if (k <= t.max_nonspin_node()) return {{r, r, r}, {r, r, r}};
    return {{r, r, r}};
}

/// Columns of T(Lambda_k), each listed top to bottom.
inline std::vector<std::vector<int>> weight_tableau(int k, int r, const CartanType& t) {
    const int n = t.rank;
    const bool r_even = r % 2 == 0;
    if (k == 0) return r_even ? std::vector<std::vector<int>>{{}} : std::vector<std::vector<int>>{{1}};
    if (k == 1) return r_even ? std::vector<std::vector<int>>{{-2, 2}} : std::vector<std::vector<int>>{{-1}};
    std::vector<int> c1, c2;
    if (k <= r && (k - r) % 2 != 0) {
        c1.push_back(-(k + 1));
        for (int v = k + 1; v >= 2; --v) c1.push_back(v);
        for (int v = 2; v <= k; ++v) c2.push_back(-v);
        return {c1, c2};
    }
    if (k <= r) {
        for (int v = k; v >= 1; --v) c1.push_back(v);
        for (int v = 1; v <= k; ++v) c2.push_back(-v);
        return {c1, c2};
    }
    if (k <= t.max_nonspin_node()) {
        for (int v = k; v >= k - r + 1; --v) c1.push_back(v);
        for (int v = k - r + 1; v <= k; ++v) c2.push_back(-v);
        return {c1, c2};
    }
    if (t.family == Family::B) return {std::vector<int>(static_cast<std::size_t>(r), 0)};
    // D, k = n-1 or n: alternating n, nbar from the bottom
    const int bottom = k == n - 1 ? n : -n;
    for (int h = r; h >= 1; --h) c1.push_back(h % 2 == 1 ? bottom : -bottom);
    return {c1};
}

inline Element element_from_columns(const std::vector<std::vector<int>>& cols) {
    Element b;
    for (const auto& c : cols) {
        b.shape.heights.push_back(static_cast<int>(c.size()));
        for (int v : c) b.word.emplace_back(v);
    }
    return b;
}

} // namespace detail

/// The diagram attached to a dominant weight of level s (s = its column count).
inline PMDiagram weight_diagram(const AffineWeight& La, int r, const CartanType& t) {
    validate_kr_index(r, t);
    level(La, t);
    std::vector<detail::ColumnTriple> cols;
    for (int k = 0; k <= t.rank; ++k)
        for (int m = 0; m < La[k]; ++m) {
            auto piece = detail::weight_piece(k, r, t);
            cols.insert(cols.end(), piece.begin(), piece.end());
        }
    if (static_cast<int>(cols.size()) != level(La, t)) throw InternalError("weight diagram width differs from level");
    return detail::from_triples(std::move(cols));
}

/// The string f(Lambda_k) in application order (first entry acts first).
inline std::vector<int> weight_string(int k, int r, const CartanType& t) {
    const auto& lt = letters_for(t);
    const Element T = detail::element_from_columns(detail::weight_tableau(k, r, t));
    const auto nodes = node_range(2, t.rank);
    auto [top, applied] = raise_to_highest(T.word, nodes, lt);
    const Element Y = phi(detail::from_triples(detail::weight_piece(k, r, t)));
    if (!(Element{T.shape, top} == Y))
        throw InternalError("T(Lambda_" + std::to_string(k) + ") does not raise to its diagram tableau");
    return {applied.rbegin(), applied.rend()};
}

/// The element b of B^{r,s} with epsilon(b) = La, built from diagram(La) and the f(Lambda_k) strings.
inline Element minimal_element(const AffineWeight& La, int r, const CartanType& t) {
    const auto& lt = letters_for(t);
    Element b = phi(weight_diagram(La, r, t));
    for (int k = 2; k <= t.rank; ++k) {
        if (La[k] == 0) continue;
        const auto a = weight_string(k, r, t);
        for (int m = 0; m < La[k]; ++m)
            if (!apply_in_order(b.word, a, Step::lower, lt))
                throw InternalError("f(Lambda_" + std::to_string(k) + ") annihilated the element");
    }
    if (eps_phi_vec(b, r, t).first != La)
        throw InternalError("constructed element has epsilon " + to_string(eps_phi_vec(b, r, t).first) +
                            ", expected " + to_string(La));
    return b;
}

/// B^{r,s} as the union of its classical components, with tables for all operators.
class KRCrystal {
public:
    KRCrystal(const CartanType& t, int r, int s, std::size_t budget = kDefaultVertexBudget)
        : type_(t), r_(r), s_(s) {
        t.validate();
        validate_kr_index(r, t);
        const int n = t.rank;
        shapes_ = classical_shapes(r, s, t);
        f_.assign(static_cast<std::size_t>(n + 1), {});
        e_.assign(static_cast<std::size_t>(n + 1), {});
        for (const auto& sh : shapes_) {
            const std::size_t remaining = budget > elements_.size() ? budget - elements_.size() : 0;
            auto g = generate_component(sh, t, remaining);
            const int off = static_cast<int>(elements_.size());
            component_start_.push_back(off);
            for (std::size_t v = 0; v < g.size(); ++v) {
                index_.emplace(element_key(g.element(v)), static_cast<int>(elements_.size()));
                elements_.push_back(g.element(v));
            }
            for (int i = 1; i <= n; ++i)
                for (int tgt : g.f[static_cast<std::size_t>(i - 1)]) f_[static_cast<std::size_t>(i)].push_back(tgt < 0 ? -1 : tgt + off);
        }
        for (int i = 1; i <= n; ++i) e_[static_cast<std::size_t>(i)] = invert(f_[static_cast<std::size_t>(i)]);
    }

    const CartanType& type() const { return type_; }
    int r() const { return r_; }
    int s() const { return s_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Shape>& shapes() const { return shapes_; }
    const Element& element(int v) const { return elements_[static_cast<std::size_t>(v)]; }
    const std::vector<Element>& elements() const { return elements_; }

    /// Global index of b, or -1 if b is not in the crystal.
    int index_of(const Element& b) const {
        auto it = index_.find(element_key(b));
        return it == index_.end() ? -1 : it->second;
    }

    int f(int i, int v) const { return table(i, Step::lower)[static_cast<std::size_t>(v)]; }
    int e(int i, int v) const { return table(i, Step::raise)[static_cast<std::size_t>(v)]; }
    int step(int i, int v, Step dir) const { return table(i, dir)[static_cast<std::size_t>(v)]; }

    int sigma(int v) const {
        ensure_affine();
        return sigma_[static_cast<std::size_t>(v)];
    }

    int eps(int i, int v) const {
        ensure_affine();
        return eps_[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
    }
    int phi(int i, int v) const {
        ensure_affine();
        return phi_[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
    }

    AffineWeight eps_vec(int v) const {
        AffineWeight w = AffineWeight::zero(type_.rank);
        for (int i = 0; i <= type_.rank; ++i) w[i] = eps(i, v);
        return w;
    }
    AffineWeight phi_vec(int v) const {
        AffineWeight w = AffineWeight::zero(type_.rank);
        for (int i = 0; i <= type_.rank; ++i) w[i] = phi(i, v);
        return w;
    }

    /// Checks membership and returns the global index; throws DomainError for foreign elements.
    int require(const Element& b) const {
        if (b.shape.columns() != s_) throw DomainError("element does not have " + std::to_string(s_) + " columns");
        const int v = index_of(b);
        if (v < 0) throw DomainError("element " + to_string(b) + " is not in B^{" + std::to_string(r_) + "," + std::to_string(s_) + "}");
        return v;
    }

private:
    static std::vector<int> invert(const std::vector<int>& f) {
        std::vector<int> e(f.size(), -1);
        for (std::size_t v = 0; v < f.size(); ++v)
            if (f[v] >= 0) e[static_cast<std::size_t>(f[v])] = static_cast<int>(v);
        return e;
    }

    const std::vector<int>& table(int i, Step dir) const {
        if (i < 0 || i > type_.rank) throw DomainError("node " + std::to_string(i) + " out of range");
        if (i == 0) ensure_affine();
        return dir == Step::lower ? f_[static_cast<std::size_t>(i)] : e_[static_cast<std::size_t>(i)];
    }

    void ensure_affine() const {
        std::call_once(affine_once_, [this] { build_affine(); });
    }

    void build_affine() const {
        const int n = type_.rank;
        const std::size_t N = elements_.size();
        sigma_.resize(N);
        for (std::size_t v = 0; v < N; ++v) {
            const int w = index_of(krc::sigma(elements_[v], r_, type_));
            if (w < 0) throw InternalError("sigma left the crystal at " + to_string(elements_[v]));
            sigma_[v] = w;
        }
        auto conj = [&](const std::vector<int>& one) {
            std::vector<int> out(N, -1);
            for (std::size_t v = 0; v < N; ++v) {
                const int w = one[static_cast<std::size_t>(sigma_[v])];
                out[v] = w < 0 ? -1 : sigma_[static_cast<std::size_t>(w)];
            }
            return out;
        };
        f_[0] = conj(f_[1]);
        e_[0] = conj(e_[1]);
        eps_.assign(static_cast<std::size_t>(n + 1), std::vector<int>(N, 0));
        phi_.assign(static_cast<std::size_t>(n + 1), std::vector<int>(N, 0));
        for (int i = 0; i <= n; ++i) {
            const auto& fi = f_[static_cast<std::size_t>(i)];
            const auto& ei = e_[static_cast<std::size_t>(i)];
            for (std::size_t v = 0; v < N; ++v) {
                int k = 0;
                for (int w = ei[v]; w >= 0; w = ei[static_cast<std::size_t>(w)]) ++k;
                eps_[static_cast<std::size_t>(i)][v] = k;
                k = 0;
                for (int w = fi[v]; w >= 0; w = fi[static_cast<std::size_t>(w)]) ++k;
                phi_[static_cast<std::size_t>(i)][v] = k;
            }
        }
    }

    CartanType type_;
    int r_, s_;
    std::vector<Shape> shapes_;
    std::vector<Element> elements_;
    std::vector<int> component_start_;
    std::unordered_map<std::string, int> index_;
    mutable std::vector<std::vector<int>> f_, e_;
    mutable std::vector<int> sigma_;
    mutable std::vector<std::vector<int>> eps_, phi_;
    mutable std::once_flag affine_once_;
};

/// All elements of minimal level, keyed by epsilon; reports collisions through `collisions`.
inline std::map<AffineWeight, int> minimal_set(const KRCrystal& B, std::vector<std::pair<int, int>>* collisions = nullptr) {
    std::map<AffineWeight, int> out;
    int best = -1;
    for (int v = 0; v < static_cast<int>(B.size()); ++v) {
        const int lv = level(B.eps_vec(v), B.type());
        if (best < 0 || lv < best) best = lv;
    }
    for (int v = 0; v < static_cast<int>(B.size()); ++v) {
        const auto e = B.eps_vec(v);
        if (level(e, B.type()) != best) continue;
        auto [it, fresh] = out.emplace(e, v);
        if (!fresh && collisions) collisions->emplace_back(it->second, v);
    }
    return out;
}

} // namespace krc
