#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "verify.hpp"

namespace krc {

using json = nlohmann::json;

/// Parses "D,4,1" (or "A,5,2") into a Cartan type.
inline CartanType parse_cartan(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 3) throw DomainError("Cartan type must look like D,4,1");
    try {
        return CartanType::from_triple(parts[0], std::stoi(parts[1]), std::stoi(parts[2]));
    } catch (const std::invalid_argument&) {
        throw DomainError("Cartan type must look like D,4,1");
    }
}

inline json cartan_to_json(const CartanType& t) {
    const auto tr = t.triple();
    return json::array({tr.letter, tr.index, tr.twist});
}

inline CartanType cartan_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_string() || !j[1].is_number_integer() || !j[2].is_number_integer())
        throw DomainError("Cartan type must be a triple such as [\"D\",4,1]");
    return CartanType::from_triple(j[0].get<std::string>(), j[1].get<int>(), j[2].get<int>());
}

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("invalid JSON: ") + e.what());
    }
}

inline json element_to_json(const Element& b) { return to_rows(b); }

/// Decodes rows top to bottom into an element with `ncols` columns. No membership check.
inline Element element_from_json(const json& j, int ncols) {
    if (!j.is_array()) throw DomainError("element must be a list of rows");
    Rows rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw DomainError("element rows must be lists");
        std::vector<int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw DomainError("letters must be integers");
            r.push_back(x.get<int>());
        }
        rows.push_back(std::move(r));
    }
    return from_rows(rows, ncols);
}

/// Decodes an element of B^{r,s} and checks it lies in one of the classical components.
inline Element decode_kr_element(const json& j, int r, int s, const CartanType& t) {
    Element b = element_from_json(j, s);
    const auto shapes = classical_shapes(r, s, t);
    if (std::find(shapes.begin(), shapes.end(), b.shape) == shapes.end())
        throw DomainError("shape " + to_string(b.shape) + " is not a component of B^{r,s}");
    if (!in_classical_component(b, t)) throw DomainError("unverified filling " + to_string(b));
    return b;
}

inline json diagram_to_json(const PMDiagram& d) { return to_sign_rows(d); }

inline PMDiagram diagram_from_json(const json& j, int ncols) {
    if (!j.is_array()) throw DomainError("diagram must be a list of rows");
    SignRows rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw DomainError("diagram rows must be lists");
        std::vector<std::string> r;
        for (const auto& x : row) {
            if (!x.is_string()) throw DomainError("diagram entries must be strings");
            r.push_back(x.get<std::string>());
        }
        rows.push_back(std::move(r));
    }
    return diagram_from_rows(rows, ncols);
}

/// Parses "l0,l1,...,ln".
inline AffineWeight parse_affine_weight(const std::string& text, const CartanType& t) {
    std::vector<int> c;
    std::stringstream ss(text);
    try {
        for (std::string item; std::getline(ss, item, ',');) c.push_back(std::stoi(item));
    } catch (const std::invalid_argument&) {
        throw DomainError("weight must be comma-separated integers");
    }
    AffineWeight w(c);
    level(w, t);
    for (int x : c)
        if (x < 0) throw DomainError("weight must be dominant");
    return w;
}

inline json weight_to_json(const AffineWeight& w) { return w.coords; }

inline json report_to_json(const Report& rep) {
    json out = json::array();
    for (const auto& c : rep.checks) {
        json item{{"condition", c.condition}, {"status", to_string(c.status)}};
        if (!c.witness.empty()) item["witness"] = c.witness;
        out.push_back(item);
    }
    return out;
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace detail

/// DOT digraph with row-encoded vertex names and edges labelled by node.
inline std::string to_dot(const std::vector<std::string>& names, const std::vector<std::vector<int>>& f,
                          int first_node, const std::string& title) {
    std::string out = "digraph " + detail::dot_quote(title) + " {\n";
    for (const auto& nm : names) out += "  " + detail::dot_quote(nm) + ";\n";
    for (std::size_t v = 0; v < names.size(); ++v)
        for (std::size_t i = 0; i < f.size(); ++i) {
            const int w = f[i][v];
            if (w >= 0)
                out += "  " + detail::dot_quote(names[v]) + " -> " + detail::dot_quote(names[static_cast<std::size_t>(w)]) +
                       " [label=" + std::to_string(static_cast<int>(i) + first_node) + "];\n";
        }
    return out + "}\n";
}

inline std::string to_dot(const KRCrystal& B) {
    std::vector<std::string> names;
    for (const auto& b : B.elements()) names.push_back(to_string(b));
    std::vector<std::vector<int>> f;
    for (int i = 0; i <= B.type().rank; ++i) {
        std::vector<int> row;
        for (int v = 0; v < static_cast<int>(B.size()); ++v) row.push_back(B.f(i, v));
        f.push_back(std::move(row));
    }
    return to_dot(names, f, 0,
                  "B^{" + std::to_string(B.r()) + "," + std::to_string(B.s()) + "} " + B.type().name());
}

inline std::string to_dot(const CrystalGraph& g) {
    std::vector<std::string> names;
    for (std::size_t v = 0; v < g.size(); ++v) names.push_back(to_string(g.element(v)));
    return to_dot(names, g.f, 1, "B" + to_string(g.shape) + " " + g.type.name());
}

} // namespace krc
