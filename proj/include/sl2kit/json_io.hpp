#pragma once

// JSON encodings shared by the CLI and the golden tests.
//
//   field      {"minpoly": [c0, c1, ..., 1]}  (declared once per document)
//   element    ["q0", "q1", ...]  rationals as "num/den" strings, or a
//              string expression in γ such as "(1+γ)/2", or an integer
//   matrix     row-major nested arrays of elements
//   vertex     {"n": int, "b": element}
//   point      {"z": [re, im], "t": float}

#include "sl2kit/bt_tree.hpp"
#include "sl2kit/hyperbolic.hpp"
#include "sl2kit/matrix.hpp"

#include <json.hpp>

#include <optional>
#include <string_view>

namespace sl2kit::io {

using json = nlohmann::json;

// Absent or null -> nullopt.
std::optional<NumberField> parse_field(const json& minpoly);
NumberField field_or_rationals(const json& minpoly);

// Expression over Q(γ): integers, + - * / ^, parentheses, and the
// generator written γ, g or gamma.
FieldElement parse_expression(std::string_view text, NumberField field);

FieldElement parse_element(const json& j, NumberField field);
json to_json(const FieldElement& x);

Mat2 parse_mat2(const json& j, NumberField field);
ComplexMat2 parse_complex_mat2(const json& j);
template <std::size_t N>
json to_json(const SquareMatrix<N>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < N; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < N; ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

TreeVertex parse_vertex(const json& j, NumberField field);
json to_json(const TreeVertex& v);

HPoint parse_point(const json& j);
json to_json(const HPoint& p);

json to_json(const Polynomial& p);

// Rounds to 12 significant digits, so the JSON encoder prints at most 12.
double round12(double x);

}  // namespace sl2kit::io
