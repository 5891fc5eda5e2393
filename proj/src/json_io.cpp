#include "sl2kit/json_io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace sl2kit::io {

namespace {

[[noreturn]] void usage(const std::string& msg) { throw Error(ErrorCode::Usage, msg); }

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, NumberField field) : s_(text), field_(field) {}

    FieldElement parse() {
        FieldElement v = expr();
        skip_space();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        usage("cannot parse element '" + std::string(s_) + "': " + why);
    }

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_generator() const {
        const auto rest = s_.substr(pos_);
        return rest.rfind("\xCE\xB3", 0) == 0 || rest.rfind("gamma", 0) == 0 || rest.rfind("g", 0) == 0;
    }

    bool at_primary() {
        skip_space();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || at_generator();
    }

    FieldElement expr() {
        FieldElement v = term();
        for (;;) {
            if (eat('+')) {
                v += term();
            } else if (eat('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    FieldElement term() {
        FieldElement v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                FieldElement d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else if (at_primary()) {
                v *= power();  // implicit product, e.g. 3γ
            } else {
                return v;
            }
        }
    }

    FieldElement unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    FieldElement power() {
        FieldElement base = primary();
        if (!eat('^')) return base;
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent must be a nonnegative integer");
        const long e = std::stol(std::string(s_.substr(start, pos_ - start)));
        FieldElement out(field_, Rational(1));
        for (long k = 0; k < e; ++k) out *= base;
        return out;
    }

    FieldElement primary() {
        skip_space();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (eat('(')) {
            FieldElement v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        const auto rest = s_.substr(pos_);
        for (std::string_view name : {std::string_view("\xCE\xB3"), std::string_view("gamma"), std::string_view("g")}) {
            if (rest.rfind(name, 0) == 0) {
                pos_ += name.size();
                if (field_.is_rational()) fail("γ used without a declared minpoly");
                return FieldElement::generator(field_);
            }
        }
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number, γ, or '('");
        return FieldElement(field_, Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }

    std::string_view s_;
    NumberField field_;
    std::size_t pos_ = 0;
};

FieldElement rational_in(const json& j, NumberField field) {
    if (j.is_number_integer()) return FieldElement(field, Rational(Integer(j.dump())));
    if (j.is_string()) return FieldElement(field, parse_rational(j.get<std::string>()));
    usage("coefficient must be an integer or a \"num/den\" string, got " + j.dump());
}

}  // namespace

std::optional<NumberField> parse_field(const json& minpoly) {
    if (minpoly.is_null()) return std::nullopt;
    if (!minpoly.is_array()) usage("minpoly must be an array of integers");
    std::vector<std::int64_t> coeffs;
    for (const auto& c : minpoly) {
        if (!c.is_number_integer()) usage("minpoly must be an array of integers");
        coeffs.push_back(c.get<std::int64_t>());
    }
    return NumberField::make(coeffs);
}

NumberField field_or_rationals(const json& minpoly) {
    return parse_field(minpoly).value_or(NumberField::rationals());
}

FieldElement parse_expression(std::string_view text, NumberField field) {
    return ExpressionParser(text, field).parse();
}

FieldElement parse_element(const json& j, NumberField field) {
    if (j.is_number_integer()) return rational_in(j, field);
    if (j.is_string()) return parse_expression(j.get<std::string>(), field);
    if (j.is_array()) {
        if (j.empty() || j.size() > static_cast<std::size_t>(field.degree())) {
            usage("element " + j.dump() + " needs 1.." + std::to_string(field.degree()) + " coefficients");
        }
        std::vector<Rational> c(static_cast<std::size_t>(field.degree()));
        for (std::size_t l = 0; l < j.size(); ++l) c[l] = rational_in(j[l], field).rational_value();
        return FieldElement(field, std::move(c));
    }
    usage("element must be an array, string or integer, got " + j.dump());
}

json to_json(const FieldElement& x) {
    json out = json::array();
    for (const auto& c : x.coeffs()) out.push_back(to_string(c));
    return out;
}

Mat2 parse_mat2(const json& j, NumberField field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
        j[1].size() != 2) {
        usage("matrix must be [[a, b], [c, d]], got " + j.dump());
    }
    Mat2 m;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) m(r, c) = parse_element(j[r][c], field).in_field(field);
    }
    return m;
}

ComplexMat2 parse_complex_mat2(const json& j) {
    auto entry = [](const json& e) {
        if (e.is_number()) return Complex(e.get<double>(), 0.0);
        if (e.is_array() && e.size() == 2) return Complex(e[0].get<double>(), e[1].get<double>());
        usage("float matrix entry must be a number or [re, im], got " + e.dump());
    };
    if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2) {
        usage("matrix must be [[a, b], [c, d]], got " + j.dump());
    }
    return {entry(j[0][0]), entry(j[0][1]), entry(j[1][0]), entry(j[1][1])};
}

TreeVertex parse_vertex(const json& j, NumberField field) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
        usage("vertex must be {\"n\": int, \"b\": element}");
    }
    FieldElement b = j.contains("b") ? parse_element(j["b"], field).in_field(field) : FieldElement(field, Rational(0));
    return {j["n"].get<long>(), std::move(b)};
}

json to_json(const TreeVertex& v) { return {{"n", v.n}, {"b", to_json(v.b)}}; }

HPoint parse_point(const json& j) {
    if (!j.is_object() || !j.contains("t")) usage("point must be {\"z\": [re, im], \"t\": float}");
    Complex z = 0.0;
    if (j.contains("z")) {
        const auto& zj = j["z"];
        if (zj.is_number()) {
            z = Complex(zj.get<double>(), 0.0);
        } else if (zj.is_array() && zj.size() == 2) {
            z = Complex(zj[0].get<double>(), zj[1].get<double>());
        } else {
            usage("point z must be [re, im]");
        }
    }
    return {z, j["t"].get<double>()};
}

json to_json(const HPoint& p) {
    return {{"z", {round12(p.z.real()), round12(p.z.imag())}}, {"t", round12(p.t)}};
}

json to_json(const Polynomial& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

double round12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    double y = std::strtod(buf, nullptr);
    return y == 0.0 ? 0.0 : y;  // no "-0.0"
}

}  // namespace sl2kit::io
