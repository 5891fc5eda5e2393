#pragma once

#include "sl2kit/errors.hpp"
#include "sl2kit/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sl2kit {

namespace detail {
struct FieldData;
}

// Handle to an interned number field Q(γ) = Q[x]/(f), f monic integral and
// irreducible, 1 <= deg f <= 4. Handles are cheap to copy and compare; two
// fields with the same minimal polynomial share one handle.
class NumberField {
public:
    static constexpr int kMaxDegree = 4;

    // Validates f (monic, degree 1..4, irreducible over Q) and interns it.
    // Throws Error{NotMonic}, Error{UnsupportedDegree} or ReducibleError.
    static NumberField make(const std::vector<std::int64_t>& minpoly);

    // Q itself, presented as Q[x]/(x).
    static NumberField rationals();

    int degree() const;
    bool is_rational() const { return degree() == 1; }
    const Polynomial& minimal_polynomial() const;
    const std::vector<std::int64_t>& minpoly_coefficients() const;

    friend bool operator==(NumberField a, NumberField b) { return a.data_ == b.data_; }

private:
    explicit NumberField(const detail::FieldData* data) : data_(data) {}
    const detail::FieldData* data_;
};

class ReducibleError : public Error {
public:
    ReducibleError(const Polynomial& poly, Polynomial factor);
    const Polynomial& factor() const { return factor_; }

private:
    Polynomial factor_;
};

// Element Σ q_l γ^l of a number field, stored as its degree-many rational
// coefficients. Binary operations between elements of different fields are
// allowed only when one side lives in a degree-1 field, in which case it is
// treated as a rational constant.
class FieldElement {
public:
    FieldElement();  // 0 in Q
    FieldElement(long value);  // NOLINT(google-explicit-constructor)
    FieldElement(const Rational& value);  // NOLINT(google-explicit-constructor)
    FieldElement(NumberField field, const Rational& constant);
    FieldElement(NumberField field, std::vector<Rational> coeffs);

    static FieldElement generator(NumberField field);

    NumberField field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(std::size_t l) const { return coeffs_[l]; }

    bool is_zero() const;
    bool is_one() const;
    // True when all γ^l coefficients with l >= 1 vanish.
    bool is_rational() const;
    // Constant coefficient; meaningful when is_rational().
    const Rational& rational_value() const { return coeffs_[0]; }

    FieldElement inverse() const;

    // Rational matrix of y -> x*y in the power basis (column j = x*γ^j).
    std::vector<std::vector<Rational>> multiplication_matrix() const;

    // Re-expresses this element in `field` (identity, or a rational constant).
    FieldElement in_field(NumberField field) const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    // Lexicographic on zero-padded coefficients; a total order per field.
    friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

    // "3/2 + γ - 1/2γ^2" style.
    std::string to_string() const;

private:
    NumberField field_;
    std::vector<Rational> coeffs_;
};

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
inline FieldElement inverse(const FieldElement& x) { return x.inverse(); }

NumberField common_field(NumberField a, NumberField b);

// Monic minimal polynomial over Q, from the first linear dependency among
// the power-basis vectors of 1, x, x^2, ... (Krylov sequence of the
// multiplication-by-x matrix).
Polynomial minimal_polynomial(const FieldElement& x);

bool is_algebraic_integer(const FieldElement& x);

// Evaluates a rational polynomial at a field element.
FieldElement evaluate(const Polynomial& poly, const FieldElement& x);

}  // namespace sl2kit
