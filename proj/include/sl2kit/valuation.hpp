#pragma once

#include "sl2kit/number_field.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace sl2kit {

// An element of Z ∪ {+∞}. +∞ is produced exactly by the zero element.
class ValuationValue {
public:
    constexpr ValuationValue() = default;  // +∞
    constexpr ValuationValue(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)

    static constexpr ValuationValue infinity() { return {}; }

    constexpr bool is_infinite() const { return !value_.has_value(); }
    constexpr bool is_finite() const { return value_.has_value(); }
    // Precondition: is_finite().
    constexpr long value() const { return *value_; }

    friend constexpr ValuationValue operator+(ValuationValue a, ValuationValue b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return *a.value_ + *b.value_;
    }
    friend constexpr ValuationValue operator-(ValuationValue a, ValuationValue b) {
        // only meaningful for finite b; +∞ - n = +∞
        if (a.is_infinite()) return infinity();
        return *a.value_ - *b.value_;
    }

    friend constexpr bool operator==(ValuationValue a, ValuationValue b) = default;
    friend constexpr std::strong_ordering operator<=>(ValuationValue a, ValuationValue b) {
        if (a.is_infinite() || b.is_infinite()) {
            return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
        }
        return *a.value_ <=> *b.value_;
    }

    std::string to_string() const { return is_finite() ? std::to_string(*value_) : "inf"; }

private:
    std::optional<long> value_;
};

inline ValuationValue min(ValuationValue a, ValuationValue b) { return b < a ? b : a; }

// ν_p on Q.
class PAdicValuation {
public:
    // Throws Error{NotPrime}.
    explicit PAdicValuation(std::int64_t p);

    std::int64_t prime() const { return p_; }
    ValuationValue operator()(const Rational& q) const;
    ValuationValue operator()(const Integer& n) const { return (*this)(Rational(n)); }

private:
    std::int64_t p_;
    Integer pz_;
};

// The min-of-coefficients extension of ν_p to Q(γ),
//   ν(q_0 + q_1 γ + ... + q_{m-1} γ^{m-1}) = min_l ν_p(q_l).
// This is a discrete valuation exactly when the minimal polynomial of γ
// stays irreducible mod p (p is inert and γ generates the local ring of
// integers); construction refuses every other case.
class ExtendedValuation {
public:
    // Throws Error{NotPrime} or NotAValuationError.
    static ExtendedValuation extend(std::int64_t p, NumberField field);

    // The base valuation viewed as a degree-1 extension.
    static ExtendedValuation over_rationals(std::int64_t p);

    std::int64_t prime() const { return base_.prime(); }
    NumberField field() const { return field_; }
    int residue_degree() const { return field_.degree(); }
    // Number of residue classes p^residue_degree.
    std::int64_t residue_field_size() const;
    const PAdicValuation& base() const { return base_; }

    ValuationValue operator()(const FieldElement& x) const;

private:
    ExtendedValuation(PAdicValuation base, NumberField field) : base_(base), field_(field) {}
    PAdicValuation base_;
    NumberField field_;
};

// Raised when the min rule fails to be multiplicative for (p, field). The
// witness pair has ν(xy) != ν(x) + ν(y).
class NotAValuationError : public Error {
public:
    NotAValuationError(std::int64_t p, NumberField field, FieldElement x, FieldElement y);

    std::int64_t prime() const { return p_; }
    const FieldElement& x() const { return x_; }
    const FieldElement& y() const { return y_; }

private:
    std::int64_t p_;
    FieldElement x_;
    FieldElement y_;
};

// min_l ν_p(q_l) without any validity check; used to exhibit failures.
ValuationValue min_rule(const PAdicValuation& base, const FieldElement& x);

// Factor of the minimal polynomial mod p of degree between 1 and deg/2, with
// coefficients in [0, p), or nullopt when the reduction is irreducible.
std::optional<std::vector<std::int64_t>> factor_mod_p(const Polynomial& monic_integral, std::int64_t p);

}  // namespace sl2kit
