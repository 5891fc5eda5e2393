#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sl2kit {

using Integer = mpz_class;

// mpq_class keeps itself canonical (coprime, positive denominator) as long
// as every value is built through its arithmetic or canonicalize().
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational inverse(const Rational& q) { return Rational(1) / q; }

// Accepts "a", "-a", "a/b". Throws Error{Usage} on malformed text or b = 0.
Rational parse_rational(std::string_view text);

// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

// Exponent of the prime p in a nonzero integer.
long multiplicity(const Integer& value, const Integer& p);

bool is_prime(std::int64_t n);

// Distinct prime factors in increasing order.
std::vector<std::int64_t> prime_factors(Integer n);

// Rational polynomial, coefficient of x^k at index k; trailing zeros trimmed.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial from_integers(const std::vector<std::int64_t>& coeffs);
    static Polynomial monomial(std::size_t degree, Rational coeff = 1);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;
    bool has_integer_coefficients() const;

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t k) const;
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& x) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    // Quotient and remainder by a nonzero divisor.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                                    const Polynomial& b);

    // Human-readable, variable name configurable ("x^2 - x - 1").
    std::string to_string(std::string_view var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace sl2kit
