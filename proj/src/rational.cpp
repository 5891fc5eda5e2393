#include "sl2kit/rational.hpp"

#include "sl2kit/errors.hpp"

#include <algorithm>
#include <cctype>

namespace sl2kit {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Usage: return "UsageError";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::Reducible: return "Reducible";
        case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::NotAValuation: return "NotAValuation";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::EntryOutsideRing: return "EntryOutsideRing";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::DetNotOne: return "DetNotOne";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::Commutative: return "Commutative";
        case ErrorCode::NotASubalgebra: return "NotASubalgebra";
        case ErrorCode::IndependenceFailure: return "IndependenceFailure";
        case ErrorCode::NotTraceless: return "NotTraceless";
        case ErrorCode::GIsInH: return "GIsInH";
        case ErrorCode::CheckFailed: return "CheckFailed";
    }
    return "Unknown";
}

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s) {
    if (!is_integer_text(s)) {
        throw Error(ErrorCode::Usage, "malformed integer '" + std::string(s) + "'");
    }
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    text = strip(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(strip(text.substr(0, slash)));
    Integer den = parse_integer(strip(text.substr(slash + 1)));
    if (den == 0) throw Error(ErrorCode::Usage, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long multiplicity(const Integer& value, const Integer& p) {
    Integer rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), value.get_mpz_t(), p.get_mpz_t()));
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::int64_t> prime_factors(Integer n) {
    std::vector<std::int64_t> out;
    n = abs(n);
    for (std::int64_t d = 2; Integer(d) * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n.get_si());
    return out;
}

// --- Polynomial -----------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::from_integers(const std::vector<std::int64_t>& coeffs) {
    std::vector<Rational> q;
    q.reserve(coeffs.size());
    for (auto c : coeffs) q.emplace_back(static_cast<long>(c));
    return Polynomial(std::move(q));
}

Polynomial Polynomial::monomial(std::size_t degree, Rational coeff) {
    std::vector<Rational> q(degree + 1);
    q[degree] = std::move(coeff);
    return Polynomial(std::move(q));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

bool Polynomial::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.get_den() == 1; });
}

Rational Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::Singular, "polynomial division by zero");
    std::vector<Rational> rem = a.coeffs_;
    const int db = b.degree();
    std::vector<Rational> quot(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
    for (int k = a.degree(); k >= db; --k) {
        Rational factor = rem[static_cast<std::size_t>(k)] / b.leading();
        if (sgn(factor) == 0) continue;
        quot[static_cast<std::size_t>(k - db)] = factor;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(std::string_view var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) continue;
        const bool negative = sgn(c) < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        Rational mag = abs(c);
        if (k == 0 || mag != 1) out += sl2kit::to_string(mag);
        if (k >= 1) out += var;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace sl2kit
