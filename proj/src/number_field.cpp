#include "sl2kit/number_field.hpp"

#include "sl2kit/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace sl2kit {

namespace detail {
struct FieldData {
    std::vector<std::int64_t> ints;
    Polynomial minpoly;
    int degree = 0;
};
}  // namespace detail

namespace {

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::vector<std::int64_t>, std::unique_ptr<detail::FieldData>>& registry() {
    static std::map<std::vector<std::int64_t>, std::unique_ptr<detail::FieldData>> r;
    return r;
}

const detail::FieldData* intern(const std::vector<std::int64_t>& minpoly) {
    std::lock_guard lock(registry_mutex());
    auto& slot = registry()[minpoly];
    if (!slot) {
        slot = std::make_unique<detail::FieldData>();
        slot->ints = minpoly;
        slot->minpoly = Polynomial::from_integers(minpoly);
        slot->degree = slot->minpoly.degree();
    }
    return slot.get();
}

// Positive divisors of a nonzero integer, increasing.
std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> low, high;
    const Integer m = abs(n);
    for (Integer d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            low.push_back(d);
            if (d * d != m) high.push_back(m / d);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

bool is_perfect_square(const Integer& n, Integer& root) {
    if (n < 0) return false;
    root = sqrt(n);
    return root * root == n;
}

// A monic integral polynomial is reducible over Q iff it has a monic
// integral factor of degree <= deg/2 (Gauss). Returns such a factor or the
// zero polynomial.
Polynomial find_factor(const Polynomial& f) {
    const int deg = f.degree();
    if (deg <= 1) return {};
    const Integer a0 = f.coeff(0).get_num();
    if (a0 == 0) return Polynomial({Rational(0), Rational(1)});
    for (const Integer& d : divisors(a0)) {
        for (int sign : {1, -1}) {
            Rational root(d * sign);
            if (sgn(f(root)) == 0) return Polynomial({Rational(-root), Rational(1)});
        }
    }
    if (deg < 4) return {};

    const Integer a1 = f.coeff(1).get_num();
    const Integer a2 = f.coeff(2).get_num();
    const Integer a3 = f.coeff(3).get_num();
    auto quadratic = [](const Integer& b, const Integer& c) {
        return Polynomial({Rational(c), Rational(b), Rational(1)});
    };
    for (const Integer& dpos : divisors(a0)) {
        for (int sign : {1, -1}) {
            const Integer c = dpos * sign;
            const Integer e = a0 / c;
            if (e != c) {
                const Integer num = a1 - c * a3;
                const Integer den = e - c;
                if (num % den != 0) continue;
                const Integer b = num / den;
                const Integer d = a3 - b;
                if (c + e + b * d == a2) return quadratic(b, c);
            } else {
                if (a1 != c * a3) continue;
                // b + d = a3, b d = a2 - 2c
                Integer disc = a3 * a3 - 4 * (a2 - 2 * c);
                Integer root;
                if (!is_perfect_square(disc, root)) continue;
                if ((a3 + root) % 2 != 0) continue;
                return quadratic((a3 + root) / 2, c);
            }
        }
    }
    return {};
}

}  // namespace

// --- NumberField ----------------------------------------------------------

NumberField NumberField::make(const std::vector<std::int64_t>& minpoly) {
    Polynomial f = Polynomial::from_integers(minpoly);
    if (f.is_zero() || f.degree() < 1 || f.degree() > kMaxDegree) {
        throw Error(ErrorCode::UnsupportedDegree,
                    "minimal polynomial must have degree 1.." + std::to_string(kMaxDegree));
    }
    if (!f.is_monic()) {
        throw Error(ErrorCode::NotMonic, "minimal polynomial " + f.to_string() + " is not monic");
    }
    Polynomial factor = find_factor(f);
    if (!factor.is_zero()) throw ReducibleError(f, std::move(factor));
    std::vector<std::int64_t> trimmed(minpoly.begin(), minpoly.begin() + f.degree() + 1);
    return NumberField(intern(trimmed));
}

NumberField NumberField::rationals() {
    static const NumberField q(intern({0, 1}));
    return q;
}

int NumberField::degree() const { return data_->degree; }
const Polynomial& NumberField::minimal_polynomial() const { return data_->minpoly; }
const std::vector<std::int64_t>& NumberField::minpoly_coefficients() const { return data_->ints; }

ReducibleError::ReducibleError(const Polynomial& poly, Polynomial factor)
    : Error(ErrorCode::Reducible,
            poly.to_string() + " is reducible over Q; factor " + factor.to_string()),
      factor_(std::move(factor)) {}

NumberField common_field(NumberField a, NumberField b) {
    if (a == b) return a;
    if (a.is_rational()) return b;
    if (b.is_rational()) return a;
    throw Error(ErrorCode::FieldMismatch, "operands belong to different number fields");
}

// --- FieldElement ---------------------------------------------------------

FieldElement::FieldElement() : FieldElement(NumberField::rationals(), Rational(0)) {}

FieldElement::FieldElement(long value) : FieldElement(NumberField::rationals(), Rational(value)) {}

FieldElement::FieldElement(const Rational& value) : FieldElement(NumberField::rationals(), value) {}

FieldElement::FieldElement(NumberField field, const Rational& constant)
    : field_(field), coeffs_(static_cast<std::size_t>(field.degree())) {
    coeffs_[0] = constant;
}

FieldElement::FieldElement(NumberField field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(field.degree())) {
        throw Error(ErrorCode::Usage, "element has " + std::to_string(coeffs_.size()) +
                                          " coefficients, field degree is " +
                                          std::to_string(field.degree()));
    }
}

FieldElement FieldElement::generator(NumberField field) {
    if (field.is_rational()) return FieldElement(field, -field.minimal_polynomial().coeff(0));
    std::vector<Rational> c(static_cast<std::size_t>(field.degree()));
    c[1] = 1;
    return FieldElement(field, std::move(c));
}

bool FieldElement::is_zero() const {
    for (const auto& c : coeffs_) {
        if (sgn(c) != 0) return false;
    }
    return true;
}

bool FieldElement::is_one() const { return is_rational() && coeffs_[0] == 1; }

bool FieldElement::is_rational() const {
    for (std::size_t l = 1; l < coeffs_.size(); ++l) {
        if (sgn(coeffs_[l]) != 0) return false;
    }
    return true;
}

FieldElement FieldElement::in_field(NumberField field) const {
    if (field == field_) return *this;
    if (!field_.is_rational() && !is_rational()) {
        throw Error(ErrorCode::FieldMismatch, "element is not rational, cannot move fields");
    }
    return FieldElement(field, coeffs_[0]);
}

FieldElement FieldElement::operator-() const {
    FieldElement out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    const NumberField f = common_field(field_, rhs.field_);
    if (!(f == field_)) *this = in_field(f);
    if (rhs.field_ == f) {
        for (std::size_t l = 0; l < coeffs_.size(); ++l) coeffs_[l] += rhs.coeffs_[l];
    } else {
        coeffs_[0] += rhs.coeffs_[0];
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    const NumberField f = common_field(field_, rhs.field_);
    if (!(f == field_)) *this = in_field(f);
    if (rhs.field_ == f) {
        for (std::size_t l = 0; l < coeffs_.size(); ++l) coeffs_[l] -= rhs.coeffs_[l];
    } else {
        coeffs_[0] -= rhs.coeffs_[0];
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    const NumberField f = common_field(field_, rhs.field_);
    if (rhs.field_ != f || f.is_rational()) {
        // rhs is a rational constant
        const Rational k = rhs.coeffs_[0];
        if (!(f == field_)) *this = in_field(f);
        for (auto& c : coeffs_) c *= k;
        return *this;
    }
    if (field_ != f) {
        const Rational k = coeffs_[0];
        *this = rhs;
        for (auto& c : coeffs_) c *= k;
        return *this;
    }
    const std::size_t m = coeffs_.size();
    std::vector<Rational> prod(2 * m - 1);
    for (std::size_t i = 0; i < m; ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < m; ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    const auto& fc = f.minimal_polynomial().coeffs();
    for (std::size_t k = prod.size() - 1; k >= m; --k) {
        if (sgn(prod[k]) == 0) continue;
        const Rational top = prod[k];
        for (std::size_t j = 0; j < m; ++j) prod[k - m + j] -= top * fc[j];
        prod[k] = 0;
    }
    prod.resize(m);
    coeffs_ = std::move(prod);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) { return *this *= rhs.inverse(); }

std::vector<std::vector<Rational>> FieldElement::multiplication_matrix() const {
    const std::size_t m = coeffs_.size();
    std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(m));
    FieldElement basis(field_, Rational(1));
    const FieldElement gamma = generator(field_);
    for (std::size_t j = 0; j < m; ++j) {
        FieldElement col = *this * basis;
        for (std::size_t i = 0; i < m; ++i) mat[i][j] = col.coeffs_[i];
        basis *= gamma;
    }
    return mat;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(ErrorCode::Singular, "division by zero in number field");
    if (coeffs_.size() == 1 || is_rational()) return FieldElement(field_, Rational(1) / coeffs_[0]);
    std::vector<Rational> e0(coeffs_.size());
    e0[0] = 1;
    auto sol = linalg::solve(multiplication_matrix(), e0);
    return FieldElement(field_, std::move(*sol));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    static const Rational zero(0);
    for (std::size_t l = 0; l < n; ++l) {
        const Rational& x = l < a.coeffs_.size() ? a.coeffs_[l] : zero;
        const Rational& y = l < b.coeffs_.size() ? b.coeffs_[l] : zero;
        const int c = cmp(x, y);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string FieldElement::to_string() const {
    std::vector<Rational> c = coeffs_;
    if (field_.is_rational()) return sl2kit::to_string(c[0]);
    return Polynomial(std::move(c)).to_string("γ");
}

// --- free functions -------------------------------------------------------

Polynomial minimal_polynomial(const FieldElement& x) {
    const std::size_t m = x.coeffs().size();
    // Columns are the coordinate vectors of x^0, x^1, ..., x^k.
    std::vector<std::vector<Rational>> columns;
    FieldElement power(x.field(), Rational(1));
    for (std::size_t k = 0; k <= m; ++k) {
        columns.push_back(power.coeffs());
        linalg::Dense<Rational> a(m, std::vector<Rational>(columns.size()));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < columns.size(); ++j) a[i][j] = columns[j][i];
        }
        auto ker = linalg::kernel(a, columns.size());
        if (!ker.empty()) {
            // The first dependency involves x^k with a nonzero coefficient.
            const auto& v = ker.front();
            const Rational lead = v[k];
            std::vector<Rational> poly(k + 1);
            for (std::size_t j = 0; j <= k; ++j) poly[j] = v[j] / lead;
            return Polynomial(std::move(poly));
        }
        power *= x;
    }
    throw Error(ErrorCode::Singular, "no linear dependency among powers; corrupt field data");
}

bool is_algebraic_integer(const FieldElement& x) {
    return minimal_polynomial(x).has_integer_coefficients();
}

FieldElement evaluate(const Polynomial& poly, const FieldElement& x) {
    FieldElement acc(x.field(), Rational(0));
    const auto& c = poly.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + FieldElement(x.field(), *it);
    return acc;
}

}  // namespace sl2kit
