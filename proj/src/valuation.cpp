#include "sl2kit/valuation.hpp"

#include <algorithm>

namespace sl2kit {

PAdicValuation::PAdicValuation(std::int64_t p) : p_(p), pz_(static_cast<long>(p)) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

ValuationValue PAdicValuation::operator()(const Rational& q) const {
    if (sgn(q) == 0) return ValuationValue::infinity();
    return multiplicity(q.get_num(), pz_) - multiplicity(q.get_den(), pz_);
}

ExtendedValuation ExtendedValuation::over_rationals(std::int64_t p) {
    return ExtendedValuation(PAdicValuation(p), NumberField::rationals());
}

std::int64_t ExtendedValuation::residue_field_size() const {
    std::int64_t q = 1;
    for (int i = 0; i < residue_degree(); ++i) q *= prime();
    return q;
}

ValuationValue min_rule(const PAdicValuation& base, const FieldElement& x) {
    ValuationValue v = ValuationValue::infinity();
    for (const auto& c : x.coeffs()) v = min(v, base(c));
    return v;
}

ValuationValue ExtendedValuation::operator()(const FieldElement& x) const {
    return min_rule(base_, x.in_field(field_));
}

namespace {

using ModPoly = std::vector<std::int64_t>;  // coefficients in [0, p), low to high

std::int64_t mod(const Integer& a, std::int64_t p) {
    Integer r = a % p;
    if (r < 0) r += p;
    return r.get_si();
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    Integer r;
    Integer az(static_cast<long>(a)), pz(static_cast<long>(p));
    mpz_invert(r.get_mpz_t(), az.get_mpz_t(), pz.get_mpz_t());
    return r.get_si();
}

void trim(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Quotient of f by g over F_p when the remainder vanishes.
std::optional<ModPoly> exact_divide(ModPoly f, const ModPoly& g, std::int64_t p) {
    trim(f);
    const int dg = static_cast<int>(g.size()) - 1;
    if (static_cast<int>(f.size()) - 1 < dg) return std::nullopt;
    ModPoly q(f.size() - static_cast<std::size_t>(dg), 0);
    const std::int64_t lead_inv = inv_mod(g.back(), p);
    for (int k = static_cast<int>(f.size()) - 1; k >= dg; --k) {
        const std::int64_t factor = (f[static_cast<std::size_t>(k)] * lead_inv) % p;
        q[static_cast<std::size_t>(k - dg)] = factor;
        for (int j = 0; j <= dg; ++j) {
            auto& slot = f[static_cast<std::size_t>(k - dg + j)];
            slot = ((slot - factor * g[static_cast<std::size_t>(j)]) % p + p) % p;
        }
    }
    trim(f);
    if (!f.empty()) return std::nullopt;
    return q;
}

ModPoly reduce(const Polynomial& f, std::int64_t p) {
    ModPoly out;
    for (const auto& c : f.coeffs()) out.push_back(mod(c.get_num(), p));
    return out;
}

FieldElement lift(const ModPoly& g, NumberField field) {
    std::vector<Rational> c(static_cast<std::size_t>(field.degree()));
    for (std::size_t l = 0; l < g.size() && l < c.size(); ++l) c[l] = static_cast<long>(g[l]);
    return FieldElement(field, std::move(c));
}

}  // namespace

std::optional<std::vector<std::int64_t>> factor_mod_p(const Polynomial& f, std::int64_t p) {
    const ModPoly fp = reduce(f, p);
    const int deg = f.degree();
    for (int d = 1; d <= deg / 2; ++d) {
        // Monic candidates of degree d: enumerate the d lower coefficients.
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t code = 0; code < count; ++code) {
            ModPoly g(static_cast<std::size_t>(d) + 1, 0);
            std::int64_t rest = code;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = rest % p;
                rest /= p;
            }
            g[static_cast<std::size_t>(d)] = 1;
            if (exact_divide(fp, g, p)) return g;
        }
    }
    return std::nullopt;
}

ExtendedValuation ExtendedValuation::extend(std::int64_t p, NumberField field) {
    PAdicValuation base(p);
    const Polynomial& f = field.minimal_polynomial();
    if (auto g = factor_mod_p(f, p)) {
        const ModPoly h = *exact_divide(reduce(f, p), *g, p);
        throw NotAValuationError(p, field, lift(*g, field), lift(h, field));
    }
    return ExtendedValuation(base, field);
}

NotAValuationError::NotAValuationError(std::int64_t p, NumberField field, FieldElement x, FieldElement y)
    : Error(ErrorCode::NotAValuation,
            "minimal polynomial " + field.minimal_polynomial().to_string() + " is reducible mod " +
                std::to_string(p) + "; the min-of-coefficients rule is not multiplicative: x = " +
                x.to_string() + ", y = " + y.to_string()),
      p_(p),
      x_(std::move(x)),
      y_(std::move(y)) {}

}  // namespace sl2kit
