#include "sl2kit/bt_tree.hpp"

#include <algorithm>

namespace sl2kit {

namespace {

Integer pow_int(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// Unique r ≡ q (mod p^n Z_(p)) with p-power denominator and 0 <= r < p^n.
Rational reduce_rational(const Rational& q, long n, const Integer& p, const PAdicValuation& nu) {
    const ValuationValue v = nu(q);
    if (v.is_infinite() || v.value() >= n) return 0;
    const long k = std::max(0L, -v.value());
    const unsigned long e = static_cast<unsigned long>(n + k);  // > 0 since v < n
    const Integer modulus = pow_int(p, e);
    const Integer pk = pow_int(p, static_cast<unsigned long>(k));
    // q * p^k = a / b with p ∤ b
    Rational scaled = q * pk;
    Integer den_inv;
    mpz_invert(den_inv.get_mpz_t(), scaled.get_den().get_mpz_t(), modulus.get_mpz_t());
    Integer residue = (scaled.get_num() * den_inv) % modulus;
    if (residue < 0) residue += modulus;
    Rational out(residue, pk);
    out.canonicalize();
    return out;
}

}  // namespace

BruhatTitsTree::BruhatTitsTree(ExtendedValuation valuation)
    : valuation_(valuation), p_(static_cast<long>(valuation.prime())) {
    const int m = valuation_.residue_degree();
    const std::int64_t q = valuation_.residue_field_size();
    residues_.reserve(static_cast<std::size_t>(q));
    for (std::int64_t code = 0; code < q; ++code) {
        std::vector<Rational> c(static_cast<std::size_t>(m));
        std::int64_t rest = code;
        for (int l = 0; l < m; ++l) {
            c[static_cast<std::size_t>(l)] = static_cast<long>(rest % valuation_.prime());
            rest /= valuation_.prime();
        }
        residues_.emplace_back(field(), std::move(c));
    }
}

BruhatTitsTree BruhatTitsTree::over_rationals(std::int64_t p) {
    return BruhatTitsTree(ExtendedValuation::over_rationals(p));
}

FieldElement BruhatTitsTree::prime_power(long n) const {
    Rational value = n >= 0 ? Rational(pow_int(p_, static_cast<unsigned long>(n)))
                            : Rational(Integer(1), pow_int(p_, static_cast<unsigned long>(-n)));
    return FieldElement(field(), value);
}

TreeVertex BruhatTitsTree::base_vertex() const { return {0, FieldElement(field(), Rational(0))}; }

Mat2 BruhatTitsTree::vertex_matrix(const TreeVertex& v) const {
    return Mat2{{prime_power(v.n), v.b}, {FieldElement(field(), Rational(0)), FieldElement(field(), Rational(1))}};
}

FieldElement BruhatTitsTree::reduce_offset(const FieldElement& x, long n) const {
    const FieldElement y = x.in_field(field());
    std::vector<Rational> c;
    c.reserve(y.coeffs().size());
    for (const auto& q : y.coeffs()) c.push_back(reduce_rational(q, n, p_, valuation_.base()));
    return FieldElement(field(), std::move(c));
}

TreeVertex BruhatTitsTree::canonicalize(const Mat2& m) const {
    if (m.determinant().is_zero()) throw Error(ErrorCode::Singular, "lattice basis is singular");
    // Columns (top, bottom): c1 = (a, c), c2 = (b, d).
    FieldElement a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    // Put the bottom entry of minimal valuation in the second column.
    if (valuation_(c) < valuation_(d)) {
        std::swap(a, b);
        std::swap(c, d);
    }
    // c1 -= (c/d) c2 is an integral column operation since ν(c/d) >= 0.
    const FieldElement ratio = c / d;
    const FieldElement top_left = a - ratio * b;
    // Rescale by 1/d; the unit part of the (1,1) entry is absorbed into c1.
    const FieldElement diag = top_left / d;
    const long n = valuation_(diag).value();
    return {n, reduce_offset(b / d, n)};
}

long BruhatTitsTree::distance(const TreeVertex& u, const TreeVertex& v) const {
    const Mat2 g = vertex_matrix(u).inverse() * vertex_matrix(v);
    ValuationValue lowest = ValuationValue::infinity();
    for (const auto& x : g.entries()) lowest = min(lowest, valuation_(x));
    const ValuationValue det = valuation_(g.determinant());
    return det.value() - 2 * lowest.value();
}

TreeVertex BruhatTitsTree::act(const Mat2& g, const TreeVertex& v) const {
    return canonicalize(g * vertex_matrix(v));
}

std::set<TreeVertex> BruhatTitsTree::neighbors(const TreeVertex& v) const {
    const Mat2 mv = vertex_matrix(v);
    const FieldElement zero(field(), Rational(0));
    const FieldElement one(field(), Rational(1));
    const FieldElement p = prime_power(1);
    std::set<TreeVertex> out;
    for (const auto& j : residues_) out.insert(canonicalize(mv * Mat2{{p, j}, {zero, one}}));
    out.insert(canonicalize(mv * Mat2{{one, zero}, {zero, p}}));
    return out;
}

std::set<TreeVertex> BruhatTitsTree::ball(const TreeVertex& center, long radius) const {
    std::set<TreeVertex> seen{center};
    std::vector<TreeVertex> frontier{center};
    for (long depth = 0; depth < radius; ++depth) {
        std::vector<TreeVertex> next;
        for (const auto& v : frontier) {
            for (auto& w : neighbors(v)) {
                if (seen.insert(w).second) next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

std::int64_t ball_size(std::int64_t q, long radius) {
    // 1 + (q+1)(q^r - 1)/(q - 1) = 1 + (q+1)(1 + q + ... + q^{r-1})
    std::int64_t geometric = 0, power = 1;
    for (long i = 0; i < radius; ++i) {
        geometric += power;
        power *= q;
    }
    return 1 + (q + 1) * geometric;
}

}  // namespace sl2kit
