#include "sl2kit/proper_action.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

namespace sl2kit {

RingData ring_detect(const std::vector<Mat2>& generators, std::optional<NumberField> field) {
    RingData ring;
    NumberField f = field.value_or(NumberField::rationals());
    for (const auto& g : generators) f = common_field(f, g.field());
    if (!f.is_rational()) ring.field = f;
    for (const auto& g : generators) {
        for (const auto& x : g.entries()) {
            for (const auto& c : x.coeffs()) ring.s = lcm(ring.s, c.get_den());
        }
    }
    ring.primes = prime_factors(ring.s);
    return ring;
}

MarkedGroup::MarkedGroup(std::vector<Mat2> generators, std::optional<NumberField> field, int root_index)
    : generators_(std::move(generators)),
      ring_(ring_detect(generators_, field)),
      embedding_(ring_.field.value_or(NumberField::rationals()), root_index) {
    for (const auto& g : generators_) {
        if (!g.determinant().is_one()) {
            throw Error(ErrorCode::DetNotOne, "generator " + g.to_string() + " does not have determinant 1");
        }
    }
    for (auto p : ring_.primes) trees_.emplace_back(ExtendedValuation::extend(p, this->field()));
}

std::vector<Mat2> MarkedGroup::symmetric_generators() const {
    std::vector<Mat2> out;
    for (const auto& g : generators_) {
        out.push_back(g);
        out.push_back(g.inverse());
    }
    return out;
}

void MarkedGroup::require_in_ring(const Mat2& g) const {
    const NumberField f = field();
    for (const auto& x : g.entries()) {
        (void)common_field(f, x.field());
        for (const auto& c : x.coeffs()) {
            Integer rest = c.get_den();
            for (auto p : ring_.primes) {
                Integer pz(static_cast<long>(p));
                mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), pz.get_mpz_t());
            }
            if (rest != 1) {
                throw Error(ErrorCode::EntryOutsideRing,
                            "entry " + x.to_string() + " is not in Z[1/" + ring_.s.get_str() + ", γ]");
            }
        }
    }
}

bool DisplacementProfile::within(double bound) const {
    for (long d : tree_displacements) {
        if (!(static_cast<double>(d) < bound)) return false;
    }
    return hyp_displacement < bound;
}

DisplacementProfile displacement(const Mat2& g, const MarkedGroup& group) {
    group.require_in_ring(g);
    DisplacementProfile out;
    for (const auto& tree : group.trees()) {
        const TreeVertex v0 = tree.base_vertex();
        out.tree_displacements.push_back(tree.distance(v0, tree.act(g, v0)));
    }
    out.hyp_displacement = displacement_hyp(g, group.embedding());
    return out;
}

std::uint64_t default_enumeration_budget() {
    if (const char* env = std::getenv("SL2KIT_ENUM_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 10'000'000ULL;
}

EnumerationResult enumerate_bounded(const MarkedGroup& group, double bound, std::uint64_t budget) {
    if (!group.is_rational()) {
        throw Error(ErrorCode::Unsupported, "exact enumeration covers SL(2, Z[1/s]) only");
    }
    if (!(bound > 0)) throw Error(ErrorCode::Usage, "bound must be positive");

    // Tree bound: displacement = -2 min ν_p(g_ij) < C caps every p-exponent
    // in a denominator at floor(C/2); take the common denominator D.
    const long max_exponent = static_cast<long>(std::floor(bound / 2));
    Integer denom = 1;
    for (auto p : group.ring().primes) {
        Integer pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(max_exponent));
        denom *= pe;
    }
    // Hyperbolic bound: Σ g_ij^2 < 2 cosh C, i.e. Σ A_ij^2 < 2 cosh(C) D^2
    // for numerators A_ij = D g_ij.
    const double norm_bound = 2.0 * std::cosh(bound) * denom.get_d() * denom.get_d();
    const long radius = static_cast<long>(std::floor(std::sqrt(norm_bound)));
    const double side = 2.0 * static_cast<double>(radius) + 1.0;
    if (side * side * side > static_cast<double>(budget)) {
        throw Error(ErrorCode::BudgetExceeded,
                    "enumeration needs about " + std::to_string(static_cast<unsigned long long>(side * side * side)) +
                        " candidates, budget is " + std::to_string(budget));
    }
    if (denom.get_d() * denom.get_d() > 9.0e15) {
        throw Error(ErrorCode::BudgetExceeded, "common denominator too large for the enumerator");
    }

    const std::int64_t d2 = denom.get_si() * denom.get_si();
    const Rational inv_denom(Integer(1), denom);
    auto below = [&](std::int64_t sumsq) { return static_cast<double>(sumsq) < norm_bound; };

    EnumerationResult result;
    result.bound = bound;
    std::set<Mat2> found;
    auto consider = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
        auto scaled = [&](std::int64_t x) { return FieldElement(Rational(Rational(x) * inv_denom)); };
        Mat2 g{{scaled(a), scaled(b)}, {scaled(c), scaled(d)}};
        if (displacement(g, group).within(bound)) found.insert(std::move(g));
    };

    for (std::int64_t a = -radius; a <= radius; ++a) {
        const std::int64_t sa = a * a;
        for (std::int64_t b = -radius; b <= radius; ++b) {
            const std::int64_t sb = sa + b * b;
            if (!below(sb)) continue;
            for (std::int64_t c = -radius; c <= radius; ++c) {
                const std::int64_t sc = sb + c * c;
                if (!below(sc)) continue;
                ++result.candidates_examined;
                // a d - b c = D^2
                if (a != 0) {
                    const std::int64_t num = d2 + b * c;
                    if (num % a != 0) continue;
                    const std::int64_t d = num / a;
                    if (below(sc + d * d)) consider(a, b, c, d);
                } else if (-b * c == d2) {
                    for (std::int64_t d = -radius; d <= radius; ++d) {
                        if (below(sc + d * d)) consider(a, b, c, d);
                    }
                }
            }
        }
    }
    result.elements.assign(found.begin(), found.end());
    result.complete = true;
    return result;
}

std::set<Mat2> word_bfs(const MarkedGroup& group, int max_len, double bound) {
    const auto letters = group.symmetric_generators();
    const Mat2 identity = Mat2::identity(group.field());
    std::set<Mat2> seen{identity};
    std::vector<Mat2> frontier{identity};
    for (int len = 0; len < max_len; ++len) {
        std::vector<Mat2> next;
        for (const auto& w : frontier) {
            for (const auto& s : letters) {
                Mat2 ws = w * s;
                if (seen.insert(ws).second) next.push_back(std::move(ws));
            }
        }
        frontier = std::move(next);
    }
    std::set<Mat2> out;
    for (const auto& g : seen) {
        if (displacement(g, group).within(bound)) out.insert(g);
    }
    return out;
}

PropernessReport properness_check(const MarkedGroup& group, double bound, int max_len, std::uint64_t budget) {
    const auto enumerated = enumerate_bounded(group, bound, budget);
    const auto words = word_bfs(group, max_len, bound);
    PropernessReport report;
    report.word_count = words.size();
    report.enumerated_count = enumerated.elements.size();
    for (const auto& g : words) {
        if (!std::binary_search(enumerated.elements.begin(), enumerated.elements.end(), g)) {
            report.violations.push_back(g);
        }
    }
    report.contained = report.violations.empty();
    report.certificate = report.contained ? "finite, <= " + std::to_string(report.enumerated_count)
                                          : "containment violated";
    return report;
}

}  // namespace sl2kit
