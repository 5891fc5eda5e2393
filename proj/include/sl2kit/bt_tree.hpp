#pragma once

#include "sl2kit/matrix.hpp"
#include "sl2kit/valuation.hpp"

#include <compare>
#include <cstdint>
#include <set>
#include <vector>

namespace sl2kit {

// Homothety class of the lattice spanned by the columns of
// [[p^n, b], [0, 1]]. The offset b is kept reduced modulo p^n·O: each power
// basis coefficient is the unique rational with p-power denominator in
// [0, p^n) congruent to it.
struct TreeVertex {
    long n = 0;
    FieldElement b;

    friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
    friend std::strong_ordering operator<=>(const TreeVertex& a, const TreeVertex& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        return a.b <=> b.b;
    }
};

// The tree of lattice classes in K^2 for a certified discrete valuation on
// K (base p-adic, or an unramified extension to Q(γ)), with uniformizer p.
class BruhatTitsTree {
public:
    explicit BruhatTitsTree(ExtendedValuation valuation);
    static BruhatTitsTree over_rationals(std::int64_t p);

    const ExtendedValuation& valuation() const { return valuation_; }
    std::int64_t prime() const { return valuation_.prime(); }
    NumberField field() const { return valuation_.field(); }
    // q = size of the residue field; every vertex has q + 1 neighbours.
    std::int64_t residue_field_size() const { return valuation_.residue_field_size(); }

    // v0, the class of the standard lattice O^2.
    TreeVertex base_vertex() const;

    // [[p^n, b], [0, 1]].
    Mat2 vertex_matrix(const TreeVertex& v) const;

    // Class of the column span of m. Throws Error{Singular}.
    TreeVertex canonicalize(const Mat2& m) const;

    // ν(det g) - 2 min_ij ν(g_ij) for g = M_u^{-1} M_v.
    long distance(const TreeVertex& u, const TreeVertex& v) const;
    bool vertices_equal(const TreeVertex& u, const TreeVertex& v) const { return distance(u, v) == 0; }

    std::set<TreeVertex> neighbors(const TreeVertex& v) const;

    // Breadth-first enumeration of all vertices within distance r.
    std::set<TreeVertex> ball(const TreeVertex& center, long radius) const;

    // g·v for invertible g. Throws Error{Singular}.
    TreeVertex act(const Mat2& g, const TreeVertex& v) const;

    // Residue field representatives Σ c_l γ^l with c_l in [0, p).
    const std::vector<FieldElement>& residue_representatives() const { return residues_; }

    // Coefficientwise reduction of x modulo p^n·O.
    FieldElement reduce_offset(const FieldElement& x, long n) const;

    // p^n as a field element.
    FieldElement prime_power(long n) const;

private:
    ExtendedValuation valuation_;
    Integer p_;
    std::vector<FieldElement> residues_;
};

// Closed-form size of a ball of radius r in a (q+1)-regular tree.
std::int64_t ball_size(std::int64_t q, long radius);

}  // namespace sl2kit
