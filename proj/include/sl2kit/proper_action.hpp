#pragma once

#include "sl2kit/bt_tree.hpp"
#include "sl2kit/hyperbolic.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sl2kit {

// Coefficient ring Z[1/s, γ] of a finitely generated group. s is the lcm of
// every coefficient denominator; primes are its distinct prime factors.
struct RingData {
    Integer s = 1;
    std::vector<std::int64_t> primes;
    std::optional<NumberField> field;
};

RingData ring_detect(const std::vector<Mat2>& generators, std::optional<NumberField> field = std::nullopt);

// Generators of a subgroup of SL(2, Z[1/s, γ]) together with everything
// needed to act diagonally on T_{p_1} × ... × T_{p_n} × H.
class MarkedGroup {
public:
    // Throws Error{DetNotOne}, NotAValuationError (a prime that does not
    // stay inert in Q(γ)), or Error{FieldMismatch}.
    explicit MarkedGroup(std::vector<Mat2> generators, std::optional<NumberField> field = std::nullopt,
                         int root_index = 0);

    const std::vector<Mat2>& generators() const { return generators_; }
    const RingData& ring() const { return ring_; }
    bool is_rational() const { return !ring_.field.has_value() || ring_.field->is_rational(); }
    NumberField field() const { return ring_.field.value_or(NumberField::rationals()); }
    const std::vector<BruhatTitsTree>& trees() const { return trees_; }
    const ArchimedeanEmbedding& embedding() const { return embedding_; }

    // Generators followed by their inverses, interleaved: g1, g1^-1, g2, ...
    std::vector<Mat2> symmetric_generators() const;

    // Throws Error{EntryOutsideRing} if some coefficient has a denominator
    // prime outside the ring.
    void require_in_ring(const Mat2& g) const;

private:
    std::vector<Mat2> generators_;
    RingData ring_;
    std::vector<BruhatTitsTree> trees_;
    ArchimedeanEmbedding embedding_;
};

struct DisplacementProfile {
    std::vector<long> tree_displacements;
    double hyp_displacement = 0.0;

    // Strict: every coordinate < bound.
    bool within(double bound) const;
};

DisplacementProfile displacement(const Mat2& g, const MarkedGroup& group);

struct EnumerationResult {
    std::vector<Mat2> elements;  // sorted, distinct
    double bound = 0.0;
    bool complete = false;
    std::uint64_t candidates_examined = 0;
};

// SL2KIT_ENUM_BUDGET from the environment, else 10^7.
std::uint64_t default_enumeration_budget();

// Every g in SL(2, Z[1/s]) with all displacements < bound. Rational groups
// only (Error{Unsupported} otherwise); Error{BudgetExceeded} when the
// candidate space exceeds `budget`.
EnumerationResult enumerate_bounded(const MarkedGroup& group, double bound,
                                    std::uint64_t budget = default_enumeration_budget());

// Distinct products of at most max_len generators and inverses whose
// displacement profile is within bound.
std::set<Mat2> word_bfs(const MarkedGroup& group, int max_len, double bound);

struct PropernessReport {
    std::size_t word_count = 0;
    std::size_t enumerated_count = 0;
    bool contained = false;
    std::vector<Mat2> violations;  // word elements missing from the enumeration
    std::string certificate;
};

PropernessReport properness_check(const MarkedGroup& group, double bound, int max_len,
                                  std::uint64_t budget = default_enumeration_budget());

}  // namespace sl2kit
