#pragma once

#include "sl2kit/matrix.hpp"

#include <array>
#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

namespace sl2kit {

// True iff tr(g) is an algebraic integer; for det g = 1 this is the whole
// characteristic polynomial x^2 - tr(g) x + 1. Throws Error{DetNotOne}.
bool integral_characteristic(const Mat2& g);

// Distinct group elements in breadth-first word order: identity, then the
// letters in the given order, then length-2 products w*s, and so on.
std::vector<Mat2> word_ball(const std::vector<Mat2>& letters, int radius);

// Four group elements whose trace functionals f_g(h) = tr(g h) are linearly
// independent, with their trace Gram matrix gram(i,k) = tr(g_i g_k).
struct TraceBasis {
    std::array<Mat2, 4> elements;
    Mat4 gram;
    Mat4 gram_inverse;
};

// Greedy scan: keep an element when it raises the rank of the running Gram
// matrix. Throws Error{RankDeficient} if the stream ends below rank 4.
TraceBasis select_basis(const std::vector<Mat2>& stream);

// Matrix of h -> (f_h -> f_{gh}) on the span of the basis functionals, in
// column convention, so alpha(gh) = alpha(g) alpha(h). Row i of the
// transpose holds the coefficients solving
//   tr(g g_i g_k) = Σ_j c_ij tr(g_j g_k),  k = 1..4.
Mat4 alpha(const Mat2& g, const TraceBasis& basis);

// Memoising wrapper around alpha. Safe for concurrent use.
class Rep4 {
public:
    explicit Rep4(TraceBasis basis) : basis_(std::move(basis)), lock_(std::make_unique<std::shared_mutex>()) {}

    const TraceBasis& basis() const { return basis_; }
    Mat4 operator()(const Mat2& g) const;
    std::size_t cache_size() const;

private:
    TraceBasis basis_;
    mutable std::map<Mat2, Mat4> cache_;
    std::unique_ptr<std::shared_mutex> lock_;
};

// g acts trivially on f_1 (tr(g h) = tr(h) for the four elementary
// matrices h = E_ij) exactly when g = I.
bool acts_trivially_on_identity_functional(const Mat2& g);

struct ElementReport {
    Mat2 element;
    Mat4 image;
    bool maps_to_identity = false;
    bool probe_trivial = false;       // elementary-matrix probe
    bool determinant_one = false;
    bool char_poly_squared = false;   // char(alpha(g)) = char(g)^2
    bool entries_integral = false;    // every entry an algebraic integer
};

struct EmbeddingReport {
    std::size_t pairs_checked = 0;
    std::size_t homomorphism_failures = 0;
    std::size_t faithfulness_failures = 0;  // alpha(g) = I with g != I, or probe disagreement
    std::size_t determinant_failures = 0;
    std::size_t char_poly_failures = 0;
    std::size_t non_integral = 0;           // reported, not a failure
    std::vector<ElementReport> elements;

    bool passed() const {
        return homomorphism_failures == 0 && faithfulness_failures == 0 && determinant_failures == 0 &&
               char_poly_failures == 0;
    }
};

// Checks every sample, and the homomorphism identity on the cyclic pairs
// (s_i, s_{i+1}) plus any extra pairs given.
EmbeddingReport verify_embedding(const Rep4& rep, const std::vector<Mat2>& samples,
                                 const std::vector<std::pair<Mat2, Mat2>>& extra_pairs = {});

// Square of a monic polynomial given by coefficients low to high.
std::vector<FieldElement> square_polynomial(const std::vector<FieldElement>& p);

}  // namespace sl2kit
