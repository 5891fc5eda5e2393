#pragma once

#include "sl2kit/matrix.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace sl2kit {

// Traceless 2x2 matrix, [[a, b], [c, -a]].
class LieElement {
public:
    // Throws Error{NotTraceless}.
    explicit LieElement(Mat2 m);

    static LieElement e();  // [[0,1],[0,0]]
    static LieElement f();  // [[0,0],[1,0]]
    static LieElement h();  // diag(1,-1)

    const Mat2& matrix() const { return m_; }
    // Coordinates (a, b, c).
    std::array<FieldElement, 3> coordinates() const;
    static LieElement from_coordinates(const std::array<FieldElement, 3>& abc);

    bool is_zero() const;

    friend LieElement operator+(const LieElement& x, const LieElement& y) { return LieElement(x.m_ + y.m_); }
    friend LieElement operator*(const FieldElement& s, const LieElement& x) { return LieElement(s * x.m_); }
    friend bool operator==(const LieElement& x, const LieElement& y) { return x.m_ == y.m_; }

private:
    Mat2 m_;
};

// xy - yx.
LieElement bracket(const LieElement& x, const LieElement& y);

// Span of two traceless matrices; the closure and independence conditions
// are checked by the operations that need them.
struct Subalgebra2 {
    LieElement first;
    LieElement second;
};

struct NormalizedBasis {
    LieElement x1;  // spans the derived algebra
    LieElement x2;  // [x1, x2] = x1
};

// The bracket lies outside the span; `bracket` is the witness.
class NotASubalgebraError : public Error {
public:
    explicit NotASubalgebraError(LieElement bracket);
    const LieElement& bracket() const { return bracket_; }

private:
    LieElement bracket_;
};

// Commuting pair; the witness is a nontrivial relation
// coefficients[0]·first + coefficients[1]·second = 0, which is what the
// Jordan-form argument forces for any commuting pair in sl(2).
class CommutativeError : public Error {
public:
    explicit CommutativeError(std::optional<std::array<FieldElement, 2>> relation);
    const std::optional<std::array<FieldElement, 2>>& relation() const { return relation_; }

private:
    std::optional<std::array<FieldElement, 2>> relation_;
};

// x1 = [first, second], x2 in the span solving [x1, x2] = x1 (the
// coordinate of the free direction set to zero). Throws
// Error{IndependenceFailure}, CommutativeError, NotASubalgebraError.
NormalizedBasis normalize_basis(const Subalgebra2& s);

struct ClassificationOutcome {
    Mat2 conjugator;                         // Q with Q^{-1} s Q upper triangular
    std::string kind = "upper-triangular";
    NormalizedBasis normalized;
    std::array<Mat2, 2> conjugated_basis;    // Q^{-1} first Q, Q^{-1} second Q
};

// Every 2-dimensional subalgebra of sl(2) is conjugate to the upper
// triangular one. The conjugator is the eigenvector matrix of x2, whose
// eigenvalues are forced to be ±1/2 and so stay in the input field.
// Throws CommutativeError (checked first), NotASubalgebraError.
ClassificationOutcome classify_2dim(const Subalgebra2& s);

// g normalizes the diagonal torus iff g11 g12 = 0 and g21 g22 = 0.
bool normalizes_torus(const Mat2& g);
// g normalizes the upper unipotent group iff g21 = 0.
bool normalizes_unipotent(const Mat2& g);

struct WordFactor {
    enum class Kind { H, G, GInverse };
    Kind kind;
    Mat2 matrix;  // the factor itself (g^{-1} for GInverse)
};

// Writes target as a product of upper-triangular determinant-1 matrices and
// a single occurrence of g^{±1}, for any g with g21 != 0. Throws
// Error{GIsInH} when g21 = 0, Error{DetNotOne}.
std::vector<WordFactor> maximality_factor(const Mat2& g, const Mat2& target);

Mat2 multiply_word(const std::vector<WordFactor>& word);

}  // namespace sl2kit
