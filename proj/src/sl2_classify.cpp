#include "sl2kit/sl2_classify.hpp"

#include "sl2kit/linalg.hpp"

namespace sl2kit {

LieElement::LieElement(Mat2 m) : m_(std::move(m)) {
    if (!m_.trace().is_zero()) throw Error(ErrorCode::NotTraceless, "matrix " + m_.to_string() + " is not traceless");
}

LieElement LieElement::e() { return LieElement(Mat2{{0, 1}, {0, 0}}); }
LieElement LieElement::f() { return LieElement(Mat2{{0, 0}, {1, 0}}); }
LieElement LieElement::h() { return LieElement(Mat2{{1, 0}, {0, -1}}); }

std::array<FieldElement, 3> LieElement::coordinates() const { return {m_(0, 0), m_(0, 1), m_(1, 0)}; }

LieElement LieElement::from_coordinates(const std::array<FieldElement, 3>& abc) {
    return LieElement(Mat2{{abc[0], abc[1]}, {abc[2], -abc[0]}});
}

bool LieElement::is_zero() const {
    for (const auto& x : m_.entries()) {
        if (!x.is_zero()) return false;
    }
    return true;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    return LieElement(x.matrix() * y.matrix() - y.matrix() * x.matrix());
}

NotASubalgebraError::NotASubalgebraError(LieElement bracket)
    : Error(ErrorCode::NotASubalgebra,
            "bracket " + bracket.matrix().to_string() + " lies outside the span"),
      bracket_(std::move(bracket)) {}

CommutativeError::CommutativeError(std::optional<std::array<FieldElement, 2>> relation)
    : Error(ErrorCode::Commutative, relation ? "commuting pair is linearly dependent: " + (*relation)[0].to_string() +
                                                   "·x + " + (*relation)[1].to_string() + "·y = 0"
                                             : "commuting pair"),
      relation_(std::move(relation)) {}

namespace {

// 3x2 coordinate matrix with columns x, y.
linalg::Dense<FieldElement> span_matrix(const LieElement& x, const LieElement& y) {
    const auto cx = x.coordinates(), cy = y.coordinates();
    return {{cx[0], cy[0]}, {cx[1], cy[1]}, {cx[2], cy[2]}};
}

std::vector<FieldElement> as_vector(const LieElement& x) {
    const auto c = x.coordinates();
    return {c[0], c[1], c[2]};
}

std::optional<std::array<FieldElement, 2>> dependency(const Subalgebra2& s) {
    auto ker = linalg::kernel(span_matrix(s.first, s.second), 2);
    if (ker.empty()) return std::nullopt;
    return std::array<FieldElement, 2>{ker.front()[0], ker.front()[1]};
}

// Nonzero kernel vector of a rank-1 2x2 matrix, first nonzero entry scaled to 1.
std::array<FieldElement, 2> kernel_vector(const Mat2& n) {
    std::array<FieldElement, 2> v;
    if (!n(0, 0).is_zero() || !n(0, 1).is_zero()) {
        v = {-n(0, 1), n(0, 0)};
    } else {
        v = {-n(1, 1), n(1, 0)};
    }
    const FieldElement lead = v[0].is_zero() ? v[1] : v[0];
    v[0] /= lead;
    v[1] /= lead;
    return v;
}

bool lower_left_zero(const Mat2& m) { return m(1, 0).is_zero(); }

}  // namespace

NormalizedBasis normalize_basis(const Subalgebra2& s) {
    if (linalg::rank(span_matrix(s.first, s.second)) < 2) {
        throw Error(ErrorCode::IndependenceFailure, "basis elements are linearly dependent");
    }
    const LieElement x1 = bracket(s.first, s.second);
    if (x1.is_zero()) throw CommutativeError(dependency(s));
    if (!linalg::solve(span_matrix(s.first, s.second), as_vector(x1))) throw NotASubalgebraError(x1);

    // [x1, α first + β second] = x1
    const auto sol = linalg::solve(span_matrix(bracket(x1, s.first), bracket(x1, s.second)), as_vector(x1));
    if (!sol) throw Error(ErrorCode::NotASubalgebra, "no x2 with [x1, x2] = x1");
    const LieElement x2 = (*sol)[0] * s.first + (*sol)[1] * s.second;
    if (!(bracket(x1, x2) == x1)) throw Error(ErrorCode::CheckFailed, "normalized basis relation failed");
    return {x1, x2};
}

ClassificationOutcome classify_2dim(const Subalgebra2& s) {
    if (bracket(s.first, s.second).is_zero()) throw CommutativeError(dependency(s));
    ClassificationOutcome out{Mat2::identity(), "upper-triangular", normalize_basis(s), {}};

    const Mat2& x2 = out.normalized.x2.matrix();
    // [x1, x2] = x1 forces eigenvalues ±1/2, i.e. det x2 = -1/4.
    if (x2.determinant() != FieldElement(Rational(-1, 4))) {
        throw Error(ErrorCode::CheckFailed, "x2 does not have eigenvalues ±1/2");
    }
    const Mat2 half = FieldElement(Rational(1, 2)) * Mat2::identity();
    const auto plus = kernel_vector(x2 - half);
    const auto minus = kernel_vector(x2 + half);

    for (const auto& [u, v] : {std::pair{plus, minus}, std::pair{minus, plus}}) {
        const Mat2 q{{u[0], v[0]}, {u[1], v[1]}};
        const Mat2 qinv = q.inverse();
        const Mat2 a = qinv * s.first.matrix() * q;
        const Mat2 b = qinv * s.second.matrix() * q;
        if (lower_left_zero(a) && lower_left_zero(b)) {
            out.conjugator = q;
            out.conjugated_basis = {a, b};
            return out;
        }
    }
    throw Error(ErrorCode::CheckFailed, "no eigenvector ordering triangularizes the subalgebra");
}

bool normalizes_torus(const Mat2& g) {
    return (g(0, 0) * g(0, 1)).is_zero() && (g(1, 0) * g(1, 1)).is_zero();
}

bool normalizes_unipotent(const Mat2& g) { return g(1, 0).is_zero(); }

std::vector<WordFactor> maximality_factor(const Mat2& g, const Mat2& target) {
    if (!g.determinant().is_one() || !target.determinant().is_one()) {
        throw Error(ErrorCode::DetNotOne, "maximality factorization needs determinant-1 inputs");
    }
    if (g(1, 0).is_zero()) throw Error(ErrorCode::GIsInH, "g is upper triangular, it lies in H");
    if (target(1, 0).is_zero()) return {{WordFactor::Kind::H, target}};

    const FieldElement zero = FieldElement(g.field(), Rational(0));
    const FieldElement one = FieldElement(g.field(), Rational(1));

    // g · [[g21^-1, -g22], [0, g21]] = [[g11/g21, -1], [1, 0]]
    const FieldElement g21_inv = g(1, 0).inverse();
    const Mat2 right{{g21_inv, -g(1, 1)}, {zero, g(1, 0)}};

    // [[a, b - a g11/g21], [0, 1/a]] · (g · right) = [[b, -a], [1/a, 0]];
    // its inverse is [[0, a], [-1/a, b]]. Choose a = -1/s21, b = s22.
    const FieldElement s21_inv = target(1, 0).inverse();
    const FieldElement a = -s21_inv;
    const FieldElement b = target(1, 1);
    const Mat2 left{{a, b - a * g(0, 0) * g21_inv}, {zero, a.inverse()}};

    // target = [[1, s11/s21], [0, 1]] · [[0, -1/s21], [s21, s22]]
    const Mat2 shear{{one, target(0, 0) * s21_inv}, {zero, one}};

    std::vector<WordFactor> word{
        {WordFactor::Kind::H, shear},
        {WordFactor::Kind::H, right.inverse()},
        {WordFactor::Kind::GInverse, g.inverse()},
        {WordFactor::Kind::H, left.inverse()},
    };
    if (multiply_word(word) != target) throw Error(ErrorCode::CheckFailed, "factorization does not reproduce target");
    return word;
}

Mat2 multiply_word(const std::vector<WordFactor>& word) {
    Mat2 acc = Mat2::identity();
    for (const auto& f : word) acc = acc * f.matrix;
    return acc;
}

}  // namespace sl2kit
