#pragma once

#include "sl2kit/matrix.hpp"

#include <array>
#include <complex>
#include <vector>

namespace sl2kit {

using Complex = std::complex<double>;

// Ring map Q(γ) -> C sending γ to one chosen root of its minimal polynomial.
// Roots are indexed real roots first (decreasing), then non-real roots in
// conjugate pairs (upper half-plane member first) by decreasing real part.
class ArchimedeanEmbedding {
public:
    // Throws Error{Usage} for an out-of-range index.
    ArchimedeanEmbedding(NumberField field, int root_index = 0);

    NumberField field() const { return field_; }
    int root_index() const { return root_index_; }
    Complex root() const { return root_; }
    bool is_real() const { return root_.imag() == 0.0; }

    Complex operator()(const FieldElement& x) const;

private:
    NumberField field_;
    int root_index_;
    Complex root_;
};

// All complex roots of a monic rational polynomial in the embedding order
// above, polished to |f(root)| < 1e-12.
std::vector<Complex> ordered_roots(const Polynomial& monic);

struct ComplexMat2 {
    Complex a, b, c, d;

    static ComplexMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    Complex determinant() const { return a * d - b * c; }
    friend ComplexMat2 operator*(const ComplexMat2& x, const ComplexMat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
};

ComplexMat2 embed(const Mat2& g, const ArchimedeanEmbedding& emb);

// Point of upper half-space: z in C, height t > 0. The hyperbolic plane is
// the slice Im z = 0.
struct HPoint {
    Complex z;
    double t = 1.0;
};

inline HPoint basepoint() { return {Complex(0.0, 0.0), 1.0}; }

// Möbius action of SL(2,C) on upper half-space. Throws
// Error{DegenerateInput} for t <= 0 or det g farther than 1e-9 from 1.
HPoint mobius_act(const ComplexMat2& g, const HPoint& p);

// arccosh(1 + (|z1 - z2|^2 + (t1 - t2)^2) / (2 t1 t2)).
double hyp_distance(const HPoint& p, const HPoint& q);

// Distance from (0, 1) to its image: arccosh((Σ |g_ij|^2) / 2).
double displacement_hyp(const ComplexMat2& g);
double displacement_hyp(const Mat2& g, const ArchimedeanEmbedding& emb);

}  // namespace sl2kit
