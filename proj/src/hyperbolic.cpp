#include "sl2kit/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sl2kit {

namespace {

using LComplex = std::complex<long double>;

LComplex horner(const std::vector<long double>& c, LComplex x) {
    LComplex acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

LComplex horner_derivative(const std::vector<long double>& c, LComplex x) {
    LComplex acc = 0;
    for (std::size_t k = c.size() - 1; k >= 1; --k) acc = acc * x + static_cast<long double>(k) * c[k];
    return acc;
}

}  // namespace

std::vector<Complex> ordered_roots(const Polynomial& monic) {
    std::vector<long double> c;
    for (const auto& q : monic.coeffs()) c.push_back(static_cast<long double>(q.get_d()));
    const std::size_t n = c.size() - 1;
    std::vector<LComplex> z(n);

    // Durand-Kerner from the usual non-symmetric starting spiral.
    long double bound = 1;
    for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, 1 + std::fabs(c[k]));
    const LComplex seed(0.4L, 0.9L);
    for (std::size_t k = 0; k < n; ++k) z[k] = std::pow(seed, static_cast<int>(k)) * (bound / 2);
    for (int iter = 0; iter < 500; ++iter) {
        long double change = 0;
        for (std::size_t i = 0; i < n; ++i) {
            LComplex denom = 1;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) denom *= z[i] - z[j];
            }
            const LComplex step = horner(c, z[i]) / denom;
            z[i] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-30L) break;
    }

    // Snap near-real roots onto the real line, then Newton-polish.
    std::vector<Complex> out;
    for (auto r : z) {
        if (std::fabs(r.imag()) < 1e-9L * std::max(1.0L, std::abs(r))) r = LComplex(r.real(), 0);
        for (int iter = 0; iter < 8; ++iter) {
            const LComplex d = horner_derivative(c, r);
            if (std::abs(d) == 0) break;
            r -= horner(c, r) / d;
        }
        if (r.imag() == 0) r = LComplex(r.real(), 0);
        out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    }

    std::sort(out.begin(), out.end(), [](const Complex& x, const Complex& y) {
        const bool rx = x.imag() == 0, ry = y.imag() == 0;
        if (rx != ry) return rx;
        if (rx) return x.real() > y.real();
        // Conjugate pairs stay adjacent: compare by real part, then |imag|,
        // then upper member first.
        if (std::fabs(x.real() - y.real()) > 1e-9) return x.real() > y.real();
        if (std::fabs(std::fabs(x.imag()) - std::fabs(y.imag())) > 1e-9) {
            return std::fabs(x.imag()) > std::fabs(y.imag());
        }
        return x.imag() > y.imag();
    });
    return out;
}

ArchimedeanEmbedding::ArchimedeanEmbedding(NumberField field, int root_index)
    : field_(field), root_index_(root_index) {
    const Polynomial& f = field.minimal_polynomial();
    const auto roots = ordered_roots(f);
    if (root_index < 0 || static_cast<std::size_t>(root_index) >= roots.size()) {
        throw Error(ErrorCode::Usage, "root index " + std::to_string(root_index) + " out of range");
    }
    root_ = roots[static_cast<std::size_t>(root_index)];
    Complex residual = 0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) residual = residual * root_ + it->get_d();
    if (std::abs(residual) >= 1e-12) {
        throw Error(ErrorCode::DegenerateInput, "root refinement did not converge for " + f.to_string());
    }
}

Complex ArchimedeanEmbedding::operator()(const FieldElement& x) const {
    const FieldElement y = x.in_field(field_);
    const auto& c = y.coeffs();
    Complex acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * root_ + it->get_d();
    return acc;
}

ComplexMat2 embed(const Mat2& g, const ArchimedeanEmbedding& emb) {
    return {emb(g(0, 0)), emb(g(0, 1)), emb(g(1, 0)), emb(g(1, 1))};
}

HPoint mobius_act(const ComplexMat2& g, const HPoint& p) {
    if (!(p.t > 0)) throw Error(ErrorCode::DegenerateInput, "point height must be positive");
    if (std::abs(g.determinant() - 1.0) > 1e-9) {
        throw Error(ErrorCode::DegenerateInput, "Möbius action needs determinant 1");
    }
    const Complex czd = g.c * p.z + g.d;
    const double t2 = p.t * p.t;
    const double denom = std::norm(czd) + std::norm(g.c) * t2;
    const Complex z = ((g.a * p.z + g.b) * std::conj(czd) + g.a * std::conj(g.c) * t2) / denom;
    return {z, p.t / denom};
}

double hyp_distance(const HPoint& p, const HPoint& q) {
    const double dt = p.t - q.t;
    const double arg = 1.0 + (std::norm(p.z - q.z) + dt * dt) / (2.0 * p.t * q.t);
    return std::acosh(std::max(1.0, arg));
}

double displacement_hyp(const ComplexMat2& g) {
    const double sum = std::norm(g.a) + std::norm(g.b) + std::norm(g.c) + std::norm(g.d);
    return std::acosh(std::max(1.0, sum / 2.0));
}

double displacement_hyp(const Mat2& g, const ArchimedeanEmbedding& emb) {
    return displacement_hyp(embed(g, emb));
}

}  // namespace sl2kit
