#include "sl2kit/trace_embed.hpp"

#include <mutex>
#include <set>

namespace sl2kit {

bool integral_characteristic(const Mat2& g) {
    if (!g.determinant().is_one()) {
        throw Error(ErrorCode::DetNotOne, "integral characteristic needs determinant 1");
    }
    return is_algebraic_integer(g.trace());
}

std::vector<Mat2> word_ball(const std::vector<Mat2>& letters, int radius) {
    NumberField f = NumberField::rationals();
    for (const auto& s : letters) f = common_field(f, s.field());
    const Mat2 identity = Mat2::identity(f);
    std::set<Mat2> seen{identity};
    std::vector<Mat2> ordered{identity};
    std::vector<Mat2> frontier{identity};
    for (int len = 0; len < radius; ++len) {
        std::vector<Mat2> next;
        for (const auto& w : frontier) {
            for (const auto& s : letters) {
                Mat2 ws = w * s;
                if (seen.insert(ws).second) {
                    ordered.push_back(ws);
                    next.push_back(std::move(ws));
                }
            }
        }
        frontier = std::move(next);
    }
    return ordered;
}

namespace {

linalg::Dense<FieldElement> gram_of(const std::vector<Mat2>& elems) {
    const std::size_t n = elems.size();
    linalg::Dense<FieldElement> g(n, std::vector<FieldElement>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) g[i][k] = (elems[i] * elems[k]).trace();
    }
    return g;
}

}  // namespace

TraceBasis select_basis(const std::vector<Mat2>& stream) {
    std::vector<Mat2> accepted;
    for (const auto& g : stream) {
        std::vector<Mat2> trial = accepted;
        trial.push_back(g);
        if (linalg::rank(gram_of(trial)) == trial.size()) accepted = std::move(trial);
        if (accepted.size() == 4) break;
    }
    if (accepted.size() < 4) {
        throw Error(ErrorCode::RankDeficient, "trace functionals span only dimension " +
                                                  std::to_string(accepted.size()) + " of 4");
    }
    TraceBasis basis;
    for (std::size_t i = 0; i < 4; ++i) basis.elements[i] = accepted[i];
    basis.gram = Mat4::from_dense(gram_of(accepted));
    basis.gram_inverse = basis.gram.inverse();
    return basis;
}

Mat4 alpha(const Mat2& g, const TraceBasis& basis) {
    Mat4 rhs;
    for (std::size_t i = 0; i < 4; ++i) {
        const Mat2 ggi = g * basis.elements[i];
        for (std::size_t k = 0; k < 4; ++k) rhs(i, k) = (ggi * basis.elements[k]).trace();
    }
    const Mat4 coefficients = rhs * basis.gram_inverse;  // c · gram = rhs
    return coefficients.transpose();
}

Mat4 Rep4::operator()(const Mat2& g) const {
    {
        std::shared_lock read(*lock_);
        if (auto it = cache_.find(g); it != cache_.end()) return it->second;
    }
    Mat4 image = alpha(g, basis_);
    std::unique_lock write(*lock_);
    return cache_.emplace(g, std::move(image)).first->second;
}

std::size_t Rep4::cache_size() const {
    std::shared_lock read(*lock_);
    return cache_.size();
}

bool acts_trivially_on_identity_functional(const Mat2& g) {
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            Mat2 e;
            e(i, j) = FieldElement(1);
            if ((g * e).trace() != e.trace()) return false;
        }
    }
    return true;
}

std::vector<FieldElement> square_polynomial(const std::vector<FieldElement>& p) {
    std::vector<FieldElement> out(2 * p.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) out[i + j] += p[i] * p[j];
    }
    return out;
}

EmbeddingReport verify_embedding(const Rep4& rep, const std::vector<Mat2>& samples,
                                 const std::vector<std::pair<Mat2, Mat2>>& extra_pairs) {
    EmbeddingReport report;
    auto check_pair = [&](const Mat2& g, const Mat2& h) {
        ++report.pairs_checked;
        if (rep(g * h) != rep(g) * rep(h)) ++report.homomorphism_failures;
    };
    for (std::size_t i = 0; i < samples.size(); ++i) check_pair(samples[i], samples[(i + 1) % samples.size()]);
    for (const auto& [g, h] : extra_pairs) check_pair(g, h);

    for (const auto& g : samples) {
        ElementReport e;
        e.element = g;
        e.image = rep(g);
        e.maps_to_identity = e.image.is_identity();
        e.probe_trivial = acts_trivially_on_identity_functional(g);
        const bool is_identity = g.is_identity();
        if ((e.maps_to_identity && !is_identity) || e.probe_trivial != is_identity) ++report.faithfulness_failures;
        e.determinant_one = e.image.determinant().is_one();
        if (!e.determinant_one) ++report.determinant_failures;
        e.char_poly_squared = e.image.characteristic_polynomial() == square_polynomial(g.characteristic_polynomial());
        if (!e.char_poly_squared) ++report.char_poly_failures;
        e.entries_integral = true;
        for (const auto& x : e.image.entries()) {
            if (!is_algebraic_integer(x)) {
                e.entries_integral = false;
                break;
            }
        }
        if (!e.entries_integral) ++report.non_integral;
        report.elements.push_back(std::move(e));
    }
    return report;
}

}  // namespace sl2kit
