#include "sl2kit/sl2_classify.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace sl2kit;

namespace {

const LieElement E = LieElement::e();
const LieElement F = LieElement::f();
const LieElement H = LieElement::h();

LieElement scaled(const Rational& s, const LieElement& x) { return FieldElement(s) * x; }

LieElement random_traceless(oracle::Sampler& rng, const NumberField& k) {
    return LieElement::from_coordinates({rng.small_element(k), rng.small_element(k), rng.small_element(k)});
}

// Rank of the coordinate vectors of the given elements.
std::size_t coordinate_rank(const std::vector<LieElement>& xs) {
    linalg::Dense<FieldElement> rows;
    for (const auto& x : xs) {
        const auto c = x.coordinates();
        rows.push_back({c[0], c[1], c[2]});
    }
    return linalg::rank(rows);
}

Mat2 conjugate(const Mat2& q, const Mat2& x) { return oracle::mul(oracle::mul(oracle::adjugate_inverse(q), x), q); }

}  // namespace

TEST_CASE("traceless check") {
    CHECK_THROWS_AS(LieElement(Mat2{{1, 0}, {0, 1}}), Error);
    CHECK(LieElement(Mat2{{2, 5}, {7, -2}}).coordinates()[2] == FieldElement(7));
}

TEST_CASE("bracket examples") {
    CHECK(bracket(E, F) == H);
    CHECK(bracket(H, H).is_zero());
    CHECK(bracket(H, E) == scaled(2, E));
    CHECK(bracket(H, F) == scaled(-2, F));
}

TEST_CASE("bracket against the displayed identity") {
    oracle::Sampler rng(61);
    const auto k = NumberField::make({1, 0, 1});
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = random_traceless(rng, k);
        const auto& m = x.matrix();
        // [[a,b],[c,d]] e - e [[a,b],[c,d]] = [[-c, a-d],[0, c]]
        const Mat2 expect{{-m(1, 0), m(0, 0) - m(1, 1)}, {FieldElement(k, Rational(0)), m(1, 0)}};
        CHECK(bracket(x, E).matrix() == expect);
    }
}

TEST_CASE("bilinear, antisymmetric, Jacobi") {
    oracle::Sampler rng(62);
    const auto k = NumberField::make({-2, 0, 0, 1});
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = random_traceless(rng, k), y = random_traceless(rng, k), z = random_traceless(rng, k);
        const auto s = rng.small_element(k);
        CHECK(bracket(x, y) == FieldElement(-1) * bracket(y, x));
        CHECK(bracket(s * x + y, z) == s * bracket(x, z) + bracket(y, z));
        CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
    }
}

TEST_CASE("normalize_basis") {
    SUBCASE("{e, h}") {
        const auto nb = normalize_basis({E, H});
        CHECK(bracket(nb.x1, nb.x2) == nb.x1);
        CHECK(nb.x1 == scaled(-2, E));
        CHECK(nb.x2 == scaled(Rational(-1, 2), H));
    }
    SUBCASE("{h, e} flips x1 but not x2") {
        const auto nb = normalize_basis({H, E});
        CHECK(nb.x1 == scaled(2, E));
        CHECK(nb.x2 == scaled(Rational(-1, 2), H));
    }
    SUBCASE("{e, f} is not closed") {
        try {
            (void)normalize_basis({E, F});
            FAIL("expected NotASubalgebraError");
        } catch (const NotASubalgebraError& e) {
            CHECK(e.bracket() == H);
            CHECK(coordinate_rank({E, F, e.bracket()}) == 3);
        }
    }
    SUBCASE("{h, 2h} is dependent") {
        try {
            (void)normalize_basis({H, scaled(2, H)});
            FAIL("expected IndependenceFailure");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::IndependenceFailure);
        }
    }
}

TEST_CASE("classification examples") {
    const auto standard = classify_2dim({E, scaled(Rational(1, 2), H)});
    CHECK(standard.conjugator.is_identity());
    const auto lower = classify_2dim({F, scaled(Rational(1, 2), H)});
    CHECK(lower.conjugator == Mat2{{0, 1}, {1, 0}});
    for (const auto& m : lower.conjugated_basis) CHECK(oracle::upper_triangular(m));
}

TEST_CASE("commuting pairs are rejected with the forced relation") {
    oracle::Sampler rng(63);
    const auto k = NumberField::make({1, 0, 1});
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = random_traceless(rng, k);
        if (x.is_zero()) continue;
        const auto s = rng.small_element(k);
        try {
            (void)classify_2dim({x, s * x});
            FAIL("expected CommutativeError");
        } catch (const CommutativeError& e) {
            REQUIRE(e.relation().has_value());
            const auto& [c0, c1] = *e.relation();
            CHECK_FALSE((c0.is_zero() && c1.is_zero()));
            CHECK((c0 * x + c1 * (s * x)).is_zero());
        }
    }
}

TEST_CASE("random conjugates of the standard algebra are recovered") {
    oracle::Sampler rng(64);
    const auto k = NumberField::make({1, 0, 1});
    const FieldElement zero(k, Rational(0));
    for (int trial = 0; trial < 50; ++trial) {
        const Mat2 p = rng.invertible(k);
        const Mat2 pinv = oracle::adjugate_inverse(p);
        // a random basis of the upper triangular algebra
        auto upper = [&] {
            const auto a = rng.small_element(k), b = rng.small_element(k);
            return Mat2{{a, b}, {zero, -a}};
        };
        Mat2 u1 = upper(), u2 = upper();
        if ((u1(0, 0) * u2(0, 1) - u1(0, 1) * u2(0, 0)).is_zero()) continue;
        const LieElement x(oracle::mul(oracle::mul(p, u1), pinv)), y(oracle::mul(oracle::mul(p, u2), pinv));
        const auto out = classify_2dim({x, y});
        CHECK_FALSE(out.conjugator.determinant().is_zero());
        CHECK(oracle::upper_triangular(conjugate(out.conjugator, x.matrix())));
        CHECK(oracle::upper_triangular(conjugate(out.conjugator, y.matrix())));
        CHECK(bracket(out.normalized.x1, out.normalized.x2) == out.normalized.x1);
    }
}

TEST_CASE("normalizer predicates") {
    const FieldElement a(Rational(3, 7));
    CHECK(normalizes_torus(Mat2{{a, 0}, {0, a.inverse()}}));
    CHECK(normalizes_torus(Mat2{{0, a}, {-a.inverse(), 0}}));
    CHECK_FALSE(normalizes_torus(Mat2{{1, 1}, {0, 1}}));
    CHECK(normalizes_unipotent(Mat2{{a, 5}, {0, a.inverse()}}));
    CHECK_FALSE(normalizes_unipotent(Mat2{{1, 0}, {1, 1}}));
    CHECK_FALSE(normalizes_unipotent(Mat2{{0, 1}, {-1, 0}}));
}

TEST_CASE("maximality factorisation") {
    const Mat2 g{{0, -1}, {1, 0}};
    SUBCASE("target already upper triangular") {
        const Mat2 target{{2, 7}, {0, Rational(1, 2)}};
        const auto word = maximality_factor(g, target);
        REQUIRE(word.size() == 1);
        CHECK(word[0].kind == WordFactor::Kind::H);
        CHECK(word[0].matrix == target);
    }
    SUBCASE("lower unipotent target") {
        const Mat2 target{{1, 0}, {1, 1}};
        const auto word = maximality_factor(g, target);
        CHECK(multiply_word(word) == target);
        int g_count = 0;
        for (const auto& f : word) {
            if (f.kind == WordFactor::Kind::H) {
                CHECK(oracle::upper_triangular(f.matrix));
                CHECK(f.matrix.determinant().is_one());
            } else {
                ++g_count;
            }
        }
        CHECK(g_count == 1);
        CHECK(word.size() <= 4);
    }
    SUBCASE("errors") {
        try {
            (void)maximality_factor(Mat2{{1, 1}, {0, 1}}, g);
            FAIL("expected GIsInH");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::GIsInH);
        }
        CHECK_THROWS_AS(maximality_factor(g, Mat2{{2, 0}, {0, 1}}), Error);
    }
}

TEST_CASE("maximality words over Q(i) multiply out") {
    oracle::Sampler rng(65);
    const auto k = NumberField::make({1, 0, 1});
    for (int trial = 0; trial < 50; ++trial) {
        const Mat2 g = rng.sl2(k);
        if (g(1, 0).is_zero()) continue;
        const Mat2 target = rng.sl2(k);
        Mat2 product = Mat2::identity(k);
        for (const auto& f : maximality_factor(g, target)) product = oracle::mul(product, f.matrix);
        CHECK(product == target);
    }
}
