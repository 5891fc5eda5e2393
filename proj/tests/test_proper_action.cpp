#include "sl2kit/proper_action.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

using namespace sl2kit;

namespace {

const Mat2 S{{0, -1}, {1, 0}};
const Mat2 T{{1, 1}, {0, 1}};
const Mat2 D2{{2, 0}, {0, Rational(1, 2)}};

std::set<Mat2> stabilizer() { return {Mat2{{1, 0}, {0, 1}}, Mat2{{-1, 0}, {0, -1}}, S, Mat2{{0, 1}, {-1, 0}}}; }

// Brute force over numerators in [-B, B] with a fixed denominator, keeping
// determinant-1 matrices whose displacements (quaternion Möbius oracle and
// the invariant-factor formula per prime) are all < bound.
std::set<Mat2> brute_force(long denominator, const std::vector<long>& primes, double bound) {
    const long B = static_cast<long>(std::ceil(std::sqrt(2.0 * std::cosh(bound)) * static_cast<double>(denominator)));
    const long d2 = denominator * denominator;
    std::set<Mat2> out;
    for (long a = -B; a <= B; ++a)
        for (long b = -B; b <= B; ++b)
            for (long c = -B; c <= B; ++c)
                for (long d = -B; d <= B; ++d) {
                    if (a * d - b * c != d2) continue;
                    const mpq_class e[4] = {mpq_class(a, denominator), mpq_class(b, denominator),
                                            mpq_class(c, denominator), mpq_class(d, denominator)};
                    bool ok = true;
                    for (long p : primes) {
                        long lowest = 0;
                        for (const auto& x : e) {
                            mpq_class y = x;
                            y.canonicalize();
                            if (auto v = oracle::padic(y, p)) lowest = std::min(lowest, *v);
                        }
                        if (!(static_cast<double>(-2 * lowest) < bound)) ok = false;
                    }
                    if (!ok) continue;
                    const double da = e[0].get_d(), db = e[1].get_d(), dc = e[2].get_d(), dd = e[3].get_d();
                    const auto img = oracle::quaternion_act(da, db, dc, dd, {0, 1});
                    if (!(oracle::distance3({0, 1}, img) < bound)) continue;
                    mpq_class f[4] = {e[0], e[1], e[2], e[3]};
                    for (auto& x : f) x.canonicalize();
                    out.insert(Mat2{{f[0], f[1]}, {f[2], f[3]}});
                }
    return out;
}

}  // namespace

TEST_CASE("ring detection") {
    const auto z = ring_detect({S, T});
    CHECK(z.s == 1);
    CHECK(z.primes.empty());
    const auto six = ring_detect({Mat2{{1, Rational(1, 6)}, {0, 1}}});
    CHECK(six.s == 6);
    CHECK(six.primes == std::vector<std::int64_t>{2, 3});
    const auto four = ring_detect({Mat2{{1, Rational(1, 4)}, {0, 1}}, Mat2{{1, 0}, {Rational(1, 2), 1}}});
    CHECK(four.s == 4);
    CHECK(four.primes == std::vector<std::int64_t>{2});
}

TEST_CASE("marked group validation") {
    CHECK_THROWS_AS(MarkedGroup({Mat2{{2, 0}, {0, 1}}}), Error);
    const MarkedGroup g({S, T});
    CHECK(g.symmetric_generators().size() == 4);
    try {
        g.require_in_ring(D2);
        FAIL("expected EntryOutsideRing");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EntryOutsideRing);
    }
}

TEST_CASE("displacement examples") {
    const MarkedGroup half({S, T, D2});
    const auto id = displacement(Mat2::identity(), half);
    CHECK(id.tree_displacements == std::vector<long>{0});
    CHECK(id.hyp_displacement == 0.0);
    const auto d = displacement(D2, half);
    CHECK(d.tree_displacements == std::vector<long>{2});
    CHECK(std::abs(d.hyp_displacement - std::log(4.0)) < 1e-12);
    const auto t = displacement(T, half);
    CHECK(t.tree_displacements == std::vector<long>{0});
    CHECK(std::abs(t.hyp_displacement - std::acosh(1.5)) < 1e-12);
    CHECK_THROWS_AS(displacement(Mat2{{1, Rational(1, 3)}, {0, 1}}, half), Error);
}

TEST_CASE("enumeration examples") {
    const MarkedGroup modular({S, T});
    const auto small = enumerate_bounded(modular, 0.1);
    CHECK(small.complete);
    CHECK(std::set<Mat2>(small.elements.begin(), small.elements.end()) == stabilizer());

    const MarkedGroup half({S, T, D2});
    const auto two = enumerate_bounded(half, 2.0);
    CHECK(std::find(two.elements.begin(), two.elements.end(), Mat2::identity()) != two.elements.end());
    CHECK(std::find(two.elements.begin(), two.elements.end(), D2) == two.elements.end());
}

TEST_CASE("enumeration is complete against brute force") {
    for (double bound : {0.1, 1.0, 2.0}) {
        const auto got = enumerate_bounded(MarkedGroup({S, T}), bound);
        CHECK(std::set<Mat2>(got.elements.begin(), got.elements.end()) == brute_force(1, {}, bound));
    }
    const auto got = enumerate_bounded(MarkedGroup({S, T, D2}), 2.5);
    CHECK(std::set<Mat2>(got.elements.begin(), got.elements.end()) == brute_force(2, {2}, 2.5));
}

TEST_CASE("enumeration is monotone in the bound and respects the denominator link") {
    const MarkedGroup half({S, T, D2});
    const auto a = enumerate_bounded(half, 1.5), b = enumerate_bounded(half, 2.5);
    CHECK(std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(), a.elements.end()));
    for (const auto& g : b.elements) {
        long lowest = 0;
        for (const auto& x : g.entries()) {
            if (auto v = oracle::padic(x.rational_value(), 2)) lowest = std::min(lowest, *v);
        }
        CHECK(-2 * lowest < 2.5);
    }
}

TEST_CASE("enumeration refuses what it cannot do") {
    const auto k = NumberField::make({1, 0, 1});
    const Mat2 rot{{0, -1}, {1, 0}};
    try {
        (void)enumerate_bounded(MarkedGroup({rot}, k), 1.0);
        FAIL("expected Unsupported");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Unsupported);
    }
    try {
        (void)enumerate_bounded(MarkedGroup({S, T}), 8.0, 1000);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
    }
}

TEST_CASE("word BFS") {
    const MarkedGroup modular({S, T});
    CHECK(word_bfs(modular, 0, 1.0) == std::set<Mat2>{Mat2::identity()});
    const auto four = word_bfs(modular, 4, 0.1);
    CHECK(std::includes(stabilizer().begin(), stabilizer().end(), four.begin(), four.end()));
    const MarkedGroup half({S, T, D2});
    std::set<Mat2> previous;
    for (int len = 0; len <= 5; ++len) {
        const auto now = word_bfs(half, len, 3.0);
        CHECK(std::includes(now.begin(), now.end(), previous.begin(), previous.end()));
        for (const auto& g : now) CHECK(displacement(g, half).within(3.0));
        previous = now;
    }
}

TEST_CASE("properness check") {
    const auto r = properness_check(MarkedGroup({S, T}), 0.1, 4);
    CHECK(r.contained);
    CHECK(r.enumerated_count == 4);
    CHECK(r.certificate == "finite, <= 4");
    const auto empty = properness_check(MarkedGroup({}), 1.0, 3);
    CHECK(empty.contained);
    CHECK(empty.word_count == 1);
}

TEST_CASE("budget from the environment") {
    ::setenv("SL2KIT_ENUM_BUDGET", "1234", 1);
    CHECK(default_enumeration_budget() == 1234);
    ::unsetenv("SL2KIT_ENUM_BUDGET");
    CHECK(default_enumeration_budget() == 10'000'000);
}
