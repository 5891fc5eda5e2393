#include "sl2kit/bt_tree.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <map>

using namespace sl2kit;

namespace {

TreeVertex rational_vertex(long n, const Rational& b) { return TreeVertex{n, FieldElement(b)}; }

oracle::Disc as_disc(const TreeVertex& v) { return {v.n, v.b.rational_value()}; }

}  // namespace

TEST_CASE("canonical forms") {
    for (long p : {2L, 3L, 5L}) {
        const auto tree = BruhatTitsTree::over_rationals(p);
        const FieldElement P(p);
        CHECK(tree.canonicalize(Mat2::identity()) == tree.base_vertex());
        CHECK(tree.canonicalize(Mat2{{1, 0}, {0, P}}) == rational_vertex(-1, 0));
        CHECK(tree.canonicalize(Mat2{{P, 1}, {0, 1}}) == rational_vertex(1, 1));
        // a negative offset is moved into [0, p^n)
        CHECK(tree.canonicalize(Mat2{{P * P, -1}, {0, 1}}) == rational_vertex(2, p * p - 1));
        CHECK_THROWS_AS(tree.canonicalize(Mat2{{1, 2}, {2, 4}}), Error);
    }
}

TEST_CASE("canonicalize is idempotent and ignores homothety and integral column operations") {
    oracle::Sampler rng(31);
    for (long p : {2L, 3L}) {
        const auto tree = BruhatTitsTree::over_rationals(p);
        for (int trial = 0; trial < 300; ++trial) {
            const Mat2 m = rng.invertible(NumberField::rationals());
            const TreeVertex v = tree.canonicalize(m);
            CHECK(tree.canonicalize(tree.vertex_matrix(v)) == v);
            const FieldElement lambda = rng.nonzero_element(NumberField::rationals());
            CHECK(tree.canonicalize(lambda * m) == v);
            // right-multiply by GL(2, Z_(p)): integer entries, determinant a p-unit
            Mat2 u;
            do {
                u = Mat2{{rng.uniform(-5, 5), rng.uniform(-5, 5)}, {rng.uniform(-5, 5), rng.uniform(-5, 5)}};
            } while (u.determinant().is_zero() || u.determinant().rational_value().get_num() % p == 0);
            CHECK(tree.canonicalize(m * u) == v);
        }
    }
}

TEST_CASE("vertex equality") {
    const auto tree = BruhatTitsTree::over_rationals(3);
    const auto v0 = tree.base_vertex();
    CHECK(tree.vertices_equal(v0, tree.canonicalize(Mat2{{2, 1}, {1, 1}})));
    CHECK_FALSE(tree.vertices_equal(v0, tree.act(Mat2{{3, 0}, {0, Rational(1, 3)}}, v0)));
    CHECK(tree.vertices_equal(tree.canonicalize(Mat2{{9, 4}, {0, 1}}),
                              tree.canonicalize(FieldElement(Rational(5, 7)) * Mat2{{9, 4}, {0, 1}})));
}

TEST_CASE("distance examples") {
    for (long p : {2L, 3L}) {
        const auto tree = BruhatTitsTree::over_rationals(p);
        const auto v0 = tree.base_vertex();
        const FieldElement P(p);
        CHECK(tree.distance(v0, v0) == 0);
        CHECK(tree.distance(v0, tree.act(Mat2{{P, 0}, {0, P.inverse()}}, v0)) == 2);
        CHECK(tree.distance(v0, tree.act(Mat2{{1, P.inverse()}, {0, 1}}, v0)) == 2);
    }
}

TEST_CASE("valence is q + 1") {
    CHECK(BruhatTitsTree::over_rationals(2).neighbors(TreeVertex{}).size() == 3);
    CHECK(BruhatTitsTree::over_rationals(3).neighbors(TreeVertex{}).size() == 4);
    const BruhatTitsTree quartic(ExtendedValuation::extend(2, NumberField::make({1, 1, 1})));
    const auto nbs = quartic.neighbors(quartic.base_vertex());
    CHECK(nbs.size() == 5);
    for (const auto& w : nbs) CHECK(quartic.distance(quartic.base_vertex(), w) == 1);
}

TEST_CASE("ball sizes") {
    const auto t2 = BruhatTitsTree::over_rationals(2);
    const auto t3 = BruhatTitsTree::over_rationals(3);
    CHECK(t2.ball(t2.base_vertex(), 0) == std::set<TreeVertex>{t2.base_vertex()});
    CHECK(t2.ball(t2.base_vertex(), 2).size() == 10);
    CHECK(t3.ball(t3.base_vertex(), 1).size() == 5);
    CHECK(ball_size(2, 2) == 10);
    CHECK(ball_size(3, 1) == 5);
    CHECK(ball_size(4, 2) == 1 + 5 * 5);
}

TEST_CASE("library ball matches the disc-tree oracle and distances match BFS") {
    for (long p : {2L, 3L}) {
        const long radius = 4;
        const auto tree = BruhatTitsTree::over_rationals(p);
        const auto ball = tree.ball(tree.base_vertex(), radius);
        const auto discs = oracle::disc_ball(p, radius);
        REQUIRE(ball.size() == discs.size());
        std::vector<TreeVertex> verts(ball.begin(), ball.end());
        std::vector<oracle::Disc> as_discs;
        for (const auto& v : verts) {
            REQUIRE(discs.count(as_disc(v)) == 1);
            as_discs.push_back(as_disc(v));
        }
        const auto bfs = oracle::all_pairs_bfs(as_discs, p);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (std::size_t j = i; j < verts.size(); ++j) {
                REQUIRE(tree.distance(verts[i], verts[j]) == bfs[i][j]);
            }
        }
    }
}

TEST_CASE("ball over an unramified quadratic extension is a tree") {
    const BruhatTitsTree tree(ExtendedValuation::extend(2, NumberField::make({1, 1, 1})));
    const auto ball = tree.ball(tree.base_vertex(), 2);
    CHECK(ball.size() == static_cast<std::size_t>(ball_size(4, 2)));
    std::size_t edges = 0;
    for (const auto& v : ball) {
        for (const auto& w : tree.neighbors(v)) {
            if (ball.count(w) != 0) ++edges;
            CHECK(tree.distance(v, w) == 1);
        }
    }
    // each edge counted from both ends; a tree has |V| - 1 edges
    CHECK(edges / 2 == ball.size() - 1);
}

TEST_CASE("tree axioms on rational balls") {
    for (long p : {2L, 3L, 5L}) {
        const auto tree = BruhatTitsTree::over_rationals(p);
        const auto ball = tree.ball(tree.base_vertex(), 3);
        std::size_t edges = 0;
        for (const auto& v : ball) {
            for (const auto& w : tree.neighbors(v)) edges += ball.count(w);
        }
        CHECK(edges / 2 == ball.size() - 1);
    }
}

TEST_CASE("action examples") {
    const auto tree = BruhatTitsTree::over_rationals(5);
    const auto v = tree.canonicalize(Mat2{{25, 7}, {0, 1}});
    CHECK(tree.act(Mat2::identity(), v) == v);
    CHECK(tree.act(Mat2{{3, 7}, {2, 5}}, tree.base_vertex()) == tree.base_vertex());
    CHECK_THROWS_AS(tree.act(Mat2{{1, 1}, {1, 1}}, v), Error);
}

TEST_CASE("action is an isometry") {
    oracle::Sampler rng(32);
    for (long p : {2L, 3L}) {
        const auto tree = BruhatTitsTree::over_rationals(p);
        const auto ball = tree.ball(tree.base_vertex(), 3);
        const std::vector<TreeVertex> verts(ball.begin(), ball.end());
        auto pick = [&] { return verts[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(verts.size()) - 1))]; };
        for (int trial = 0; trial < 200; ++trial) {
            const Mat2 g = rng.sl2(NumberField::rationals());
            const auto u = pick(), v = pick();
            CHECK(tree.distance(tree.act(g, u), tree.act(g, v)) == tree.distance(u, v));
        }
    }
    const BruhatTitsTree quad(ExtendedValuation::extend(3, NumberField::make({1, 0, 1})));
    const auto ball = quad.ball(quad.base_vertex(), 1);
    const std::vector<TreeVertex> verts(ball.begin(), ball.end());
    for (int trial = 0; trial < 100; ++trial) {
        const Mat2 g = rng.sl2(quad.field());
        const auto& u = verts[static_cast<std::size_t>(trial) % verts.size()];
        const auto& v = verts[static_cast<std::size_t>(trial * 7 + 3) % verts.size()];
        CHECK(quad.distance(quad.act(g, u), quad.act(g, v)) == quad.distance(u, v));
    }
}
