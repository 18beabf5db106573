#include "dirackit/errors.hpp"
#include "dirackit/lindirac.hpp"
#include "random_inputs.hpp"
#include "subspaces.hpp"

#include <gtest/gtest.h>

using namespace dirackit;
using proptest::span_of;

namespace {

GenTangentVector gtv(std::vector<Rational> x, std::vector<Rational> a) { return {std::move(x), std::move(a)}; }

QMatrix symplectic() { return QMatrix{{0, 1}, {-1, 0}}; }

} // namespace

TEST(Pairings, PlusExamples) {
    EXPECT_EQ(pairing_plus(gtv({1, 0}, {0, 1}), gtv({0, 1}, {1, 0})), 1);
    EXPECT_EQ(pairing_plus(gtv({1, 0}, {0, 0}), gtv({0, 1}, {0, 0})), 0);
    EXPECT_EQ(pairing_plus(gtv({1, 0}, {1, 0}), gtv({1, 0}, {1, 0})), 1);
}

TEST(Pairings, MinusExamples) {
    EXPECT_EQ(pairing_minus(gtv({1, 0}, {0, 1}), gtv({0, 1}, {-1, 0})), 1);
    GenTangentVector u = gtv({Rational(2), Rational(-1, 3)}, {Rational(5), Rational(7)});
    EXPECT_EQ(pairing_minus(u, u), 0);
    EXPECT_EQ(pairing_minus(gtv({1, 0}, {0, 0}), gtv({0, 0}, {1, 0})), Rational(-1, 2));
}

TEST(MaximalIsotropic, Examples) {
    EXPECT_TRUE(is_maximal_isotropic(graph_of_2form(symplectic())));
    EXPECT_FALSE(is_maximal_isotropic(span_of(1, {{1, 1}})));
    EXPECT_TRUE(is_maximal_isotropic(LinearDirac::tangent_block(2)));
    EXPECT_TRUE(is_maximal_isotropic(LinearDirac::cotangent_block(3)));
}

TEST(MaximalIsotropic, RankDeficientBasisIsAnError) {
    QMatrix dependent{{1, 2}, {0, 0}, {0, 0}, {0, 0}};
    EXPECT_THROW(is_maximal_isotropic(2, dependent), RankDeficientBasis);
    EXPECT_THROW(LinearDirac(2, dependent), RankDeficientBasis);
}

TEST(Graphs, TwoForm) {
    EXPECT_TRUE(subspace_equal(graph_of_2form(symplectic()), span_of(2, {{1, 0, 0, 1}, {0, 1, -1, 0}})));
    EXPECT_TRUE(subspace_equal(graph_of_2form(QMatrix(2, 2)), LinearDirac::tangent_block(2)));
    EXPECT_THROW(graph_of_2form(QMatrix{{0, 1}, {1, 0}}), DimensionMismatch);
}

TEST(Graphs, Bivector) {
    // (pi(alpha, .), alpha) for alpha = dx, dy.
    LinearDirac g = graph_of_bivector(symplectic());
    EXPECT_TRUE(subspace_equal(g, span_of(2, {{0, 1, 1, 0}, {-1, 0, 0, 1}})));
    EXPECT_TRUE(is_maximal_isotropic(g));
}

TEST(Graphs, Distribution) {
    QMatrix dx(2, 1);
    dx(0, 0) = 1;
    EXPECT_TRUE(subspace_equal(graph_of_distribution(dx), span_of(2, {{1, 0, 0, 0}, {0, 0, 0, 1}})));

    QMatrix d(2, 1);
    d(0, 0) = 1;
    d(1, 0) = 1;
    LinearDirac g = graph_of_distribution(d);
    EXPECT_TRUE(subspace_equal(g, span_of(2, {{1, 1, 0, 0}, {0, 0, 1, -1}})));

    QMatrix good(2, 1);
    good(0, 0) = 1;
    good(1, 0) = -1;
    EXPECT_TRUE(subspace_equal(graph_of_distribution(d, good), g));
    QMatrix bad(2, 1);
    bad(0, 0) = 1;
    EXPECT_THROW(graph_of_distribution(d, bad), PreconditionFailed);
}

TEST(Pushforward, CounterexampleFibers) {
    QMatrix proj{{1, 0}};
    // omega = x dx^dy sampled at x = 1 and x = 0.
    LinearDirac at_one = pushforward(graph_of_2form(symplectic()), proj);
    EXPECT_TRUE(subspace_equal(at_one, span_of(1, {{0, 1}})));
    LinearDirac at_zero = pushforward(graph_of_2form(QMatrix(2, 2)), proj);
    EXPECT_TRUE(subspace_equal(at_zero, span_of(1, {{1, 0}})));
}

TEST(Pushforward, IdentityIsNeutral) {
    LinearDirac g = graph_of_2form(symplectic());
    EXPECT_TRUE(subspace_equal(pushforward(g, QMatrix::identity(2)), g));
}

TEST(Pullback, Examples) {
    QMatrix axis{{0}, {1}};
    EXPECT_TRUE(subspace_equal(pullback(graph_of_2form(symplectic()), axis), span_of(1, {{1, 0}})));
    LinearDirac g = graph_of_2form(symplectic());
    EXPECT_TRUE(subspace_equal(pullback(g, QMatrix::identity(2)), g));
    QMatrix t{{1, 2}, {0, 1}, {3, -1}};
    EXPECT_TRUE(subspace_equal(pullback(LinearDirac::tangent_block(3), t), LinearDirac::tangent_block(2)));
}

TEST(BTransform, Examples) {
    QMatrix b = symplectic();
    EXPECT_TRUE(subspace_equal(b_transform(LinearDirac::tangent_block(2), b), graph_of_2form(b)));
    LinearDirac g = graph_of_2form(b);
    EXPECT_TRUE(subspace_equal(b_transform(g, QMatrix(2, 2)), g));
    QMatrix w{{0, 2, -1}, {-2, 0, 5}, {1, -5, 0}};
    QMatrix bb{{0, Rational(1, 2), 3}, {Rational(-1, 2), 0, 1}, {-3, -1, 0}};
    EXPECT_TRUE(subspace_equal(b_transform(graph_of_2form(w), bb), graph_of_2form(w + bb)));
}

TEST(SubspaceEqual, AndGap) {
    LinearDirac g = graph_of_2form(symplectic());
    EXPECT_TRUE(subspace_equal(g, g));
    EXPECT_NEAR(grassmann_gap(g, g), 0.0, 1e-12);
    LinearDirac tx = span_of(1, {{1, 0}});
    LinearDirac cx = span_of(1, {{0, 1}});
    EXPECT_FALSE(subspace_equal(tx, cx));
    EXPECT_NEAR(grassmann_gap(tx, cx), 1.0, 1e-12);
    // Lines at 45 degrees: gap sin(pi/4).
    EXPECT_NEAR(grassmann_gap(tx, span_of(1, {{1, 1}})), std::sqrt(0.5), 1e-12);
}

TEST(LinearProperties, RandomGraphsAreDirac) {
    proptest::RandomInputs rnd;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = rnd.index(1, 4);
        QMatrix w(n, n), pi(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                w(i, j) = rnd.rational();
                w(j, i) = -w(i, j);
                pi(i, j) = rnd.rational();
                pi(j, i) = -pi(i, j);
            }
        }
        LinearDirac gw = graph_of_2form(w);
        ASSERT_TRUE(is_maximal_isotropic(gw));
        ASSERT_TRUE(is_maximal_isotropic(graph_of_bivector(pi)));
        const std::size_t m = rnd.index(1, 4);
        QMatrix t(m, n);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) t(i, j) = rnd.rational();
        }
        ASSERT_TRUE(is_maximal_isotropic(pushforward(gw, t)));
        ASSERT_TRUE(is_maximal_isotropic(pullback(graph_of_2form(QMatrix(m, m)), t)));
        // Pullback of a 2-form graph is the graph of the pulled-back form.
        QMatrix wm(m, m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                wm(i, j) = rnd.rational();
                wm(j, i) = -wm(i, j);
            }
        }
        ASSERT_TRUE(subspace_equal(pullback(graph_of_2form(wm), t), graph_of_2form(t.transpose() * wm * t)));
    }
}
