#include "dirackit/obstruction.hpp"
#include "dirackit/reduction.hpp"
#include "subspaces.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace dirackit;
using proptest::span_of;

namespace {

Poly x2(std::size_t i) { return Poly::variable(2, i); }
Poly c2(long v) { return Poly::constant(2, Rational(v)); }

Box square() { return Box::symmetric(2, 1); }
DiracSpan symplectic() { return from_2form(KForm::basis(2, {0, 1}, c2(1)), square()); }
DiracSpan singular() { return from_2form(KForm::basis(2, {0, 1}, x2(0)), square()); }
DiracSpan skewed_distribution() { return from_distribution({VectorField({x2(0), c2(1)})}, square()); }
ActionSpec translation() { return ActionSpec(GroupKind::Real, {VectorField::coordinate(2, 1)}); }
QuotientPresentation to_x() { return QuotientPresentation(PolyMap(2, {x2(0)}), translation()); }

LevelSet y_axis(std::size_t res) {
    Poly t = Poly::variable(1, 0);
    return LevelSet{{Rational(0)}, PolyMap(1, {Poly(1), t}), SampleGrid::uniform(Box::symmetric(1, 1), res)};
}

PolyMap collapse() { return PolyMap(1, {}); }
PolyMap origin_inclusion() { return PolyMap(0, {Poly(0)}); }

RationalPoint pt(const Rational& x, const Rational& y) { return {x, y}; }

bool locus_hits_zero(const ReductionReport& r) {
    return std::any_of(r.suspect_locus.begin(), r.suspect_locus.end(), [](const RationalPoint& p) { return p[0] == 0; });
}

bool locus_near_zero(const ReductionReport& r, double width) {
    return std::all_of(r.suspect_locus.begin(), r.suspect_locus.end(),
                       [&](const RationalPoint& p) { return std::abs(p[0].get_d()) <= width; });
}

} // namespace

TEST(QuotientPresentation, InvarianceIsChecked) {
    EXPECT_NO_THROW(to_x());
    EXPECT_THROW(QuotientPresentation(PolyMap(2, {x2(1)}), translation()), PreconditionFailed);
    QuotientPresentation q = to_x();
    EXPECT_EQ(q.differential(pt(0, 0)), (QMatrix{{1, 0}}));
    QuotientPresentation fold = QuotientPresentation::unchecked(PolyMap(2, {x2(0) * x2(0)}));
    EXPECT_THROW(fold.differential(pt(0, 0)), RankDeficientBasis);
}

TEST(ReducePointwise, SwappingFiberCounterexample) {
    EXPECT_TRUE(subspace_equal(reduce_pointwise(singular(), to_x(), pt(1, 0)), span_of(1, {{0, 1}})));
    EXPECT_TRUE(subspace_equal(reduce_pointwise(singular(), to_x(), pt(0, 0)), span_of(1, {{1, 0}})));
    EXPECT_TRUE(subspace_equal(reduce_pointwise(singular(), to_x(), pt(Rational(-1, 3), 1)), span_of(1, {{0, 1}})));
}

TEST(ReducePointwise, DistributionExample) {
    QuotientPresentation q = to_x();
    EXPECT_TRUE(subspace_equal(reduce_pointwise(skewed_distribution(), q, pt(0, 0)), span_of(1, {{0, 1}})));
    EXPECT_TRUE(subspace_equal(reduce_pointwise(skewed_distribution(), q, pt(1, 0)), span_of(1, {{1, 0}})));
    EXPECT_TRUE(subspace_equal(reduce_pointwise(skewed_distribution(), q, pt(Rational(1, 2), 1)), span_of(1, {{1, 0}})));
}

TEST(ReducePointwise, RegularSceneIsConstant) {
    for (const auto& p : {pt(0, 0), pt(1, -1), pt(Rational(2, 7), Rational(1, 3))}) {
        EXPECT_TRUE(subspace_equal(reduce_pointwise(symplectic(), to_x(), p), span_of(1, {{0, 1}})));
    }
}

TEST(SmoothnessProbe, CounterexamplesAreNonSmooth) {
    for (std::size_t res : {8u, 16u, 32u}) {
        SampleGrid grid = SampleGrid::uniform(square(), res);
        ReductionReport a = smoothness_probe(singular(), to_x(), grid);
        EXPECT_EQ(a.verdict, Smoothness::NonSmooth) << res;
        EXPECT_TRUE(locus_hits_zero(a)) << res;
        EXPECT_TRUE(locus_near_zero(a, 2.0 / (2.0 * (res - 1)) + 1e-12)) << res;

        ReductionReport b = smoothness_probe(skewed_distribution(), to_x(), grid);
        EXPECT_EQ(b.verdict, Smoothness::NonSmooth) << res;
        EXPECT_TRUE(locus_hits_zero(b)) << res;
    }
}

TEST(SmoothnessProbe, RegularSceneIsSmooth) {
    ReductionReport r = smoothness_probe(symplectic(), to_x(), SampleGrid::uniform(square(), 8));
    EXPECT_EQ(r.verdict, Smoothness::Smooth);
    EXPECT_TRUE(r.suspect_locus.empty());
    ASSERT_EQ(r.levels.size(), 2u);
    EXPECT_EQ(r.levels[0].max_gap, 0.0);
    EXPECT_EQ(r.levels[0].edge_gaps.size(), r.levels[0].grid.edges().size());
}

TEST(SmoothnessProbe, SmoothlyVaryingFiberDecays) {
    // On (x, z, y): graph of x dx^dz with the orbit direction d/dy in the kernel; the reduced
    // fiber is graph(x dx^dz), which moves with x but continuously.
    Poly x = Poly::variable(3, 0);
    DiracSpan span = from_2form(KForm::basis(3, {0, 1}, x), Box::symmetric(3, 1));
    ActionSpec action(GroupKind::Real, {VectorField::coordinate(3, 2)});
    QuotientPresentation q(PolyMap(3, {x, Poly::variable(3, 1)}), action);
    SampleGrid grid(Box::symmetric(3, 1), {6, 6, 1});
    ReductionReport r = smoothness_probe(span, q, grid);
    EXPECT_EQ(r.verdict, Smoothness::Smooth);
    ASSERT_EQ(r.levels.size(), 2u);
    EXPECT_GT(r.levels[0].max_gap, 0.0);
    EXPECT_LE(r.levels[1].max_gap, r.levels[0].max_gap / ProbeOptions{}.decay_ratio);
}

TEST(RestrictToLevel, Examples) {
    Poly t = Poly::variable(1, 0);
    PolyMap axis(1, {Poly(1), t});
    EXPECT_TRUE(subspace_equal(restrict_to_level(symplectic(), axis, RationalPoint{Rational(1, 3)}), span_of(1, {{1, 0}})));

    RationalPoint p = pt(Rational(1, 2), Rational(-1, 5));
    EXPECT_TRUE(subspace_equal(restrict_to_level(singular(), PolyMap::identity(2), p), evaluate(singular(), p)));

    DiracSpan zero = from_2form(KForm::zero(2, 2), square());
    PolyMap curve(1, {t * t * Rational(1, 2), t});
    EXPECT_TRUE(subspace_equal(restrict_to_level(zero, curve, RationalPoint{Rational(1, 2)}), LinearDirac::tangent_block(1)));
}

TEST(HamiltonianQuotientFiber, RegularSceneCollapsesToPoint) {
    LinearDirac l = hamiltonian_quotient_fiber(symplectic(), translation(), MomentMap{{-x2(0)}}, y_axis(5), collapse(),
                                               RationalPoint{Rational(0)});
    EXPECT_EQ(l.dim(), 0u);
    EXPECT_EQ(l.rank(), 0u);
}

TEST(HamiltonianQuotientFiber, DegenerateDirectionSurvives) {
    // R^3 with omega = dx^dy, xi = d/dy, mu = -x; the level {x = 0} reduces to the z-line.
    Poly x = Poly::variable(3, 0);
    DiracSpan span = from_2form(KForm::basis(3, {0, 1}, Poly::constant(3, 1)), Box::symmetric(3, 1));
    ActionSpec action(GroupKind::Real, {VectorField::coordinate(3, 1)});
    Poly s = Poly::variable(2, 0), u = Poly::variable(2, 1);
    LevelSet level{{Rational(0)}, PolyMap(2, {Poly(2), s, u}), SampleGrid::uniform(Box::symmetric(2, 1), 3)};
    LinearDirac l = hamiltonian_quotient_fiber(span, action, MomentMap{{-x}}, level, PolyMap(2, {u}),
                                               RationalPoint{Rational(0), Rational(1, 2)});
    EXPECT_TRUE(subspace_equal(l, LinearDirac::tangent_block(1)));
}

TEST(HamiltonianQuotientFiber, PreconditionsAreEnforced) {
    Poly half_sq = Rational(1, 2) * x2(0) * x2(0);
    EXPECT_THROW(hamiltonian_quotient_fiber(singular(), translation(), MomentMap{{-half_sq}}, y_axis(5), collapse(),
                                            RationalPoint{Rational(0)}),
                 PreconditionFailed);
    // A level quotient that is not invariant along the orbit.
    Poly t = Poly::variable(1, 0);
    EXPECT_THROW(hamiltonian_quotient_fiber(symplectic(), translation(), MomentMap{{-x2(0)}}, y_axis(5), PolyMap(1, {t}),
                                            RationalPoint{Rational(0)}),
                 PreconditionFailed);
}

TEST(HamiltonianQuotientFiber, HopfLocalModelGivesScaledAreaForm) {
    Poly r = Poly::variable(1, 0);
    Poly f = r * r + Poly::constant(1, 1);
    HamiltonianScene scene = yang_mills_scene(f, Rational(1), 3);
    RationalPoint param{Rational(1, 2), Rational(-1, 3), Rational(0), Rational(1, 2)};
    LinearDirac l = hamiltonian_quotient_fiber(scene.span, scene.action, scene.moment, scene.level,
                                               scene.level_quotient, param);
    const Rational fr(5, 4);
    // Basis (u, v, r): (d/du, f dv), (d/dv, -f du), (0, dr).
    LinearDirac expected = span_of(3, {{1, 0, 0, 0, fr, 0}, {0, 1, 0, -fr, 0, 0}, {0, 0, 0, 0, 0, 1}});
    EXPECT_TRUE(subspace_equal(l, expected));
}

TEST(VerifyDiamond, RegularSceneHoldsEverywhere) {
    DiamondReport r = verify_diamond(symplectic(), translation(), MomentMap{{-x2(0)}}, y_axis(32), to_x(), collapse(),
                                     origin_inclusion());
    EXPECT_TRUE(r.holds());
    EXPECT_EQ(r.nodes_checked, 32u);
}

TEST(VerifyDiamond, SingularSceneIsRefused) {
    Poly half_sq = Rational(1, 2) * x2(0) * x2(0);
    EXPECT_THROW(verify_diamond(singular(), translation(), MomentMap{{-half_sq}}, y_axis(8), to_x(), collapse(),
                                origin_inclusion()),
                 PreconditionFailed);
}

TEST(VerifyDiamond, NonCommutingSquareIsRefused) {
    PolyMap wrong_inclusion(0, {Poly::constant(0, 1)});
    EXPECT_THROW(verify_diamond(symplectic(), translation(), MomentMap{{-x2(0)}}, y_axis(8), to_x(), collapse(),
                                wrong_inclusion),
                 PreconditionFailed);
    // Zero structure: j vanishes, so regularity fails.
    DiracSpan zero = from_2form(KForm::zero(2, 2), square());
    EXPECT_THROW(verify_diamond(zero, translation(), MomentMap{{c2(0)}}, y_axis(8), to_x(), collapse(), origin_inclusion()),
                 Error);
}

TEST(VerifyDiamond, HopfLocalModel) {
    Poly r = Poly::variable(1, 0);
    HamiltonianScene scene = yang_mills_scene(r * r + Poly::constant(1, 1), Rational(1), 3);
    DiamondReport rep = verify_diamond(scene.span, scene.action, scene.moment, scene.level, scene.quotient,
                                       scene.level_quotient, scene.inclusion);
    EXPECT_TRUE(rep.holds());
    EXPECT_EQ(rep.nodes_checked, 81u);
}
