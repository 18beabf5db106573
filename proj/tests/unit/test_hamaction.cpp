#include "dirackit/hamaction.hpp"
#include "dirackit/obstruction.hpp"

#include <gtest/gtest.h>

using namespace dirackit;

namespace {

Poly x2(std::size_t i) { return Poly::variable(2, i); }
Poly c2(long v) { return Poly::constant(2, Rational(v)); }

Box square() { return Box::symmetric(2, 1); }
DiracSpan symplectic() { return from_2form(KForm::basis(2, {0, 1}, c2(1)), square()); }
DiracSpan singular() { return from_2form(KForm::basis(2, {0, 1}, x2(0)), square()); }
ActionSpec translation() { return ActionSpec(GroupKind::Real, {VectorField::coordinate(2, 1)}); }

LevelSet y_axis(const Poly& c_free_mu_unused = Poly(2), std::size_t res = 9) {
    (void)c_free_mu_unused;
    Poly t = Poly::variable(1, 0);
    return LevelSet{{Rational(0)}, PolyMap(1, {Poly(1), t}), SampleGrid::uniform(Box::symmetric(1, 1), res)};
}

RationalPoint pt(long x, long y) { return {Rational(x), Rational(y)}; }

} // namespace

TEST(ActionSpec, Validation) {
    EXPECT_THROW(ActionSpec(GroupKind::Real, {}), DimensionMismatch);
    EXPECT_THROW(ActionSpec(GroupKind::Real, {VectorField::coordinate(2, 0), VectorField({c2(0), x2(0)})}),
                 PreconditionFailed);
    EXPECT_THROW(ActionSpec(GroupKind::Real, {VectorField::coordinate(2, 0), VectorField::coordinate(3, 0)}),
                 DimensionMismatch);
    EXPECT_THROW(ActionSpec(GroupKind::Torus, {VectorField::coordinate(2, 0)}), PreconditionFailed);
    ActionSpec torus(GroupKind::Torus, {VectorField({-x2(1), x2(0)})}, PeriodicityWitness{"rotation", 6.283185307179586});
    EXPECT_TRUE(torus.is_torus());
    EXPECT_EQ(torus.k(), 1u);
    EXPECT_EQ(torus.dim(), 2u);
}

TEST(JMap, Examples) {
    QMatrix j = j_map(symplectic(), translation(), pt(1, 1));
    EXPECT_EQ(j, (QMatrix{{1, 0}}));
    EXPECT_EQ(j_map(singular(), translation(), pt(0, 0)), (QMatrix{{0, 0}}));
    ActionSpec zero(GroupKind::Real, {VectorField(2)});
    EXPECT_TRUE(j_map(symplectic(), zero, pt(1, 0)).is_zero());
}

TEST(DiracAction, Examples) {
    EXPECT_TRUE(is_dirac_action(singular(), translation()).holds);
    DiracSpan skew = from_distribution({VectorField({x2(0), c2(1)})}, square());
    EXPECT_TRUE(is_dirac_action(skew, translation()).holds);
    SymbolicVerdict v = is_dirac_action(symplectic(), ActionSpec(GroupKind::Real, {VectorField({x2(0), c2(0)})}));
    EXPECT_FALSE(v.holds);
    EXPECT_TRUE(v.witness.has_value());
    EXPECT_TRUE(v.polynomial.has_value());
}

TEST(MomentMap, ExactlyOneSignPasses) {
    const bool plus = check_moment(symplectic(), translation(), MomentMap{{x2(0)}}).holds();
    const bool minus = check_moment(symplectic(), translation(), MomentMap{{-x2(0)}}).holds();
    EXPECT_NE(plus, minus);
    EXPECT_TRUE(minus);

    Poly half_sq = Rational(1, 2) * x2(0) * x2(0);
    const bool sq_plus = check_moment(singular(), translation(), MomentMap{{half_sq}}).holds();
    const bool sq_minus = check_moment(singular(), translation(), MomentMap{{-half_sq}}).holds();
    EXPECT_NE(sq_plus, sq_minus);
    EXPECT_TRUE(sq_minus);

    ActionSpec zero(GroupKind::Real, {VectorField(2)});
    EXPECT_TRUE(check_moment(symplectic(), zero, MomentMap{{c2(0)}}).holds());
}

TEST(MomentMap, NonInvariantMomentFailsInvariance) {
    // mu = -x + y satisfies neither the condition nor invariance under d/dy.
    MomentReport r = check_moment(symplectic(), translation(), MomentMap{{-x2(0) + x2(1)}});
    EXPECT_FALSE(r.invariance.holds);
    EXPECT_FALSE(r.holds());
}

TEST(MomentMap, IdentityAgreesWithCondition) {
    EXPECT_TRUE(moment_identity(symplectic(), translation(), MomentMap{{-x2(0)}}).holds);
    EXPECT_FALSE(moment_identity(symplectic(), translation(), MomentMap{{x2(0)}}).holds);
}

TEST(ActionRegularity, Examples) {
    SampleGrid grid = SampleGrid::uniform(square(), 8);
    ActionRegularityReport reg = is_regular_action(symplectic(), translation(), grid);
    EXPECT_EQ(reg.verdict, ActionRegularity::RegularEverywhere);
    EXPECT_TRUE(reg.exact);

    ActionRegularityReport sing = is_regular_action(singular(), translation(), grid);
    EXPECT_EQ(sing.verdict, ActionRegularity::NotRegular);
    ASSERT_FALSE(sing.rank_drop_locus.empty());
    for (const auto& p : sing.rank_drop_locus) EXPECT_EQ(p[0], 0);

    // Odd resolution puts x = 0 on the grid itself.
    ActionRegularityReport odd = is_regular_action(singular(), translation(), SampleGrid::uniform(square(), 9));
    EXPECT_EQ(odd.verdict, ActionRegularity::NotRegular);
    for (const auto& p : odd.rank_drop_locus) EXPECT_EQ(p[0], 0);

    ActionSpec zero(GroupKind::Real, {VectorField(2)});
    ActionRegularityReport none = is_regular_action(symplectic(), zero, grid);
    EXPECT_EQ(none.verdict, ActionRegularity::NowhereRegular);
    EXPECT_FALSE(none.regular());
}

TEST(ActionRegularity, RegularOnGridAwayFromZeros) {
    // Minor 1 + x^2 has no real zero but is not constant.
    DiracSpan span = from_2form(KForm::basis(2, {0, 1}, c2(1) + x2(0) * x2(0)), square());
    ActionRegularityReport r = is_regular_action(span, translation(), SampleGrid::uniform(square(), 6));
    EXPECT_EQ(r.verdict, ActionRegularity::RegularOnGrid);
    EXPECT_FALSE(r.exact);
}

TEST(LevelRegularity, Examples) {
    LevelRegularityReport reg = is_regular_at(symplectic(), translation(), MomentMap{{-x2(0)}}, {Rational(0)}, y_axis());
    EXPECT_EQ(reg.verdict, LevelRegularity::Regular);
    EXPECT_EQ(reg.nodes_checked, 9u);

    Poly half_sq = Rational(1, 2) * x2(0) * x2(0);
    LevelRegularityReport sing =
        is_regular_at(singular(), translation(), MomentMap{{-half_sq}}, {Rational(0)}, y_axis());
    EXPECT_EQ(sing.verdict, LevelRegularity::NotRegular);
    EXPECT_EQ(sing.failing_params.size(), 9u);

    LevelRegularityReport empty =
        is_regular_at(singular(), translation(), MomentMap{{-half_sq}}, {Rational(1)}, std::nullopt);
    EXPECT_EQ(empty.verdict, LevelRegularity::EmptyLevelSet);
}

TEST(LevelRegularity, ErrorPaths) {
    Poly t = Poly::variable(1, 0);
    LevelSet shifted{{Rational(0)}, PolyMap(1, {Poly::constant(1, 1), t}), SampleGrid::uniform(Box::symmetric(1, 1), 5)};
    EXPECT_THROW(is_regular_at(symplectic(), translation(), MomentMap{{-x2(0)}}, {Rational(0)}, shifted),
                 LevelSetMismatch);
    // A non-empty level set without a parametrization cannot be decided.
    EXPECT_THROW(is_regular_at(symplectic(), translation(), MomentMap{{-x2(0)}}, {Rational(0)}, std::nullopt),
                 PreconditionFailed);
    LevelSet folded{{Rational(0)}, PolyMap(1, {Poly(1), t * t}), SampleGrid::uniform(Box::symmetric(1, 1), 5)};
    EXPECT_THROW(is_regular_at(symplectic(), translation(), MomentMap{{-x2(0)}}, {Rational(0)}, folded),
                 PreconditionFailed);
}

TEST(HopfScene, MomentSignAndRegularity) {
    Poly f = Poly::variable(1, 0) * Poly::variable(1, 0) + Poly::constant(1, 1);
    HamiltonianScene scene = yang_mills_scene(f, Rational(1), 3);
    EXPECT_TRUE(is_dirac_action(scene.span, scene.action).holds);
    EXPECT_TRUE(check_moment(scene.span, scene.action, scene.moment).holds());
    MomentMap flipped{{-scene.moment.components[0]}};
    EXPECT_FALSE(check_moment(scene.span, scene.action, flipped).holds());
    EXPECT_TRUE(
        is_regular_at(scene.span, scene.action, scene.moment, scene.level.c, scene.level).regular());
}
