#include "dirackit/errors.hpp"
#include "dirackit/forms.hpp"
#include "random_inputs.hpp"

#include <gtest/gtest.h>

using namespace dirackit;

namespace {

Poly x2(std::size_t i) { return Poly::variable(2, i); }
Poly c2(long v) { return Poly::constant(2, Rational(v)); }
Poly x3(std::size_t i) { return Poly::variable(3, i); }

VectorField field(std::vector<Poly> comps) { return VectorField(std::move(comps)); }

} // namespace

TEST(Poly, CanonicalFormDropsZeroTerms) {
    Poly p = x2(0) * x2(1) - x2(1) * x2(0);
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.term_count(), 0u);
    Poly q(2);
    q.add_term({1, 0}, Rational(2));
    q.add_term({1, 0}, Rational(-2));
    EXPECT_TRUE(q.is_zero());
}

TEST(Poly, ArithmeticIsExact) {
    Poly half = Poly::constant(1, Rational(1, 2));
    Poly third = Poly::constant(1, Rational(1, 3));
    EXPECT_EQ(half + third, Poly::constant(1, Rational(5, 6)));
    Poly t = Poly::variable(1, 0);
    EXPECT_EQ(pow(t + Poly::constant(1, 1), 2), t * t + Rational(2) * t + Poly::constant(1, 1));
}

TEST(Poly, DerivativeEvaluateCompose) {
    Poly p = x2(0) * x2(0) * x2(1) + Rational(3) * x2(1);
    EXPECT_EQ(p.derivative(0), Rational(2) * x2(0) * x2(1));
    RationalPoint pt{Rational(1, 2), Rational(2)};
    EXPECT_EQ(p.evaluate(pt), Rational(1, 2) + Rational(6));
    std::vector<Poly> subs{Poly::variable(1, 0), Poly::constant(1, 2)};
    EXPECT_EQ(p.compose(subs), Rational(2) * pow(Poly::variable(1, 0), 2) + Poly::constant(1, 6));
}

TEST(Poly, DegreesAndPrinting) {
    Poly p = x2(0) * x2(0) * x2(1) - x2(1);
    EXPECT_EQ(p.total_degree(), 3);
    EXPECT_EQ(p.degree_in(0), 2);
    EXPECT_EQ(Poly(2).total_degree(), -1);
    EXPECT_EQ(p.to_string({"x", "y"}), "x^2*y - y");
}

TEST(Poly, MixedRingsAreRejected) {
    EXPECT_THROW(x2(0) + Poly::variable(3, 0), DimensionMismatch);
}

TEST(ExteriorDerivative, Examples) {
    KForm w = KForm::basis(2, {0, 1}, x2(0));
    EXPECT_TRUE(exterior_d(w).is_zero());

    KForm v = KForm::basis(3, {0, 1}, x3(2));
    EXPECT_EQ(exterior_d(v), KForm::basis(3, {0, 1, 2}, Poly::constant(3, 1)));

    KForm f = KForm::function(Rational(1, 2) * x2(0) * x2(0));
    EXPECT_EQ(exterior_d(f), KForm::basis(2, {0}, x2(0)));
}

TEST(ExteriorDerivative, TopDegreeFormsVanish) {
    KForm top = KForm::basis(2, {0, 1}, x2(0) * x2(1));
    KForm d = exterior_d(top);
    EXPECT_EQ(d.degree(), 3u);
    EXPECT_TRUE(d.is_zero());
}

TEST(Wedge, SignAndRepeatedIndices) {
    KForm dx = KForm::basis(2, {0}, c2(1));
    KForm dy = KForm::basis(2, {1}, c2(1));
    EXPECT_EQ(wedge(dx, dy), KForm::basis(2, {0, 1}, c2(1)));
    EXPECT_EQ(wedge(dy, dx), KForm::basis(2, {0, 1}, c2(-1)));
    EXPECT_TRUE(wedge(dx, dx).is_zero());
    EXPECT_EQ(KForm::basis(2, {1, 0}, c2(1)), KForm::basis(2, {0, 1}, c2(-1)));
}

TEST(InteriorProduct, SignConvention) {
    KForm area = KForm::basis(2, {0, 1}, c2(1));
    VectorField dx = VectorField::coordinate(2, 0);
    VectorField dy = VectorField::coordinate(2, 1);
    EXPECT_EQ(interior_product(dy, area), KForm::basis(2, {0}, c2(-1)));
    EXPECT_EQ(interior_product(dx, area), KForm::basis(2, {1}, c2(1)));
    EXPECT_EQ(interior_product(dx, KForm::basis(2, {0}, c2(1))), KForm::function(c2(1)));
    EXPECT_THROW(interior_product(dx, KForm::function(c2(1))), DimensionMismatch);
}

TEST(LieDerivative, Examples) {
    VectorField dx = VectorField::coordinate(2, 0);
    VectorField dy = VectorField::coordinate(2, 1);
    EXPECT_EQ(lie_derivative(dx, KForm::basis(2, {1}, x2(0))), KForm::basis(2, {1}, c2(1)));
    EXPECT_TRUE(lie_derivative(dy, KForm::basis(2, {0}, x2(0))).is_zero());
    VectorField euler = field({x2(0), Poly(2)});
    EXPECT_EQ(lie_derivative(euler, KForm::basis(2, {0}, c2(1))), KForm::basis(2, {0}, c2(1)));
}

TEST(VectorFieldBracket, Examples) {
    VectorField dx = VectorField::coordinate(2, 0);
    VectorField dy = VectorField::coordinate(2, 1);
    EXPECT_TRUE(vf_bracket(dx, dy).is_zero());
    VectorField d_gen = field({x2(0), c2(1)});
    EXPECT_EQ(vf_bracket(d_gen, dx), -dx);
    EXPECT_EQ(vf_bracket(dx, field({Poly(2), x2(0)})), dy);
}

TEST(Pullback, Examples) {
    PolyMap proj(2, {x2(0)});
    EXPECT_EQ(pullback(proj, KForm::basis(1, {0}, Poly::constant(1, 1))), KForm::basis(2, {0}, c2(1)));

    Poly t = Poly::variable(1, 0);
    PolyMap axis(1, {Poly(1), t});
    EXPECT_TRUE(pullback(axis, KForm::basis(2, {0, 1}, c2(1))).is_zero());

    PolyMap curve(1, {t * t, t});
    EXPECT_EQ(pullback(curve, KForm::basis(2, {1}, x2(0))), KForm::basis(1, {0}, t * t));
}

TEST(Bivector, SharpAndAntisymmetry) {
    Bivector pi(2);
    pi.set(0, 1, c2(1));
    EXPECT_EQ(pi.coefficient(1, 0), c2(-1));
    // pi(dx, .) = dy-direction.
    EXPECT_EQ(pi.sharp(KForm::basis(2, {0}, c2(1))), VectorField::coordinate(2, 1));
    EXPECT_EQ(pi.sharp(KForm::basis(2, {1}, c2(1))), -VectorField::coordinate(2, 0));
}

TEST(PolyMap, JacobianAndComposition) {
    PolyMap phi(2, {x2(0) * x2(1), x2(0) + x2(1)});
    auto jac = phi.jacobian();
    EXPECT_EQ(jac[0][0], x2(1));
    EXPECT_EQ(jac[1][1], c2(1));
    Poly t = Poly::variable(1, 0);
    PolyMap curve(1, {t, t * t});
    PolyMap composed = phi.compose(curve);
    EXPECT_EQ(composed[0], t * t * t);
}

// Randomized identities on small inputs; the acceptance suite runs the large sweep.
class CalculusProperties : public ::testing::Test {
protected:
    proptest::RandomInputs rnd{proptest::test_seed()};
};

TEST_F(CalculusProperties, DSquaredVanishes) {
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = rnd.index(1, 4);
        const std::size_t k = rnd.index(0, n);
        KForm w = rnd.form(n, k, 3);
        EXPECT_TRUE(exterior_d(exterior_d(w)).is_zero());
    }
}

TEST_F(CalculusProperties, CartanFormula) {
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = rnd.index(1, 4);
        const std::size_t k = rnd.index(1, n);
        VectorField x = rnd.vector_field(n, 2);
        KForm w = rnd.form(n, k, 2);
        EXPECT_EQ(lie_derivative(x, w), exterior_d(interior_product(x, w)) + interior_product(x, exterior_d(w)));
    }
}

TEST_F(CalculusProperties, JacobiAndLieHomomorphism) {
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = rnd.index(1, 3);
        VectorField x = rnd.vector_field(n, 2), y = rnd.vector_field(n, 2), z = rnd.vector_field(n, 2);
        VectorField jac = vf_bracket(x, vf_bracket(y, z)) + vf_bracket(y, vf_bracket(z, x)) + vf_bracket(z, vf_bracket(x, y));
        EXPECT_TRUE(jac.is_zero());
        KForm w = rnd.form(n, rnd.index(0, n), 2);
        EXPECT_EQ(lie_derivative(x, lie_derivative(y, w)) - lie_derivative(y, lie_derivative(x, w)),
                  lie_derivative(vf_bracket(x, y), w));
    }
}

TEST_F(CalculusProperties, PullbackCommutesWithWedgeAndD) {
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = rnd.index(1, 3), n = rnd.index(1, 3);
        PolyMap phi = rnd.map(m, n, 2);
        KForm a = rnd.form(n, rnd.index(0, n), 2);
        KForm b = rnd.form(n, rnd.index(0, n), 2);
        EXPECT_EQ(pullback(phi, wedge(a, b)), wedge(pullback(phi, a), pullback(phi, b)));
        EXPECT_EQ(pullback(phi, exterior_d(a)), exterior_d(pullback(phi, a)));
    }
}
