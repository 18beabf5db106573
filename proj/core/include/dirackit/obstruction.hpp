#pragma once

#include "dirackit/reduction.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dirackit {

using Vec3 = std::array<double, 3>;

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_legendre(std::size_t order);

/// Band of colatitudes [theta_lo, theta_hi] on the unit sphere; the cap is [0, theta0].
struct SphereRegion {
    double theta_lo = 0.0;
    double theta_hi = 3.141592653589793;

    static SphereRegion full();
    static SphereRegion cap(double theta0);
    static SphereRegion cap_complement(double theta0);
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// The unit sphere with two stereographic charts and the curvature form of the Hopf connection,
/// omega = (scale / 2) * (round area form), so that the full-sphere integral is 2 pi scale.
///
/// Chart S projects from the south pole, (a, b) = (x, y) / (1 + z), and is positively oriented;
/// chart N projects from the north pole, (a, b) = (x, y) / (1 - z), and is negatively oriented.
/// Their weights form a smooth partition of unity in z with transition band |z| <= 1/2.
class SphereAtlas {
public:
    static constexpr std::size_t min_order = 4;

    explicit SphereAtlas(double curvature_scale = 1.0, std::size_t quadrature_order = 12);

    [[nodiscard]] double curvature_scale() const { return scale_; }
    [[nodiscard]] std::size_t quadrature_order() const { return order_; }

    enum class Chart { S, N };

    /// Weight of a chart at a point of the sphere.
    [[nodiscard]] double weight(Chart chart, const Vec3& p) const;
    /// Chart coordinates of a point.
    [[nodiscard]] std::array<double, 2> to_chart(Chart chart, const Vec3& p) const;
    [[nodiscard]] Vec3 from_chart(Chart chart, double a, double b) const;
    /// Coefficient c of omega = c da ^ db in a chart.
    [[nodiscard]] double density(Chart chart, double a, double b) const;
    /// omega(u, v) at p for ambient tangent vectors u, v, computed in the chart of larger weight.
    [[nodiscard]] double evaluate_form(const Vec3& p, const Vec3& u, const Vec3& v) const;

    /// Largest |w_S + w_N - 1| and largest chart-transition defect of omega over quadrature nodes.
    [[nodiscard]] double partition_defect() const;
    [[nodiscard]] double overlap_defect() const;

private:
    double scale_;
    std::size_t order_;
};

/// Integral of omega over a region with composite polar Gauss-Legendre in each chart, at three
/// panel refinements. Throws QuadratureError when the last two levels differ by more than tol.
QuadratureResult curvature_integral(const SphereAtlas& atlas, const SphereRegion& region, double tol = 1e-10);

/// scale * pi * (1 - cos theta0).
double cap_integral_closed_form(double curvature_scale, double theta0);

/// Caps Gamma_t of colatitude theta0 inside the leaf S_{r(t)}; r is a polynomial in t.
struct DiskFamily {
    double theta0 = 1.5707963267948966;
    Poly r_of_t; // one variable

    static DiskFamily linear(double theta0, const Rational& r0, const Rational& velocity);
    /// Gamma_t(1, 0): the boundary point at longitude 0, as (x, y, z, r).
    [[nodiscard]] std::array<double, 4> base_point(double t) const;
};

struct VariationOptions {
    double step = 1e-2;
};

/// Richardson-extrapolated central difference of t -> f(r(t)) * (integral of omega over the cap).
/// Throws PreconditionFailed when the step is outside [1e-6, 1e-1].
double area_variation_numeric(const SphereAtlas& atlas, const Poly& f, const DiskFamily& family,
                              const VariationOptions& options = {});

/// f'(r(0)) * r'(0) * scale * pi * (1 - cos theta0).
double area_variation_analytic(const SphereAtlas& atlas, const Poly& f, const DiskFamily& family);

/// A homotopy gamma(t, e) on the unit sphere from a loop (e = 0) to a constant (e = 1).
struct SphereHomotopy {
    std::string name;
    std::function<Vec3(double, double)> point;
    std::function<Vec3(double, double)> d_t;
    std::function<Vec3(double, double)> d_e;

    /// The orbit loop at colatitude theta0 shrunk along meridians to the north pole.
    static SphereHomotopy latitude_shrink(double theta0);
    /// Same loop traversed backwards.
    static SphereHomotopy reversed(double theta0);
    /// Constant map to a point.
    static SphereHomotopy constant(const Vec3& p);
};

/// Integral over [0,1]^2 of omega(d_t gamma, d_e gamma). Throws PreconditionFailed when the
/// loop is not closed or the end is not constant, QuadratureError on non-convergence.
QuadratureResult homotopy_double_integral(const SphereAtlas& atlas, const SphereHomotopy& homotopy,
                                          double tol = 1e-10);

/// A real root of f' isolated in [lo, hi]; `exact` is set when the root is rational and was hit.
struct IsolatedRoot {
    Rational lo;
    Rational hi;
    std::optional<Rational> exact;
    double approx = 0.0;
};

/// Distinct real roots of p in [a, b] by Sturm sequences, isolated to width below `width`.
std::vector<IsolatedRoot> isolate_real_roots(const Poly& p, const Rational& a, const Rational& b,
                                             const Rational& width = Rational(1, 1000000000));

enum class MonodromyVerdict { Integrable, NonIntegrable, TriviallyIntegrable };

const char* to_string(MonodromyVerdict v);

struct MonodromyReport {
    /// Integral of omega over the region generating the lattice.
    QuadratureResult area;
    SphereRegion region;
    /// Integral of omega over the whole sphere (generator of the pi_2 contributions).
    QuadratureResult full_sphere_area;
    Poly f;
    /// g(r) = f'(r) * area.value, kept factored.
    Poly derivative;
    std::vector<IsolatedRoot> critical_points;
    /// Roots of f' strictly inside the interval.
    std::size_t interior_critical_points = 0;
    Rational r_min;
    Rational r_max;
    MonodromyVerdict verdict = MonodromyVerdict::Integrable;

    /// Generator of M_r = g(r) Z.
    [[nodiscard]] double generator(double r) const;
    /// Generator of the full-sphere lattice f'(r) * full_sphere_area Z.
    [[nodiscard]] double sphere_generator(double r) const;
};

/// Embeddedness verdict for the monodromy of the Hamiltonian quotient S^2 x R with leafwise form
/// f(r) omega: non-integrable iff f' has a zero inside the interval and is not identically zero.
MonodromyReport monodromy_verdict(const Poly& f, const Rational& r_min, const Rational& r_max,
                                  const SphereAtlas& atlas, const SphereRegion& region = SphereRegion::full());

/// A complete Hamiltonian scene: structure, action, moment map, level set and quotient data.
struct HamiltonianScene {
    DiracSpan span;
    ActionSpec action;
    MomentMap moment;
    LevelSet level;
    QuotientPresentation quotient;
    PolyMap level_quotient;
    PolyMap inclusion;
};

/// Local model of the S^1 Yang-Mills scene on R^5 with coordinates (u, v, phi, s, r):
/// omega_S = ds ^ dphi + u ds ^ dv + s du ^ dv on the first four, r a Casimir, xi = d/dphi and
/// mu = -s + f(r). The level mu = 0 is parametrized by (u, v, phi, r) and its quotient is
/// (u, v, r) with leafwise form f(r) du ^ dv.
HamiltonianScene yang_mills_scene(const Poly& f, const Rational& half_width, std::size_t grid_resolution);

} // namespace dirackit
