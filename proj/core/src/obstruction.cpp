#include "dirackit/obstruction.hpp"

#include "dirackit/errors.hpp"
#include "dirackit/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dirackit {

namespace {

constexpr double pi = std::numbers::pi;

// C-infinity step: 0 for t <= 0, 1 for t >= 1.
double smooth_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

struct Panel {
    double lo;
    double hi;
};

// Splits [lo, hi] at the interior breaks, then each piece into `pieces` equal panels.
std::vector<Panel> panels(double lo, double hi, std::vector<double> breaks, std::size_t pieces) {
    std::vector<double> cuts{lo};
    std::sort(breaks.begin(), breaks.end());
    for (double b : breaks) {
        if (b > lo && b < hi) cuts.push_back(b);
    }
    cuts.push_back(hi);
    std::vector<Panel> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double w = (cuts[i + 1] - cuts[i]) / static_cast<double>(pieces);
        for (std::size_t k = 0; k < pieces; ++k) {
            out.push_back({cuts[i] + w * static_cast<double>(k),
                           k + 1 == pieces ? cuts[i + 1] : cuts[i] + w * static_cast<double>(k + 1)});
        }
    }
    return out;
}

double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

Vec3 diff(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

// Univariate polynomial over Q, coefficient i multiplies r^i.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly to_upoly(const Poly& p) {
    if (p.num_vars() != 1) throw DimensionMismatch("expected a polynomial in one variable");
    UPoly out(static_cast<std::size_t>(std::max(p.total_degree(), 0)) + 1);
    for (const auto& [e, c] : p.terms()) out[e[0]] = c;
    trim(out);
    return out;
}

Rational ueval(const UPoly& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

UPoly uderiv(const UPoly& p) {
    UPoly out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
    trim(out);
    return out;
}

// Remainder of a / b (b non-zero).
UPoly urem(UPoly a, const UPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        trim(a);
    }
    return a;
}

// Quotient of a / b, assuming exact division.
UPoly uquot(UPoly a, const UPoly& b) {
    trim(a);
    if (a.size() < b.size()) return {};
    UPoly q(a.size() - b.size() + 1);
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        Rational factor = a.back() / b.back();
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        trim(a);
    }
    trim(q);
    return q;
}

UPoly ugcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = urem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
    std::vector<UPoly> seq{p, uderiv(p)};
    while (!seq.back().empty()) {
        UPoly r = urem(seq[seq.size() - 2], seq.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        seq.push_back(std::move(r));
    }
    if (seq.back().empty()) seq.pop_back();
    return seq;
}

std::size_t sign_variations(const std::vector<UPoly>& seq, const Rational& x) {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& p : seq) {
        const int s = sgn(ueval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// Number of distinct roots in (lo, hi] for square-free p; lo and hi must not be roots.
std::size_t count_roots(const std::vector<UPoly>& seq, const Rational& lo, const Rational& hi) {
    return sign_variations(seq, lo) - sign_variations(seq, hi);
}

// A point strictly inside (lo, hi) that is not a root of p.
Rational split_point(const UPoly& p, const Rational& lo, const Rational& hi) {
    for (long k = 2;; ++k) {
        // midpoint first, then lo + (hi - lo) * (k-1)/k for k = 3, 4, ...
        Rational t = k == 2 ? Rational(1, 2) : Rational(k - 1, k);
        Rational m = lo + (hi - lo) * t;
        m.canonicalize();
        if (ueval(p, m) != 0) return m;
    }
}

void isolate(const UPoly& p, const std::vector<UPoly>& seq, Rational lo, Rational hi, const Rational& width,
             std::vector<IsolatedRoot>& out) {
    const std::size_t n = count_roots(seq, lo, hi);
    if (n == 0) return;
    if (n == 1) {
        // simple root: refine by sign bisection
        int slo = sgn(ueval(p, lo));
        while (hi - lo > width) {
            Rational m = (lo + hi) / 2;
            m.canonicalize();
            const int sm = sgn(ueval(p, m));
            if (sm == 0) {
                out.push_back({m, m, m, m.get_d()});
                return;
            }
            if (sm == slo) lo = m;
            else hi = m;
        }
        Rational mid = (lo + hi) / 2;
        out.push_back({lo, hi, std::nullopt, mid.get_d()});
        return;
    }
    Rational m = split_point(p, lo, hi);
    isolate(p, seq, lo, m, width, out);
    isolate(p, seq, m, hi, width, out);
}

} // namespace

GaussRule gauss_legendre(std::size_t order) {
    if (order == 0) throw DimensionMismatch("quadrature order must be positive");
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const double n = static_cast<double>(order);
    for (std::size_t i = 0; i < order; ++i) {
        double x = std::cos(pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= order; ++k) {
                const double kk = static_cast<double>(k);
                const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
                p0 = p1;
                p1 = p2;
            }
            if (order == 1) {
                p1 = x;
                p0 = 1.0;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute the derivative at the converged node
        double p0 = 1.0;
        double p1 = x;
        for (std::size_t k = 2; k <= order; ++k) {
            const double kk = static_cast<double>(k);
            const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

SphereRegion SphereRegion::full() { return {0.0, pi}; }
SphereRegion SphereRegion::cap(double theta0) { return {0.0, theta0}; }
SphereRegion SphereRegion::cap_complement(double theta0) { return {theta0, pi}; }

SphereAtlas::SphereAtlas(double curvature_scale, std::size_t quadrature_order)
  : scale_(curvature_scale)
  , order_(quadrature_order) {
    if (order_ < min_order) {
        throw PreconditionFailed("quadrature order " + std::to_string(order_) + " below the minimum " +
                                 std::to_string(min_order));
    }
}

double SphereAtlas::weight(Chart chart, const Vec3& p) const {
    // w_S + w_N = 1 because smooth_step(t) + smooth_step(1 - t) = 1
    return chart == Chart::S ? smooth_step(p[2] + 0.5) : smooth_step(0.5 - p[2]);
}

std::array<double, 2> SphereAtlas::to_chart(Chart chart, const Vec3& p) const {
    const double d = chart == Chart::S ? 1.0 + p[2] : 1.0 - p[2];
    return {p[0] / d, p[1] / d};
}

Vec3 SphereAtlas::from_chart(Chart chart, double a, double b) const {
    const double rho2 = a * a + b * b;
    const double z = (1.0 - rho2) / (1.0 + rho2);
    return {2.0 * a / (1.0 + rho2), 2.0 * b / (1.0 + rho2), chart == Chart::S ? z : -z};
}

double SphereAtlas::density(Chart chart, double a, double b) const {
    const double q = 1.0 + a * a + b * b;
    const double c = 2.0 * scale_ / (q * q);
    return chart == Chart::S ? c : -c;
}

namespace {

double form_in_chart(const SphereAtlas& atlas, SphereAtlas::Chart chart, const Vec3& p, const Vec3& u,
                     const Vec3& v) {
    const double sgn_z = chart == SphereAtlas::Chart::S ? 1.0 : -1.0;
    const double d = 1.0 + sgn_z * p[2];
    auto da = [&](const Vec3& w) { return w[0] / d - sgn_z * p[0] * w[2] / (d * d); };
    auto db = [&](const Vec3& w) { return w[1] / d - sgn_z * p[1] * w[2] / (d * d); };
    auto ab = atlas.to_chart(chart, p);
    return atlas.density(chart, ab[0], ab[1]) * (da(u) * db(v) - da(v) * db(u));
}

} // namespace

double SphereAtlas::evaluate_form(const Vec3& p, const Vec3& u, const Vec3& v) const {
    const Chart chart = weight(Chart::S, p) >= weight(Chart::N, p) ? Chart::S : Chart::N;
    return form_in_chart(*this, chart, p, u, v);
}

double SphereAtlas::partition_defect() const {
    GaussRule rule = gauss_legendre(order_);
    double worst = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const double z = rule.nodes[i];
            const double phi = pi * (rule.nodes[j] + 1.0);
            const double s = std::sqrt(1.0 - z * z);
            Vec3 p{s * std::cos(phi), s * std::sin(phi), z};
            worst = std::max(worst, std::abs(weight(Chart::S, p) + weight(Chart::N, p) - 1.0));
        }
    }
    return worst;
}

double SphereAtlas::overlap_defect() const {
    GaussRule rule = gauss_legendre(order_);
    double worst = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const double z = 0.5 * rule.nodes[i]; // transition band
            const double phi = pi * (rule.nodes[j] + 1.0);
            const double s = std::sqrt(1.0 - z * z);
            Vec3 p{s * std::cos(phi), s * std::sin(phi), z};
            Vec3 e_theta{z * std::cos(phi), z * std::sin(phi), -s};
            Vec3 e_phi{-std::sin(phi), std::cos(phi), 0.0};
            const double vs = form_in_chart(*this, Chart::S, p, e_theta, e_phi);
            const double vn = form_in_chart(*this, Chart::N, p, e_theta, e_phi);
            worst = std::max(worst, std::abs(vs - vn));
        }
    }
    return worst;
}

namespace {

double chart_band_integral(const SphereAtlas& atlas, SphereAtlas::Chart chart, double rho_lo, double rho_hi,
                           std::size_t pieces, const GaussRule& rule, std::size_t& evaluations) {
    if (rho_hi <= rho_lo) return 0.0;
    const double orientation = chart == SphereAtlas::Chart::S ? 1.0 : -1.0;
    // weight transition begins at rho = tan(pi/6) in either chart
    auto radial = panels(rho_lo, rho_hi, {std::tan(pi / 6.0)}, pieces);
    auto angular = panels(0.0, 2.0 * pi, {}, pieces);
    double total = 0.0;
    for (const auto& rp : radial) {
        const double rh = 0.5 * (rp.hi - rp.lo);
        const double rc = 0.5 * (rp.hi + rp.lo);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double rho = rc + rh * rule.nodes[i];
            double ring = 0.0;
            for (const auto& ap : angular) {
                const double ah = 0.5 * (ap.hi - ap.lo);
                const double ac = 0.5 * (ap.hi + ap.lo);
                for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
                    const double phi = ac + ah * rule.nodes[j];
                    const double a = rho * std::cos(phi);
                    const double b = rho * std::sin(phi);
                    const Vec3 p = atlas.from_chart(chart, a, b);
                    ring += ah * rule.weights[j] * atlas.weight(chart, p) * atlas.density(chart, a, b);
                    ++evaluations;
                }
            }
            total += rh * rule.weights[i] * ring * rho;
        }
    }
    return orientation * total;
}

double band_integral(const SphereAtlas& atlas, const SphereRegion& region, std::size_t pieces,
                     const GaussRule& rule, std::size_t& evaluations) {
    const double lo = std::clamp(region.theta_lo, 0.0, pi);
    const double hi = std::clamp(region.theta_hi, 0.0, pi);
    if (hi <= lo) return 0.0;
    double total = 0.0;
    // chart S carries colatitudes below 2 pi / 3, rho_S = tan(theta / 2)
    const double s_hi = std::min(hi, 2.0 * pi / 3.0);
    if (lo < s_hi) {
        total += chart_band_integral(atlas, SphereAtlas::Chart::S, std::tan(lo / 2.0), std::tan(s_hi / 2.0), pieces,
                                     rule, evaluations);
    }
    // chart N carries colatitudes above pi / 3, rho_N = tan((pi - theta) / 2)
    const double n_lo = std::max(lo, pi / 3.0);
    if (n_lo < hi) {
        total += chart_band_integral(atlas, SphereAtlas::Chart::N, std::tan((pi - hi) / 2.0),
                                     std::tan((pi - n_lo) / 2.0), pieces, rule, evaluations);
    }
    return total;
}

} // namespace

QuadratureResult curvature_integral(const SphereAtlas& atlas, const SphereRegion& region, double tol) {
    GaussRule rule = gauss_legendre(atlas.quadrature_order());
    std::array<double, 3> levels{};
    QuadratureResult result;
    for (std::size_t l = 0; l < 3; ++l) {
        levels[l] = band_integral(atlas, region, std::size_t{4} << l, rule, result.evaluations);
    }
    result.value = levels[2];
    result.error_estimate = std::abs(levels[2] - levels[1]);
    if (!(result.error_estimate <= tol * std::max(1.0, std::abs(levels[2])))) {
        throw QuadratureError("curvature integral not converged: successive levels differ by " +
                              std::to_string(result.error_estimate));
    }
    return result;
}

double cap_integral_closed_form(double curvature_scale, double theta0) {
    return curvature_scale * pi * (1.0 - std::cos(theta0));
}

DiskFamily DiskFamily::linear(double theta0, const Rational& r0, const Rational& velocity) {
    DiskFamily family;
    family.theta0 = theta0;
    family.r_of_t = Poly::constant(1, r0) + Poly::variable(1, 0) * velocity;
    return family;
}

std::array<double, 4> DiskFamily::base_point(double t) const {
    const double r = r_of_t.evaluate(std::span<const double>(&t, 1));
    return {std::sin(theta0), 0.0, std::cos(theta0), r};
}

double area_variation_numeric(const SphereAtlas& atlas, const Poly& f, const DiskFamily& family,
                              const VariationOptions& options) {
    if (!(options.step >= 1e-6 && options.step <= 1e-1)) {
        throw PreconditionFailed("finite-difference step outside [1e-6, 1e-1]");
    }
    if (f.num_vars() != 1 || family.r_of_t.num_vars() != 1) {
        throw DimensionMismatch("f and r(t) must be polynomials in one variable");
    }
    const double cap = curvature_integral(atlas, SphereRegion::cap(family.theta0)).value;
    const std::vector<Poly> subs{family.r_of_t};
    const Poly leaf_coefficient = f.compose(subs, 1);
    auto area = [&](double t) { return leaf_coefficient.evaluate(std::span<const double>(&t, 1)) * cap; };
    auto central = [&](double h) { return (area(h) - area(-h)) / (2.0 * h); };
    const double h = options.step;
    return (4.0 * central(h / 2.0) - central(h)) / 3.0;
}

double area_variation_analytic(const SphereAtlas& atlas, const Poly& f, const DiskFamily& family) {
    if (f.num_vars() != 1 || family.r_of_t.num_vars() != 1) {
        throw DimensionMismatch("f and r(t) must be polynomials in one variable");
    }
    const std::vector<Rational> zero{Rational(0)};
    const Rational r0 = family.r_of_t.evaluate(zero);
    const Rational velocity = family.r_of_t.derivative(0).evaluate(zero);
    const std::vector<Rational> at{r0};
    const Rational slope = f.derivative(0).evaluate(at) * velocity;
    return slope.get_d() * cap_integral_closed_form(atlas.curvature_scale(), family.theta0);
}

SphereHomotopy SphereHomotopy::latitude_shrink(double theta0) {
    SphereHomotopy h;
    h.name = "latitude-shrink";
    h.point = [theta0](double t, double e) {
        const double th = theta0 * (1.0 - e);
        const double ph = 2.0 * pi * t;
        return Vec3{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
    };
    h.d_t = [theta0](double t, double e) {
        const double th = theta0 * (1.0 - e);
        const double ph = 2.0 * pi * t;
        return Vec3{-2.0 * pi * std::sin(th) * std::sin(ph), 2.0 * pi * std::sin(th) * std::cos(ph), 0.0};
    };
    h.d_e = [theta0](double t, double e) {
        const double th = theta0 * (1.0 - e);
        const double ph = 2.0 * pi * t;
        return Vec3{-theta0 * std::cos(th) * std::cos(ph), -theta0 * std::cos(th) * std::sin(ph),
                    theta0 * std::sin(th)};
    };
    return h;
}

SphereHomotopy SphereHomotopy::reversed(double theta0) {
    SphereHomotopy base = latitude_shrink(theta0);
    SphereHomotopy h;
    h.name = "reversed";
    h.point = [base](double t, double e) { return base.point(1.0 - t, e); };
    h.d_t = [base](double t, double e) {
        Vec3 v = base.d_t(1.0 - t, e);
        return Vec3{-v[0], -v[1], -v[2]};
    };
    h.d_e = [base](double t, double e) { return base.d_e(1.0 - t, e); };
    return h;
}

SphereHomotopy SphereHomotopy::constant(const Vec3& p) {
    SphereHomotopy h;
    h.name = "constant";
    h.point = [p](double, double) { return p; };
    h.d_t = [](double, double) { return Vec3{0.0, 0.0, 0.0}; };
    h.d_e = [](double, double) { return Vec3{0.0, 0.0, 0.0}; };
    return h;
}

QuadratureResult homotopy_double_integral(const SphereAtlas& atlas, const SphereHomotopy& homotopy, double tol) {
    constexpr double endpoint_tol = 1e-12;
    const Vec3 end = homotopy.point(0.0, 1.0);
    for (int i = 0; i <= 16; ++i) {
        const double s = i / 16.0;
        const Vec3 p = homotopy.point(s, 0.0);
        if (std::abs(norm(p) - 1.0) > endpoint_tol) throw PreconditionFailed("homotopy leaves the sphere");
        if (norm(diff(homotopy.point(0.0, s), homotopy.point(1.0, s))) > endpoint_tol) {
            throw PreconditionFailed("homotopy does not consist of closed loops");
        }
        if (norm(diff(homotopy.point(s, 1.0), end)) > endpoint_tol) {
            throw PreconditionFailed("homotopy does not end at a constant loop");
        }
    }

    GaussRule rule = gauss_legendre(atlas.quadrature_order());
    std::array<double, 3> levels{};
    QuadratureResult result;
    for (std::size_t l = 0; l < 3; ++l) {
        auto ps = panels(0.0, 1.0, {}, std::size_t{2} << l);
        const std::size_t q = rule.nodes.size();
        const std::size_t rows = ps.size() * q;
        std::vector<double> row_sums(rows, 0.0);
        parallel_for(rows, [&](std::size_t row) {
            const Panel& tp = ps[row / q];
            const double th = 0.5 * (tp.hi - tp.lo);
            const double t = 0.5 * (tp.hi + tp.lo) + th * rule.nodes[row % q];
            double sum = 0.0;
            for (const auto& ep : ps) {
                const double eh = 0.5 * (ep.hi - ep.lo);
                for (std::size_t j = 0; j < q; ++j) {
                    const double e = 0.5 * (ep.hi + ep.lo) + eh * rule.nodes[j];
                    sum += eh * rule.weights[j] *
                           atlas.evaluate_form(homotopy.point(t, e), homotopy.d_t(t, e), homotopy.d_e(t, e));
                }
            }
            row_sums[row] = th * rule.weights[row % q] * sum;
        });
        double total = 0.0;
        for (double v : row_sums) total += v;
        levels[l] = total;
        result.evaluations += rows * rows;
    }
    result.value = levels[2];
    result.error_estimate = std::abs(levels[2] - levels[1]);
    if (!(result.error_estimate <= tol * std::max(1.0, std::abs(levels[2])))) {
        throw QuadratureError("homotopy integral not converged: successive levels differ by " +
                              std::to_string(result.error_estimate));
    }
    return result;
}

std::vector<IsolatedRoot> isolate_real_roots(const Poly& p, const Rational& a, const Rational& b,
                                             const Rational& width) {
    if (a > b) throw DimensionMismatch("interval has a > b");
    UPoly up = to_upoly(p);
    if (up.empty()) throw PreconditionFailed("the zero polynomial has no isolated roots");
    // square-free part
    UPoly g = ugcd(up, uderiv(up));
    UPoly sf = g.size() > 1 ? uquot(up, g) : up;

    std::vector<IsolatedRoot> out;
    auto deflate_at = [&](const Rational& x) {
        if (ueval(sf, x) != 0) return;
        out.push_back({x, x, x, x.get_d()});
        sf = uquot(sf, UPoly{-x, Rational(1)});
    };
    deflate_at(a);
    if (b != a) deflate_at(b);
    if (a != b && sf.size() > 1) {
        auto seq = sturm_sequence(sf);
        isolate(sf, seq, a, b, width, out);
    }
    std::sort(out.begin(), out.end(), [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo < y.lo; });
    return out;
}

const char* to_string(MonodromyVerdict v) {
    switch (v) {
    case MonodromyVerdict::Integrable: return "integrable";
    case MonodromyVerdict::NonIntegrable: return "non-integrable";
    case MonodromyVerdict::TriviallyIntegrable: return "trivially-integrable";
    }
    return "integrable";
}

double MonodromyReport::generator(double r) const {
    return derivative.evaluate(std::span<const double>(&r, 1)) * area.value;
}

double MonodromyReport::sphere_generator(double r) const {
    return derivative.evaluate(std::span<const double>(&r, 1)) * full_sphere_area.value;
}

MonodromyReport monodromy_verdict(const Poly& f, const Rational& r_min, const Rational& r_max,
                                  const SphereAtlas& atlas, const SphereRegion& region) {
    if (f.num_vars() != 1) throw DimensionMismatch("f must be a polynomial in r");
    if (r_min > r_max) throw DimensionMismatch("interval has r_min > r_max");
    MonodromyReport report;
    report.f = f;
    report.derivative = f.derivative(0);
    report.r_min = r_min;
    report.r_max = r_max;
    report.region = region;
    report.area = curvature_integral(atlas, region);
    report.full_sphere_area = curvature_integral(atlas, SphereRegion::full());
    if (report.derivative.is_zero()) {
        report.verdict = MonodromyVerdict::TriviallyIntegrable;
        return report;
    }
    report.critical_points = isolate_real_roots(report.derivative, r_min, r_max);
    for (const auto& root : report.critical_points) {
        const bool on_boundary = root.exact && (*root.exact == r_min || *root.exact == r_max);
        if (!on_boundary) ++report.interior_critical_points;
    }
    report.verdict =
        report.interior_critical_points > 0 ? MonodromyVerdict::NonIntegrable : MonodromyVerdict::Integrable;
    return report;
}

HamiltonianScene yang_mills_scene(const Poly& f, const Rational& half_width, std::size_t grid_resolution) {
    if (f.num_vars() != 1) throw DimensionMismatch("f must be a polynomial in r");
    constexpr std::size_t n = 5; // u, v, phi, s, r
    auto var = [](std::size_t i) { return Poly::variable(n, i); };
    auto one = Poly::constant(n, 1);

    KForm omega(n, 2);
    omega.add_term({3, 2}, one);    // ds ^ dphi
    omega.add_term({3, 1}, var(0)); // u ds ^ dv
    omega.add_term({0, 1}, var(3)); // s du ^ dv

    std::vector<CourantSection> sections;
    for (std::size_t i = 0; i < 4; ++i) {
        VectorField e = VectorField::coordinate(n, i);
        KForm a = interior_product(e, omega);
        sections.push_back({std::move(e), std::move(a)});
    }
    sections.push_back({VectorField(n), KForm::basis(n, {4}, one)});

    const std::vector<Poly> r_only{var(4)};
    const Poly f_of_r = f.compose(r_only, n);

    Box box = Box::symmetric(n, half_width);
    // s ranges over the values f takes on the r-interval; a generous box keeps the level inside
    Rational s_bound = 0;
    for (const auto& [e, c] : f.terms()) {
        Rational term = abs(c);
        for (std::uint32_t k = 0; k < e[0]; ++k) term *= half_width;
        s_bound += term;
    }
    box.min[3] = -s_bound - 1;
    box.max[3] = s_bound + 1;
    DiracSpan span(n, std::move(sections), box, DiracKind::Span);

    ActionSpec action(GroupKind::Torus, {VectorField::coordinate(n, 2)},
                      PeriodicityWitness{"phi -> phi + t, period 2 pi", 2.0 * std::numbers::pi});
    MomentMap mu{{f_of_r - var(3)}};

    constexpr std::size_t m = 4; // u, v, phi, r
    auto pvar = [](std::size_t i) { return Poly::variable(m, i); };
    const std::vector<Poly> param_r{pvar(3)};
    PolyMap phi(m, {pvar(0), pvar(1), pvar(2), f.compose(param_r, m), pvar(3)});
    SampleGrid grid = SampleGrid::uniform(Box::symmetric(m, half_width), grid_resolution);
    LevelSet level{RationalPoint{Rational(0)}, std::move(phi), std::move(grid)};

    QuotientPresentation quotient(PolyMap(n, {var(0), var(1), var(3), var(4)}), action);
    PolyMap level_quotient(m, {pvar(0), pvar(1), pvar(3)});
    auto qvar = [](std::size_t i) { return Poly::variable(3, i); };
    const std::vector<Poly> base_r{qvar(2)};
    PolyMap inclusion(3, {qvar(0), qvar(1), f.compose(base_r, 3), qvar(2)});

    return {std::move(span), std::move(action),        std::move(mu),        std::move(level),
            std::move(quotient), std::move(level_quotient), std::move(inclusion)};
}

} // namespace dirackit
