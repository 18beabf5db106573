#include "dirackit/obstruction.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace dirackit;

namespace {

Poly random_poly(std::mt19937_64& rng, std::size_t vars, unsigned degree, std::size_t terms) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<unsigned> exp(0, degree);
    Poly p(vars);
    for (std::size_t t = 0; t < terms; ++t) {
        Exponent e(vars);
        for (auto& v : e) v = exp(rng);
        p.add_term(e, Rational(coeff(rng), 1 + static_cast<int>(t % 3)));
    }
    return p;
}

void BM_PolyMultiply(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto terms = static_cast<std::size_t>(state.range(0));
    Poly a = random_poly(rng, 4, 4, terms), b = random_poly(rng, 4, 4, terms);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply)->Arg(8)->Arg(32)->Arg(128);

void BM_ExteriorDerivative(benchmark::State& state) {
    std::mt19937_64 rng(2);
    KForm w(4, 2);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) w.add_term({i, j}, random_poly(rng, 4, 4, 12));
    }
    for (auto _ : state) benchmark::DoNotOptimize(exterior_d(w));
}
BENCHMARK(BM_ExteriorDerivative);

void BM_IntegrabilityTensor(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(3);
    KForm w(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) w.add_term({i, j}, random_poly(rng, n, 2, 4));
    }
    DiracSpan span = from_2form(w, Box::symmetric(n, 1));
    for (auto _ : state) benchmark::DoNotOptimize(IntegrabilityTensor(span).vanishes());
}
BENCHMARK(BM_IntegrabilityTensor)->Arg(2)->Arg(3)->Arg(4);

void BM_SmoothnessProbe(benchmark::State& state) {
    Poly x = Poly::variable(2, 0);
    DiracSpan span = from_2form(KForm::basis(2, {0, 1}, x), Box::symmetric(2, 1));
    ActionSpec action(GroupKind::Real, {VectorField::coordinate(2, 1)});
    QuotientPresentation q(PolyMap(2, {x}), action);
    SampleGrid grid = SampleGrid::uniform(Box::symmetric(2, 1), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(smoothness_probe(span, q, grid).verdict);
}
BENCHMARK(BM_SmoothnessProbe)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_HopfDiamond(benchmark::State& state) {
    Poly r = Poly::variable(1, 0);
    HamiltonianScene s = yang_mills_scene(r * r + Poly::constant(1, 1), Rational(1), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            verify_diamond(s.span, s.action, s.moment, s.level, s.quotient, s.level_quotient, s.inclusion).holds());
    }
}
BENCHMARK(BM_HopfDiamond)->Unit(benchmark::kMillisecond);

void BM_CurvatureIntegral(benchmark::State& state) {
    SphereAtlas atlas(1.0, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(curvature_integral(atlas, SphereRegion::full(), 1e-6).value);
}
BENCHMARK(BM_CurvatureIntegral)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_MonodromyVerdict(benchmark::State& state) {
    SphereAtlas atlas;
    Poly r = Poly::variable(1, 0);
    Poly f = pow(r, 5) - Rational(3) * pow(r, 3) + r;
    for (auto _ : state) benchmark::DoNotOptimize(monodromy_verdict(f, Rational(-2), Rational(2), atlas).verdict);
}
BENCHMARK(BM_MonodromyVerdict)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
