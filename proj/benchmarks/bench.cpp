// Micro benchmarks for the hot paths: valuation/factoring, canonicalization,
// single-place local heights, support enumeration, and distances.

#include <benchmark/benchmark.h>

#include "heights/global_height.hpp"
#include "heights/local_height.hpp"

using namespace heights;

namespace {

const Ambient P1 = Ambient::projective(1);
const Ambient P2 = Ambient::projective(2);

SubschemePresentation hyperplane_x0(const Ambient& amb) {
    return SubschemePresentation{{hypersurface_presentation(parse_polynomial("x0", amb))},
                                 "x0"};
}

Rational ratio(long n, long d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

ProjectivePoint sample_point() {
    return ProjectivePoint::rational(P1, {{ratio(123456, 789), ratio(-517, 3200)}});
}

void BM_valuation(benchmark::State& state) {
    Rational q(Int("1234567890123"), Int(4782969)); // den = 3^14
    q.canonicalize();
    Int p(3);
    for (auto _ : state) benchmark::DoNotOptimize(valuation(q, p));
}
BENCHMARK(BM_valuation);

void BM_factor_smooth(benchmark::State& state) {
    Int n(720720);
    for (auto _ : state) benchmark::DoNotOptimize(factor(n));
}
BENCHMARK(BM_factor_smooth);

void BM_factor_semiprime(benchmark::State& state) {
    Int n = Int(1000003) * Int(1000033);
    for (auto _ : state) benchmark::DoNotOptimize(factor(n));
}
BENCHMARK(BM_factor_semiprime);

void BM_logvalue_canonicalize(benchmark::State& state) {
    LogValue v = LogValue::log_magnitude(Magnitude(ratio(123456789, 987654321)));
    for (auto _ : state) benchmark::DoNotOptimize(v.canonicalized());
}
BENCHMARK(BM_logvalue_canonicalize);

void BM_local_height_arch(benchmark::State& state) {
    auto H = hyperplane_x0(P1);
    auto x = sample_point();
    Place v = Place::archimedean();
    for (auto _ : state) benchmark::DoNotOptimize(local_height(H, x, v));
}
BENCHMARK(BM_local_height_arch);

void BM_local_height_finite(benchmark::State& state) {
    auto H = hyperplane_x0(P1);
    auto x = sample_point();
    Place v = Place::finite(Int(3));
    for (auto _ : state) benchmark::DoNotOptimize(local_height(H, x, v));
}
BENCHMARK(BM_local_height_finite);

void BM_support(benchmark::State& state) {
    auto H = hyperplane_x0(P1);
    auto x = sample_point();
    for (auto _ : state) benchmark::DoNotOptimize(local_height_support(H, x));
}
BENCHMARK(BM_support);

void BM_quadratic_split_valuation(benchmark::State& state) {
    auto F = QuadraticField::make(Int(2));
    auto w = places_above(Place::finite(Int(7)), F)[0];
    QuadElement alpha(Rational(343, 6), Rational(-49, 5), F);
    for (auto _ : state) benchmark::DoNotOptimize(ext_valuation(alpha, w));
}
BENCHMARK(BM_quadratic_split_valuation);

void BM_global_height_P2(benchmark::State& state) {
    auto H = hyperplane_x0(P2);
    auto x = ProjectivePoint::rational(
        P2, {{Rational(991, 7), Rational(-1280, 81), Rational(625, 66)}});
    for (auto _ : state) benchmark::DoNotOptimize(global_height(H, x));
}
BENCHMARK(BM_global_height_P2);

void BM_distance_global(benchmark::State& state) {
    auto x = ProjectivePoint::rational(P1, {{Rational(15, 7), Rational(-8, 9)}});
    auto y = ProjectivePoint::rational(P1, {{Rational(22, 5), Rational(13, 24)}});
    for (auto _ : state) benchmark::DoNotOptimize(arithmetic_distance_global(x, y));
}
BENCHMARK(BM_distance_global);

} // namespace

BENCHMARK_MAIN();
