#include "gyrovec/ball.hpp"
#include "gyrovec/barycentric.hpp"
#include "gyrovec/gyration.hpp"
#include "gyrovec/relativity.hpp"
#include "gyrovec/sampling.hpp"
#include "gyrovec/space.hpp"

#include <benchmark/benchmark.h>

using namespace gyrovec;

namespace {

const SpaceContext ctx(1.0, 3);

BallPoint fixed_point(double x, double y, double z) {
    Vec v(3);
    v << x, y, z;
    return BallPoint(v, ctx);
}

void BM_einstein_add(benchmark::State& state) {
    const BallPoint u = fixed_point(0.31, -0.22, 0.44);
    const BallPoint v = fixed_point(-0.15, 0.52, 0.08);
    for (auto _ : state)
        benchmark::DoNotOptimize(einstein_add(u, v.coords(), ctx));
}
BENCHMARK(BM_einstein_add);

void BM_gyr_apply(benchmark::State& state) {
    const Gyration p{fixed_point(0.31, -0.22, 0.44), fixed_point(-0.15, 0.52, 0.08)};
    const Vec w = fixed_point(0.6, 0.1, -0.3).coords();
    for (auto _ : state)
        benchmark::DoNotOptimize(gyr_apply(p, w, ctx));
}
BENCHMARK(BM_gyr_apply);

void BM_gyr_matrix(benchmark::State& state) {
    const Gyration p{fixed_point(0.31, -0.22, 0.44), fixed_point(-0.15, 0.52, 0.08)};
    for (auto _ : state)
        benchmark::DoNotOptimize(gyr_matrix(p, ctx));
}
BENCHMARK(BM_gyr_matrix);

void BM_scalar_mul(benchmark::State& state) {
    const BallPoint v = fixed_point(0.31, -0.22, 0.44);
    for (auto _ : state)
        benchmark::DoNotOptimize(scalar_mul(2.7, v, ctx));
}
BENCHMARK(BM_scalar_mul);

void BM_gyromidpoint(benchmark::State& state) {
    const BallPoint a = fixed_point(0.31, -0.22, 0.44);
    const BallPoint b = fixed_point(-0.15, 0.52, 0.08);
    for (auto _ : state)
        benchmark::DoNotOptimize(gyromidpoint(a, b, ctx));
}
BENCHMARK(BM_gyromidpoint);

void BM_resultant_mass(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<Particle> system;
    for (int k = 0; k < 8; ++k)
        system.push_back({1.0 + 0.1 * k, sampling::point_in_ball(rng, ctx, 0.0, 0.9)});
    for (auto _ : state)
        benchmark::DoNotOptimize(resultant_invariant_mass(system, ctx));
}
BENCHMARK(BM_resultant_mass);

void BM_solve_gyro(benchmark::State& state) {
    std::mt19937_64 rng(2);
    AnchorSet anchors = {fixed_point(0.3, 0.0, 0.1), fixed_point(-0.2, 0.4, 0.0),
                         fixed_point(0.1, -0.3, 0.5), fixed_point(0.0, 0.2, -0.4)};
    Vec w(4);
    w << 0.4, 0.3, 0.2, 0.1;
    const GyroEval eval = eval_gyro(anchors, w, ctx);
    const BallPoint p(eval.point, ctx);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_gyro(p, anchors, ctx));
}
BENCHMARK(BM_solve_gyro);

void BM_boost_apply(benchmark::State& state) {
    const BallPoint u = fixed_point(0.31, -0.22, 0.44);
    const FourVector fv{1.2, fixed_point(0.6, 0.1, -0.3).coords()};
    for (auto _ : state)
        benchmark::DoNotOptimize(boost_apply(u, fv, ctx));
}
BENCHMARK(BM_boost_apply);

}  // namespace

BENCHMARK_MAIN();
