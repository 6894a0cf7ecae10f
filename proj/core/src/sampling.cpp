#include "gyrovec/sampling.hpp"

#include <cmath>
#include <numbers>

namespace gyrovec::sampling {

double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * unit_real(rng);
}

double normal(std::mt19937_64& rng) {
    double u1 = unit_real(rng);
    while (u1 == 0.0)
        u1 = unit_real(rng);
    const double u2 = unit_real(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

Vec random_direction(std::mt19937_64& rng, int n) {
    Vec dir(n);
    double norm = 0.0;
    do {
        for (int i = 0; i < n; ++i)
            dir(i) = normal(rng);
        norm = dir.norm();
    } while (norm < 1e-12);
    return dir / norm;
}

}  // namespace

BallPoint point_in_ball(std::mt19937_64& rng, const SpaceContext& ctx, double lo_frac,
                        double hi_frac) {
    const Vec dir = random_direction(rng, ctx.dim);
    // u^(1/n) radial law: uniform-in-ball when lo_frac = 0.
    const double u = std::pow(unit_real(rng), 1.0 / ctx.dim);
    const double r = ctx.s * (lo_frac + (hi_frac - lo_frac) * u);
    return BallPoint(Vec(r * dir), ctx);
}

BallPoint point_on_shell(std::mt19937_64& rng, const SpaceContext& ctx, double frac) {
    const Vec dir = random_direction(rng, ctx.dim);
    return BallPoint(Vec(ctx.s * frac * dir), ctx);
}

RotationMatrix random_rotation(std::mt19937_64& rng, int n) {
    if (n == 1)
        return RotationMatrix::identity(1);
    Mat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g(i, j) = normal(rng);
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i)
        if (r(i, i) < 0.0)
            q.col(i) = -q.col(i);
    if (q.determinant() < 0.0)
        q.col(n - 1) = -q.col(n - 1);
    return RotationMatrix(std::move(q));
}

GyroMotion random_gyromotion(std::mt19937_64& rng, const SpaceContext& ctx, double hi_frac) {
    BallPoint x = point_in_ball(rng, ctx, 0.0, hi_frac);
    RotationMatrix r = random_rotation(rng, ctx.dim);
    return {std::move(x), std::move(r)};
}

}  // namespace gyrovec::sampling
