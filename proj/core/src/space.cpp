#include "gyrovec/space.hpp"

#include <cmath>

namespace gyrovec {

BallPoint scalar_mul(double r, const BallPoint& v, const SpaceContext& ctx) {
    const double norm = v.norm();
    if (norm == 0.0 || r == 0.0)
        return BallPoint::origin(ctx);
    const double q = norm / ctx.s;
    // tanh saturates to 1.0 in double around |x| = 19; rounded_inside pulls
    // those images back into the open ball.
    const double scaled = ctx.s * std::tanh(r * std::atanh(q));
    return BallPoint::rounded_inside(Vec(scaled / norm * v.coords()), ctx);
}

BallPoint einstein_half(const BallPoint& v, const SpaceContext& ctx) {
    const double g = gamma(v, ctx);
    return BallPoint(Vec(g / (1.0 + g) * v.coords()), ctx);
}

Gyroline::Gyroline(BallPoint a_, BallPoint b_, const SpaceContext& ctx)
    : a(std::move(a_)), b(std::move(b_)) {
    if (gyrodistance(a, b, ctx) <= ctx.abs_tol)
        throw Error("coincident_points", "gyroline requires two distinct base points");
}

BallPoint gyroline_point(const Gyroline& line, double t, const SpaceContext& ctx) {
    const BallPoint dir = gyrovector(line.a, line.b, ctx);
    return einstein_add(line.a, scalar_mul(t, dir, ctx), ctx);
}

double gyrodistance(const BallPoint& a, const BallPoint& b, const SpaceContext& ctx) {
    return gyrovector(a, b, ctx).norm();
}

BallPoint gyromidpoint(const BallPoint& a1, const BallPoint& a2, const SpaceContext& ctx) {
    const double g1 = gamma(a1, ctx);
    const double g2 = gamma(a2, ctx);
    return BallPoint(Vec((g1 * a1.coords() + g2 * a2.coords()) / (g1 + g2)), ctx);
}

BoundaryPair boundary_points(const BallPoint& a1, const BallPoint& a2, const SpaceContext& ctx) {
    if (gyrodistance(a1, a2, ctx) <= ctx.abs_tol)
        throw Error("coincident_points", "boundary points require two distinct points");
    const BallPoint a12 = gyrovector(a1, a2, ctx);
    const double g12 = gamma(a12, ctx);
    const Vec step = (g12 / std::sqrt(g12 * g12 - 1.0)) * a12.coords();
    BoundaryPair pair;
    pair.e_a1 = einstein_add(a1, Vec(-step), ctx);
    pair.e_a2 = einstein_add(a1, step, ctx);
    return pair;
}

}  // namespace gyrovec
