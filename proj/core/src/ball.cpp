#include "gyrovec/ball.hpp"

#include <cmath>
#include <limits>

namespace gyrovec {

namespace {
// Cutoff below which 1 + u.v/s^2 is treated as vanished. The undefined case
// is exactly zero; anything at or below this is rejected rather than guessed.
constexpr double kDenomCutoff = 1e-13;
}  // namespace

double gamma(const BallPoint& v, const SpaceContext& ctx) {
    const double q = v.norm() / ctx.s;
    return 1.0 / std::sqrt((1.0 - q) * (1.0 + q));
}

SignedGamma gamma_signed(const Vec& v, const SpaceContext& ctx) {
    ctx.require_dim(v, "gamma_signed");
    const double q = v.norm() / ctx.s;
    const double denom = (1.0 - q) * (1.0 + q);
    SignedGamma g;
    if (denom == 0.0) {
        g.gamma_sq = std::numeric_limits<double>::infinity();
        g.kind = SignedGamma::Kind::infinite;
    } else {
        g.gamma_sq = 1.0 / denom;
        g.kind = denom > 0.0 ? SignedGamma::Kind::real : SignedGamma::Kind::imaginary;
    }
    return g;
}

Vec einstein_add(const BallPoint& u, const Vec& v, const SpaceContext& ctx) {
    ctx.require_dim(v, "einstein_add");
    const double s2 = ctx.s * ctx.s;
    const double uv = u.coords().dot(v);
    const double denom = 1.0 + uv / s2;
    if (denom <= kDenomCutoff)
        throw Error("denominator_vanishes",
                    "einstein_add: 1 + u.v/s^2 = " + std::to_string(denom) +
                        " is not positive; the sum is undefined");
    const double usq = u.coords().squaredNorm();
    if (usq == 0.0)
        return v;
    // Regrouped closed form: splitting v against u leaves the parallel part
    // free of the gamma factor,
    //   u (+) v = ((1 + a) u + v_perp / gamma_u) / (1 + u.v/s^2),
    // a = u.v/||u||^2, so parallel sums reduce to (u + v)/(1 + u.v/s^2)
    // without cancellation near the boundary.
    const double alpha = uv / usq;
    const Vec v_perp = v - alpha * u.coords();
    const double gu = gamma(u, ctx);
    return ((1.0 + alpha) * u.coords() + v_perp / gu) / denom;
}

BallPoint einstein_add(const BallPoint& u, const BallPoint& v, const SpaceContext& ctx) {
    return BallPoint::rounded_inside(einstein_add(u, v.coords(), ctx), ctx);
}

Vec einstein_sub(const BallPoint& u, const Vec& v, const SpaceContext& ctx) {
    return einstein_add(u, Vec(-v), ctx);
}

BallPoint einstein_sub(const BallPoint& u, const BallPoint& v, const SpaceContext& ctx) {
    return BallPoint::rounded_inside(einstein_add(u, Vec(-v.coords()), ctx), ctx);
}

BallPoint gyrovector(const BallPoint& a, const BallPoint& b, const SpaceContext& ctx) {
    const BallPoint neg_a(Vec(-a.coords()), ctx);
    return einstein_add(neg_a, b, ctx);
}

Vec gyrovector(const BallPoint& a, const Vec& b, const SpaceContext& ctx) {
    const BallPoint neg_a(Vec(-a.coords()), ctx);
    return einstein_add(neg_a, b, ctx);
}

double gamma_of_sum(const BallPoint& u, const BallPoint& v, const SpaceContext& ctx) {
    const double s2 = ctx.s * ctx.s;
    return gamma(u, ctx) * gamma(v, ctx) * (1.0 + u.coords().dot(v.coords()) / s2);
}

double gamma_of_diff(const BallPoint& u, const BallPoint& v, const SpaceContext& ctx) {
    const double s2 = ctx.s * ctx.s;
    return gamma(u, ctx) * gamma(v, ctx) * (1.0 - u.coords().dot(v.coords()) / s2);
}

double scalar_norm_add(double a, double b, const SpaceContext& ctx) {
    if (a < 0.0 || b < 0.0 || a >= ctx.s || b >= ctx.s)
        throw Error("ball_domain", "scalar_norm_add: magnitudes must lie in [0, s)");
    return (a + b) / (1.0 + a * b / (ctx.s * ctx.s));
}

}  // namespace gyrovec
