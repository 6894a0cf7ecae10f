#include "gyrovec/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gyrovec {

SpaceContext::SpaceContext(double radius, int n, double rel, double abs)
    : s(radius), dim(n), rel_tol(rel), abs_tol(abs) {
    if (!(s > 0.0))
        throw Error("context", "ball radius must be positive");
    if (dim < 1)
        throw Error("context", "dimension must be >= 1");
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw Error("context", "tolerances must be positive");
}

void SpaceContext::require_dim(const Vec& v, const char* what) const {
    if (static_cast<int>(v.size()) != dim)
        throw Error("dimension_mismatch",
                    std::string(what) + ": expected dimension " + std::to_string(dim) +
                        ", got " + std::to_string(v.size()));
}

bool SpaceContext::near(double a, double b, double scale) const {
    const double mag = std::max({scale, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= std::max(abs_tol, rel_tol * mag);
}

bool SpaceContext::near(const Vec& a, const Vec& b, double scale) const {
    const double mag = std::max({scale, a.norm(), b.norm()});
    return (a - b).norm() <= std::max(abs_tol, rel_tol * mag);
}

BallPoint::BallPoint(Vec coords, const SpaceContext& ctx) : coords_(std::move(coords)) {
    ctx.require_dim(coords_, "BallPoint");
    if (!(coords_.norm() < ctx.s))
        throw Error("ball_domain",
                    "point of norm " + std::to_string(coords_.norm()) +
                        " is not strictly inside the ball of radius " + std::to_string(ctx.s));
}

BallPoint BallPoint::origin(const SpaceContext& ctx) {
    return BallPoint(Vec::Zero(ctx.dim), ctx);
}

BallPoint BallPoint::rounded_inside(Vec coords, const SpaceContext& ctx) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double norm = coords.norm();
    if (norm >= ctx.s && norm <= ctx.s * (1.0 + 16.0 * eps))
        coords *= ctx.s * (1.0 - 4.0 * eps) / norm;
    return BallPoint(std::move(coords), ctx);
}

double SignedGamma::gamma() const {
    if (kind != Kind::real)
        throw Error("gamma_domain", "gamma factor is not a real number here");
    return std::sqrt(gamma_sq);
}

}  // namespace gyrovec
