#pragma once

#include "gyrovec/types.hpp"

namespace gyrovec {

/// Lorentz gamma factor of a point inside the ball,
///
///     gamma(v) = 1 / sqrt(1 - ||v||^2 / s^2).
///
/// The radicand is evaluated in the factored form (1 - q)(1 + q), q = ||v||/s,
/// which stays accurate for points within a few ulps of the boundary.
double gamma(const BallPoint& v, const SpaceContext& ctx);

/// Gamma of an arbitrary ambient vector, kept as a signed square.
/// ||v|| < s gives gamma_sq >= 1, ||v|| = s the infinite flag, and
/// ||v|| > s a negative gamma_sq (purely imaginary gamma).
SignedGamma gamma_signed(const Vec& v, const SpaceContext& ctx);

/// Einstein velocity addition on the extended domain: u must lie inside the
/// ball, v may be any ambient vector. Throws "denominator_vanishes" when
/// 1 + u.v/s^2 fails to be positive (the sum is undefined there).
Vec einstein_add(const BallPoint& u, const Vec& v, const SpaceContext& ctx);

/// Einstein addition of two ball points. Closure is a theorem; the result is
/// re-checked and returned as a BallPoint.
BallPoint einstein_add(const BallPoint& u, const BallPoint& v, const SpaceContext& ctx);

/// u (-) v = u (+) (-v).
Vec einstein_sub(const BallPoint& u, const Vec& v, const SpaceContext& ctx);
BallPoint einstein_sub(const BallPoint& u, const BallPoint& v, const SpaceContext& ctx);

/// The gyrovector from a to b: (-a) (+) b. Distinct from a (-) b in general;
/// the two agree only up to a gyration.
BallPoint gyrovector(const BallPoint& a, const BallPoint& b, const SpaceContext& ctx);
Vec gyrovector(const BallPoint& a, const Vec& b, const SpaceContext& ctx);

/// gamma of u (+) v through the gamma identity
/// gamma_u gamma_v (1 + u.v/s^2), without forming the sum.
double gamma_of_sum(const BallPoint& u, const BallPoint& v, const SpaceContext& ctx);

/// gamma of (-u) (+) v, i.e. gamma_u gamma_v (1 - u.v/s^2). Preferred over
/// composing einstein_sub with gamma when u and v are nearly equal.
double gamma_of_diff(const BallPoint& u, const BallPoint& v, const SpaceContext& ctx);

/// One-dimensional Einstein addition of magnitudes:
/// a (+) b = (a + b) / (1 + ab/s^2), for 0 <= a, b < s.
double scalar_norm_add(double a, double b, const SpaceContext& ctx);

}  // namespace gyrovec
