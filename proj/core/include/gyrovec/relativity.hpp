#pragma once

#include "gyrovec/ball.hpp"
#include "gyrovec/types.hpp"

#include <optional>
#include <vector>

namespace gyrovec {

/// Spacetime vector in the (t, x) convention: plain time component plus an
/// n-dimensional space part. With this choice the Galilei boost is the exact
/// large-s limit of the Lorentz boost.
struct FourVector {
    double t = 0.0;
    Vec x;

    FourVector() = default;
    FourVector(double time, Vec space) : t(time), x(std::move(space)) {}

    FourVector operator+(const FourVector& other) const {
        return {t + other.t, Vec(x + other.x)};
    }
    FourVector operator*(double scalar) const { return {scalar * t, Vec(scalar * x)}; }
};

/// Four-velocity of a ball velocity: (gamma_v, gamma_v v).
FourVector four_velocity(const BallPoint& v, const SpaceContext& ctx);

/// Lorentz boost in vector form, valid in any dimension:
///
///   L(u)(t, x) = ( gamma_u (t + u.x/s^2),
///                  gamma_u u t + x + (1/s^2) (gamma_u^2/(1+gamma_u)) (u.x) u ).
FourVector boost_apply(const BallPoint& u, const FourVector& fv, const SpaceContext& ctx);

/// The classical 4x4 boost matrix; dimension 3 only.
Eigen::Matrix4d boost_matrix(const BallPoint& u, const SpaceContext& ctx);

/// Galilei boost (t, x) -> (t, x + v t), the s -> infinity limit of the
/// Lorentz boost.
FourVector galilei_boost(const Vec& v, const FourVector& fv);

/// Squared Minkowski norm t^2 - ||x||^2/s^2, sign preserved.
double minkowski_norm_sq(const FourVector& fv, const SpaceContext& ctx);

/// Particle with invariant mass m and velocity v. Negative m is permitted;
/// it is the bridge to barycentric weights.
struct Particle {
    double m = 1.0;
    BallPoint v;
};

FourVector four_momentum(const Particle& p, const SpaceContext& ctx);

enum class BallClass { inside, boundary, outside };

/// Resultant of a particle system: the invariant mass m0 (kept as a signed
/// square), the center-of-momentum velocity v0, and the classification of v0
/// against the ball that the sign of m0^2 encodes.
struct SystemResult {
    double m0_sq = 0.0;
    std::optional<double> m0;       // present when m0_sq >= 0 (0 on the boundary)
    Vec v0;
    SignedGamma gamma_v0;
    BallClass classification = BallClass::inside;
    double relativistic_mass = 0.0;  // sum of m_k gamma_{v_k} = m0 gamma_{v0}
};

/// Solve sum_k m_k (gamma_k, gamma_k v_k) = m0 (gamma_0, gamma_0 v0) for
/// (m0, v0):
///
///   m0^2 = (sum m_k)^2 + 2 sum_{j<k} m_j m_k (gamma_{(-v_j)(+)v_k} - 1),
///   v0   = sum m_k gamma_k v_k / sum m_k gamma_k,
///
/// with sign(m0) = sign(sum m_k gamma_k). The pairwise gamma factors go
/// through the gamma identity, never through difference vectors.
SystemResult resultant_invariant_mass(const std::vector<Particle>& system,
                                      const SpaceContext& ctx);

/// Newtonian counterpart: m0 = sum m_k, v0 = sum m_k v_k / sum m_k.
/// Velocities are unrestricted ambient vectors.
struct NewtonianParticle {
    double m = 1.0;
    Vec v;
};

struct NewtonianResult {
    double m0 = 0.0;
    Vec v0;
};

NewtonianResult newtonian_resultant(const std::vector<NewtonianParticle>& system);

}  // namespace gyrovec
