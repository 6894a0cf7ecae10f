#pragma once

#include "gyrovec/ball.hpp"
#include "gyrovec/types.hpp"

namespace gyrovec {

/// Orthogonal matrix with determinant +1, validated at construction.
class RotationMatrix {
public:
    explicit RotationMatrix(Mat m, double tol = 1e-9);

    const Mat& matrix() const noexcept { return m_; }
    int dim() const noexcept { return static_cast<int>(m_.rows()); }

    Vec apply(const Vec& v) const { return m_ * v; }
    RotationMatrix transpose() const { return RotationMatrix(m_.transpose()); }

    static RotationMatrix identity(int n) { return RotationMatrix(Mat::Identity(n, n)); }

private:
    Mat m_;
};

/// Gyration gyr[u, v]: the rotation measuring how far Einstein addition is
/// from being associative and commutative. Held lazily by its generating
/// pair; apply() evaluates the closed-form linear map, matrix() materializes
/// it by applying the map to the standard basis.
struct Gyration {
    BallPoint u;
    BallPoint v;
};

/// Apply gyr[u, v] to an ambient vector. w is unrestricted: the closed form
/// involves gamma factors of u and v only, so the map extends to a linear map
/// of the whole ambient space.
Vec gyr_apply(const Gyration& p, const Vec& w, const SpaceContext& ctx);
BallPoint gyr_apply(const Gyration& p, const BallPoint& w, const SpaceContext& ctx);

/// Materialize gyr[u, v] as an n-by-n rotation matrix.
RotationMatrix gyr_matrix(const Gyration& p, const SpaceContext& ctx);

}  // namespace gyrovec
