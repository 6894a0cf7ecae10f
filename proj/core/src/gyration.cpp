#include "gyrovec/gyration.hpp"

#include <cmath>

namespace gyrovec {

RotationMatrix::RotationMatrix(Mat m, double tol) : m_(std::move(m)) {
    if (m_.rows() != m_.cols())
        throw Error("rotation", "rotation matrix must be square");
    const Mat residual = m_.transpose() * m_ - Mat::Identity(m_.rows(), m_.cols());
    if (residual.cwiseAbs().maxCoeff() > tol)
        throw Error("rotation", "matrix is not orthogonal within tolerance");
    const double det = m_.determinant();
    if (std::fabs(det - 1.0) > tol)
        throw Error("rotation", "matrix determinant " + std::to_string(det) + " is not +1");
}

Vec gyr_apply(const Gyration& p, const Vec& w, const SpaceContext& ctx) {
    ctx.require_dim(w, "gyr_apply");
    const double s2 = ctx.s * ctx.s;
    const double gu = gamma(p.u, ctx);
    const double gv = gamma(p.v, ctx);
    const Vec& uc = p.u.coords();
    const Vec& vc = p.v.coords();

    const double uv = uc.dot(vc);
    const double uw = uc.dot(w);
    const double vw = vc.dot(w);

    const double coeff_a = -(gu * gu / (gu + 1.0)) * (gv - 1.0) * uw / s2
                           + gu * gv * vw / s2
                           + 2.0 * (gu * gu * gv * gv / ((gu + 1.0) * (gv + 1.0)))
                                 * uv * vw / (s2 * s2);
    const double coeff_b = -(gv / (gv + 1.0))
                           * (gu * (gv + 1.0) * uw + (gu - 1.0) * gv * vw) / s2;
    const double denom = gu * gv * (1.0 + uv / s2) + 1.0;  // gamma_{u(+)v} + 1 > 1

    return w + (coeff_a * uc + coeff_b * vc) / denom;
}

BallPoint gyr_apply(const Gyration& p, const BallPoint& w, const SpaceContext& ctx) {
    return BallPoint::rounded_inside(gyr_apply(p, w.coords(), ctx), ctx);
}

RotationMatrix gyr_matrix(const Gyration& p, const SpaceContext& ctx) {
    const int n = ctx.dim;
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        m.col(i) = gyr_apply(p, Vec(Vec::Unit(n, i)), ctx);
    return RotationMatrix(std::move(m), ctx.rel_tol);
}

}  // namespace gyrovec
