#include "gyrovec/motions.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace gyrovec {

Vec apply_euclidean(const EuclideanMotion& m, const Vec& a) {
    return m.translation + m.rotation.matrix() * a;
}

EuclideanMotion compose_euclidean(const EuclideanMotion& m1, const EuclideanMotion& m2) {
    return {Vec(m1.translation + m1.rotation.matrix() * m2.translation),
            RotationMatrix(m1.rotation.matrix() * m2.rotation.matrix())};
}

EuclideanMotion inverse_euclidean(const EuclideanMotion& m) {
    const Mat rt = m.rotation.matrix().transpose();
    return {Vec(-(rt * m.translation)), RotationMatrix(rt)};
}

BallPoint left_gyrotranslate(const BallPoint& x, const BallPoint& a, const SpaceContext& ctx) {
    return einstein_add(x, a, ctx);
}

BallPoint apply_gyromotion(const GyroMotion& m, const BallPoint& a, const SpaceContext& ctx) {
    const BallPoint rotated =
        BallPoint::rounded_inside(Vec(m.rotation.matrix() * a.coords()), ctx);
    return einstein_add(m.translation, rotated, ctx);
}

GyroMotion compose_gyromotions(const GyroMotion& m1, const GyroMotion& m2,
                               const SpaceContext& ctx) {
    const BallPoint r1x2(Vec(m1.rotation.matrix() * m2.translation.coords()), ctx);
    const BallPoint translation = einstein_add(m1.translation, r1x2, ctx);
    const RotationMatrix gyr = gyr_matrix({m1.translation, r1x2}, ctx);
    return {translation,
            RotationMatrix(gyr.matrix() * m1.rotation.matrix() * m2.rotation.matrix())};
}

GyroMotion inverse_gyromotion(const GyroMotion& m, const SpaceContext& ctx) {
    const Mat rt = m.rotation.matrix().transpose();
    return {BallPoint(Vec(-(rt * m.translation.coords())), ctx), RotationMatrix(rt)};
}

GyroDecomposition decompose_gyroisometry(
    const std::function<BallPoint(const BallPoint&)>& phi,
    const std::vector<BallPoint>& probes, const SpaceContext& ctx, double residual_tol) {
    const int n = ctx.dim;
    if (probes.size() < static_cast<std::size_t>(n))
        throw Error("degenerate_probe", "probe set must span the ambient space");
    {
        Mat p(n, static_cast<int>(probes.size()));
        for (std::size_t k = 0; k < probes.size(); ++k)
            p.col(static_cast<int>(k)) = probes[k].coords();
        Eigen::ColPivHouseholderQR<Mat> qr(p);
        qr.setThreshold(1e-10);
        if (qr.rank() < n)
            throw Error("degenerate_probe", "probe set must span the ambient space");
    }

    GyroDecomposition result;
    const BallPoint image_of_origin = phi(BallPoint::origin(ctx));
    result.translation = image_of_origin.coords();

    // R eps e_i = (-phi O) (+) phi(eps e_i); the probe scale keeps the basis
    // probes well inside the ball while avoiding cancellation.
    const double eps = 0.1 * ctx.s;
    Mat raw(n, n);
    for (int i = 0; i < n; ++i) {
        const BallPoint probe(Vec(eps * Vec::Unit(n, i)), ctx);
        raw.col(i) = gyrovector(image_of_origin, phi(probe).coords(), ctx) / eps;
    }

    // Polar factor: the nearest orthogonal matrix scrubs float noise without
    // biasing toward any particular column.
    Eigen::JacobiSVD<Mat> svd(raw, Eigen::ComputeFullU | Eigen::ComputeFullV);
    result.linear_map = svd.matrixU() * svd.matrixV().transpose();

    double worst = 0.0;
    for (const BallPoint& p : probes) {
        const Vec predicted =
            einstein_add(image_of_origin, Vec(result.linear_map * p.coords()), ctx);
        worst = std::max(worst, (phi(p).coords() - predicted).norm());
    }
    result.residual = worst;

    if (worst > residual_tol)
        result.status = GyroDecomposition::Status::not_a_gyroisometry;
    else if (result.linear_map.determinant() < 0.0)
        result.status = GyroDecomposition::Status::opposite_isometry;
    else
        result.status = GyroDecomposition::Status::ok;
    return result;
}

GyrocovarianceReport check_gyrocovariance(const PointMap& map,
                                          const std::vector<std::vector<BallPoint>>& samples,
                                          const std::vector<GyroMotion>& motions,
                                          const SpaceContext& ctx) {
    GyrocovarianceReport report;
    for (const auto& tuple : samples) {
        const Vec value = map(tuple, ctx);
        for (const GyroMotion& motion : motions) {
            const BallPoint& x = motion.translation;
            const Mat& r = motion.rotation.matrix();

            std::vector<BallPoint> translated;
            std::vector<BallPoint> rotated;
            translated.reserve(tuple.size());
            rotated.reserve(tuple.size());
            for (const BallPoint& a : tuple) {
                translated.push_back(einstein_add(x, a, ctx));
                rotated.emplace_back(Vec(r * a.coords()), ctx);
            }

            const Vec lhs_t = einstein_add(x, value, ctx);
            const Vec rhs_t = map(translated, ctx);
            const double scale_t = std::max({ctx.s, lhs_t.norm(), rhs_t.norm()});
            report.translation_residual =
                std::max(report.translation_residual, (lhs_t - rhs_t).norm() / scale_t);

            const Vec lhs_r = r * value;
            const Vec rhs_r = map(rotated, ctx);
            const double scale_r = std::max({ctx.s, lhs_r.norm(), rhs_r.norm()});
            report.rotation_residual =
                std::max(report.rotation_residual, (lhs_r - rhs_r).norm() / scale_r);
        }
    }
    return report;
}

}  // namespace gyrovec
