#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace gyrovec {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Unrestricted n-vector in the ambient space. Ball membership is not implied.
using AmbientVector = Vec;

/// Error with a stable machine-readable code ("ball_domain", "parse", ...).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Ambient space and ball parameters threaded through every operation.
///
/// `s` is the ball radius (the speed-of-light analogue), `dim` the ambient
/// dimension. Tolerances drive all approximate comparisons:
/// near(a, b) means |a - b| <= max(abs_tol, rel_tol * scale).
struct SpaceContext {
    double s = 1.0;
    int dim = 3;
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;

    SpaceContext() = default;
    SpaceContext(double radius, int n, double rel = 1e-9, double abs = 1e-12);

    void require_dim(const Vec& v, const char* what) const;

    bool near(double a, double b, double scale = 1.0) const;
    bool near(const Vec& a, const Vec& b, double scale = 1.0) const;
};

/// Point strictly inside the open s-ball. Construction enforces ||coords|| < s
/// with no epsilon shrinkage; boundary and exterior points stay AmbientVector.
class BallPoint {
public:
    BallPoint(Vec coords, const SpaceContext& ctx);

    const Vec& coords() const noexcept { return coords_; }
    double norm() const { return coords_.norm(); }
    int dim() const noexcept { return static_cast<int>(coords_.size()); }

    static BallPoint origin(const SpaceContext& ctx);

    /// For coordinates of a point that is interior by theorem but whose
    /// float image may have rounded onto the boundary: values within a few
    /// ulps of ||.|| = s are pulled back inside, anything further out still
    /// throws.
    static BallPoint rounded_inside(Vec coords, const SpaceContext& ctx);

private:
    Vec coords_;
};

/// Gamma factor stored as a signed square so that boundary (infinite) and
/// exterior (purely imaginary) cases are representable without choosing a
/// branch of the square root.
struct SignedGamma {
    enum class Kind { real, infinite, imaginary };

    double gamma_sq = 1.0;  // sign carries the classification
    Kind kind = Kind::real;

    bool is_real() const noexcept { return kind == Kind::real; }
    bool is_infinite() const noexcept { return kind == Kind::infinite; }
    bool is_imaginary() const noexcept { return kind == Kind::imaginary; }

    /// The real gamma value; only meaningful when kind == real.
    double gamma() const;
};

}  // namespace gyrovec
