#pragma once

#include <Eigen/Dense>

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "slipfield/errors.hpp"

namespace slipfield {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using VecX = Eigen::VectorXd;
using VecXi = Eigen::VectorXi;
using MatX = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;

// Elastic constants of an isotropic cubic crystal. mu > 0, nu in (-1, 1/2).
struct MaterialCubic {
    double mu;
    double nu;

    MaterialCubic(double mu_, double nu_);

    // eta = nu/(1-nu), in (-1/2, 1) over the admissible nu range.
    double eta() const { return nu / (1.0 - nu); }
    // Energy normalization constant reported in all outputs.
    double mu_over_4pi() const { return mu / (4.0 * kPi); }
};

// Singular interaction kernel for an isotropic cubic crystal,
//   Gamma(z) = mu / (16 pi (1-nu) |z|^3) *
//              [[nu+1-3 nu z2^2/|z|^2, 3 nu z1 z2/|z|^2],
//               [3 nu z1 z2/|z|^2,     nu+1-3 nu z1^2/|z|^2]].
// Homogeneous of degree -3; throws std::domain_error at z = 0.
Mat2 gamma_cubic(const Vec2& z, const MaterialCubic& mat);

// Angular part of a degree -3 homogeneous interaction kernel: a map from
// unit directions to NxN symmetric matrices. Kernels must be even,
// Gamma(z) = Gamma(-z); symmetry and evenness are validated on a sample
// grid at construction. Positivity is queried via kernel_positivity.
//
// Immutable after construction; all evaluations are pure.
class KernelOnCircle {
public:
    using Evaluator = std::function<MatX(const Vec2&)>;

    // Cubic closed form (dimension 2).
    static KernelOnCircle cubic(const MaterialCubic& mat);
    // Constant multiple of the identity, any dimension.
    static KernelOnCircle isotropic(double value, int dim);
    // Arbitrary angular evaluator, validated at m_ang sample angles.
    static KernelOnCircle from_evaluator(Evaluator f, int dim, int m_ang = 720);
    // Uniformly spaced angular table starting at theta = 0, covering
    // [0, 2pi) or [0, pi) (extended by evenness); linear interpolation.
    static KernelOnCircle from_table(const std::vector<MatX>& samples, bool half_circle = false);
    // CSV rows "theta, g11, g12, ..., gNN" with theta in radians,
    // uniformly spaced ascending from 0.
    static KernelOnCircle load_csv(const std::string& path);

    int dim() const { return dim_; }

    MatX at_angle(double theta) const;
    // z need not be normalized; only its direction enters. Throws on z = 0.
    MatX at_direction(const Vec2& z) const;

    // Full kernel Gamma(z) = |z|^-3 * angular(z/|z|).
    MatX gamma(const Vec2& z) const;

    bool tabulated() const { return !table_.empty(); }
    int table_size() const { return static_cast<int>(table_.size()); }

    // Eigenvalue range over the validation samples (not an error check).
    double sampled_min_eigenvalue() const { return sampled_min_eig_; }
    double sampled_max_eigenvalue() const { return sampled_max_eig_; }

    // Angular part of the -3 homogeneous real-space kernel whose induced
    // quadratic-form multiplier is |xi| * this(xi/|xi|): inverts the
    // angular transform  T[f](phi) = pi * Int f(theta) |cos(theta-phi)| dtheta,
    // which is diagonal over even circular harmonics. Returned as a table.
    KernelOnCircle real_space_shadow(int m_ang = 720) const;

private:
    KernelOnCircle() = default;
    void validate_structure(int m_ang);

    int dim_ = 0;
    Evaluator eval_;             // empty when tabulated
    std::vector<MatX> table_;    // uniform angles on [0, 2pi) when non-empty
    double sampled_min_eig_ = 0.0;
    double sampled_max_eig_ = 0.0;
};

// Min/max eigenvalue of the angular kernel over m_ang uniformly sampled
// directions (m_ang >= 8). Throws InadmissibleKernelError if any sampled
// eigenvalue is <= 0.
std::pair<double, double> kernel_positivity(const KernelOnCircle& k, int m_ang = 720);

// Degree-1 homogeneous Fourier multiplier |xi| * angular(xi/|xi|);
// the zero matrix at xi = 0.
MatX spectral_multiplier(const Vec2& xi, const KernelOnCircle& k);

} // namespace slipfield
