#pragma once

#include <vector>

#include "cssf/curve.hpp"
#include "cssf/types.hpp"

namespace cssf {

/// Cross-product magnitude threshold below which the normal direction is
/// reported undefined (|g'' x g'| < kFlatTol * |g'| * |g''|).
inline constexpr double kFlatTol = 1e-10;

/// Threshold on cos^2(psi) below which a node counts as (near-)tangent to
/// the radial direction and is excluded from integrands carrying
/// 1/cos(psi) or tan(psi).
inline constexpr double kTangencyTol = 1e-4;

/// Signed angle between the position vector xi and the plane orthogonal
/// to eta: asin(<xi,eta> / (|xi||eta|)), argument clamped to [-1, 1].
/// Overshoot beyond 1e-12 indicates corrupt input and throws.
double radial_angle(const Vec3& xi, const Vec3& eta);

/// Per-node differential-geometric data of a curve relative to the origin.
/// Where `normal_defined` is false, `normal` and `binormal_dir` are zero,
/// `proj_normal` is zero and `proj_binormal_sq` falls back to the
/// orthogonal-complement value |xi|^2 cos^2(psi); curvature-squared
/// weighted quantities remain well defined through `vol`.
struct GeometryFrame {
  std::vector<Vec3> d1;             // gamma'
  std::vector<Vec3> d2;             // gamma''
  std::vector<double> speed;        // |gamma'|
  std::vector<double> kappa;        // |gamma'' x gamma'| / |gamma'|^3
  std::vector<Vec3> normal;         // unit principal normal
  std::vector<Vec3> binormal_dir;   // unit vector along normal x gamma'
  std::vector<unsigned char> normal_defined;
  std::vector<double> psi;
  std::vector<double> sin_psi;
  std::vector<double> cos_psi;      // >= 0 by convention
  std::vector<double> proj_tangent_sq;  // |Proj_{gamma'} gamma|^2
  std::vector<double> proj_normal;      // <gamma, normal>
  std::vector<double> proj_binormal_sq; // |Proj_{normal x gamma'} gamma|^2
  std::vector<double> radius;           // |gamma|
  std::vector<double> vol;              // det(gamma, gamma', gamma'')
  double spacing = 0.0;

  int n() const { return static_cast<int>(d1.size()); }

  /// kappa^2 |Proj_{normal x gamma'} gamma|^2 via the determinant form
  /// vol^2 / |gamma'|^6; continuous through flat points.
  double kappa_sq_proj_binormal(int i) const {
    const double s = speed[i];
    return vol[i] * vol[i] / (s * s * s * s * s * s);
  }
};

/// Evaluates the frame. Throws "origin hit" when a node sits at the
/// origin, or on immersion violation.
GeometryFrame frame_eval(const CurveState& curve);

/// A sub-grid location where psi = +-pi/2 (curve momentarily radial).
struct TangencyPoint {
  double x_star;      // parameter estimate
  double kappa_star;  // interpolated curvature
  double radius_star; // interpolated |gamma|
  bool degenerate;    // cos^2(psi) touches zero flatter than quadratically
};

/// Locates all parameters where cos(psi) vanishes: clusters of nodes with
/// cos^2(psi) <= kTangencyTol, refined by a quadratic fit through the
/// three nodes nearest each local minimum. Empty result is valid.
std::vector<TangencyPoint> tangency_detect(const GeometryFrame& frame,
                                           const CurveState& curve);

} // namespace cssf
