#pragma once

#include <span>
#include <vector>

#include "cssf/curve.hpp"
#include "cssf/types.hpp"

namespace cssf {

/// Formal accuracy order of the periodic centered stencils. 4 is the
/// default everywhere; 6 is available where an extra-accurate derivative
/// is worth the wider stencil.
inline constexpr int kFdAccuracy = 4;

/// Periodic centered finite difference of a sampled field, order 1 or 2.
/// No validity checks beyond sizes; callers own any immersion policy.
std::vector<Vec3> periodic_derivative(std::span<const Vec3> values,
                                      double spacing, int order,
                                      int accuracy = kFdAccuracy);

std::vector<double> periodic_derivative(std::span<const double> values,
                                        double spacing, int order,
                                        int accuracy = kFdAccuracy);

/// Derivative of the curve position field. For order 1 the result is
/// checked against the immersion threshold min|g'| > 1e-8 * mean|g'|.
std::vector<Vec3> differentiate(const CurveState& curve, int order,
                                int accuracy = kFdAccuracy);

/// Periodic trapezoid rule: spacing * sum(values). Spectrally accurate
/// for smooth periodic integrands.
double integrate_periodic(std::span<const double> values,
                          const ParamGrid& grid);

} // namespace cssf
