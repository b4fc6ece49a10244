#pragma once

#include <functional>

namespace cssf {

/// Adaptive Gauss-Kronrod (15-point Kronrod / 7-point Gauss) integration
/// of f over [a, b] to the requested absolute tolerance. Bisects while
/// the embedded error estimate exceeds the local budget; depth-capped so
/// integrable endpoint kinks terminate.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol = 1e-13);

} // namespace cssf
