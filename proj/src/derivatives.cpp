#include "cssf/derivatives.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cssf {

namespace {

// Centered stencil weights for the first and second derivative at
// accuracy 4 (half-width 2) and 6 (half-width 3), already divided by the
// denominator so that weight k multiplies f(x + k*h) / h^order.
struct Stencil {
  int half_width;
  double w[4]; // w[k] for offset +k; odd symmetry for order 1, even for 2
};

Stencil first_derivative_stencil(int accuracy) {
  if (accuracy == 4) return {2, {0.0, 8.0 / 12.0, -1.0 / 12.0, 0.0}};
  if (accuracy == 6) return {3, {0.0, 45.0 / 60.0, -9.0 / 60.0, 1.0 / 60.0}};
  throw std::invalid_argument("periodic_derivative: accuracy must be 4 or 6");
}

Stencil second_derivative_stencil(int accuracy) {
  if (accuracy == 4)
    return {2, {-30.0 / 12.0, 16.0 / 12.0, -1.0 / 12.0, 0.0}};
  if (accuracy == 6)
    return {3, {-490.0 / 180.0, 270.0 / 180.0, -27.0 / 180.0, 2.0 / 180.0}};
  throw std::invalid_argument("periodic_derivative: accuracy must be 4 or 6");
}

template <typename T>
std::vector<T> apply_stencil(std::span<const T> values, double spacing,
                             int order, int accuracy) {
  if (order != 1 && order != 2)
    throw std::invalid_argument("periodic_derivative: order must be 1 or 2");
  const int n = static_cast<int>(values.size());
  const Stencil st = order == 1 ? first_derivative_stencil(accuracy)
                                : second_derivative_stencil(accuracy);
  if (n < 2 * st.half_width + 1)
    throw std::invalid_argument("periodic_derivative: too few samples");

  const double scale =
      order == 1 ? 1.0 / spacing : 1.0 / (spacing * spacing);
  std::vector<T> out(n);
  for (int i = 0; i < n; ++i) {
    T acc = order == 2 ? T(st.w[0] * values[i]) : T(0.0 * values[i]);
    for (int k = 1; k <= st.half_width; ++k) {
      const T& fwd = values[(i + k) % n];
      const T& bwd = values[(i - k + n) % n];
      if (order == 1)
        acc += st.w[k] * (fwd - bwd);
      else
        acc += st.w[k] * (fwd + bwd);
    }
    out[i] = scale * acc;
  }
  return out;
}

} // namespace

std::vector<Vec3> periodic_derivative(std::span<const Vec3> values,
                                      double spacing, int order,
                                      int accuracy) {
  return apply_stencil(values, spacing, order, accuracy);
}

std::vector<double> periodic_derivative(std::span<const double> values,
                                        double spacing, int order,
                                        int accuracy) {
  return apply_stencil(values, spacing, order, accuracy);
}

std::vector<Vec3> differentiate(const CurveState& curve, int order,
                                int accuracy) {
  auto d = periodic_derivative(std::span<const Vec3>(curve.positions),
                               curve.grid.spacing, order, accuracy);
  if (order == 1) {
    double sum = 0.0, min_speed = std::numeric_limits<double>::infinity();
    for (const Vec3& v : d) {
      const double s = v.norm();
      sum += s;
      min_speed = std::min(min_speed, s);
    }
    const double mean = sum / static_cast<double>(d.size());
    if (!(min_speed > 1e-8 * mean))
      throw std::runtime_error("immersion violated: |gamma'| ~ 0 at a node");
  }
  return d;
}

double integrate_periodic(std::span<const double> values,
                          const ParamGrid& grid) {
  if (static_cast<int>(values.size()) != grid.n_nodes)
    throw std::invalid_argument("integrate_periodic: length mismatch");
  double sum = 0.0;
  for (double v : values) sum += v;
  return grid.spacing * sum;
}

} // namespace cssf
