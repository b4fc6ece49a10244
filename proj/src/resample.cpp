#include "cssf/resample.hpp"

#include <cmath>
#include <stdexcept>

#include "cssf/derivatives.hpp"

namespace cssf {

namespace {

// 5-point Gauss-Legendre nodes/weights on [0, 1].
constexpr double gl_x[5] = {0.046910077030668004, 0.230765344947158454,
                            0.5, 0.769234655052841546, 0.953089922969331996};
constexpr double gl_w[5] = {0.118463442528094544, 0.239314335249683234,
                            0.284444444444444444, 0.239314335249683234,
                            0.118463442528094544};

} // namespace

ArclengthChart::ArclengthChart(const CurveState& curve)
    : spline_(curve.positions, kTwoPi) {
  differentiate(curve, 1); // immersion check on the input samples
  const int n = spline_.n();
  cumulative_.assign(n + 1, 0.0);
  for (int i = 0; i < n; ++i) {
    const double x0 = i * spline_.spacing();
    cumulative_[i + 1] =
        cumulative_[i] + segment_length(x0, x0 + spline_.spacing());
  }
  total_ = cumulative_[n];
}

double ArclengthChart::segment_length(double from, double to) const {
  const double len = to - from;
  double acc = 0.0;
  for (int q = 0; q < 5; ++q)
    acc += gl_w[q] * spline_.eval_derivative(from + gl_x[q] * len).norm();
  return acc * len;
}

double ArclengthChart::parameter_at(double s) const {
  const int n = spline_.n();
  double target = std::fmod(s, total_);
  if (target < 0.0) target += total_;

  // Linear prediction into the monotone table, then a local scan.
  int i = static_cast<int>(target / total_ * n);
  if (i >= n) i = n - 1;
  while (i > 0 && cumulative_[i] > target) --i;
  while (i + 1 < n && cumulative_[i + 1] < target) ++i;

  const double h = spline_.spacing();
  const double x_lo = i * h;
  double lo = 0.0, hi = h;
  double need = target - cumulative_[i];
  // Newton with bisection safeguard on s(x) - target within the interval.
  double x = need / std::max(cumulative_[i + 1] - cumulative_[i], 1e-300) * h;
  for (int it = 0; it < 100; ++it) {
    const double fx = segment_length(x_lo, x_lo + x) - need;
    if (std::abs(fx) < 1e-14 * std::max(total_, 1.0)) break;
    if (fx > 0.0)
      hi = x;
    else
      lo = x;
    const double deriv = spline_.eval_derivative(x_lo + x).norm();
    double next = x - fx / deriv;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) < 1e-16 * h) {
      x = next;
      break;
    }
    x = next;
  }
  return x_lo + x;
}

double curve_length(const CurveState& curve) {
  return ArclengthChart(curve).total_length();
}

double polygon_length(const CurveState& curve) {
  double len = 0.0;
  for (int i = 0; i < curve.n(); ++i)
    len += (curve.at(i + 1) - curve.at(i)).norm();
  return len;
}

CurveState resample_arclength(const CurveState& curve) {
  const ArclengthChart chart(curve);
  const int n = curve.n();
  const double step = chart.total_length() / n;
  std::vector<Vec3> pos(n);
  pos[0] = curve.positions[0];
  for (int j = 1; j < n; ++j)
    pos[j] = chart.spline().eval(chart.parameter_at(j * step));
  return CurveState(curve.grid, std::move(pos), curve.frame, curve.time);
}

} // namespace cssf
