#include "cssf/spline.hpp"

#include <cmath>
#include <stdexcept>

namespace cssf {

namespace {

// Solves the cyclic tridiagonal system (diag d, off-diagonal o, corner o)
// for each coordinate via the Sherman-Morrison rank-one update.
std::vector<Vec3> solve_cyclic_tridiagonal(double o, double d,
                                           const std::vector<Vec3>& rhs) {
  const int n = static_cast<int>(rhs.size());
  // Perturbed system: subtract gamma from first diag entry, o^2/gamma from
  // last; correction vector u = (gamma, 0, ..., 0, o).
  const double gamma = -d;
  std::vector<double> diag(n, d);
  diag[0] = d - gamma;
  diag[n - 1] = d - o * o / gamma;

  auto thomas = [&](const std::vector<Vec3>& b) {
    std::vector<Vec3> x(n);
    std::vector<double> cp(n);
    std::vector<Vec3> dp(n);
    cp[0] = o / diag[0];
    dp[0] = b[0] / diag[0];
    for (int i = 1; i < n; ++i) {
      const double m = diag[i] - o * cp[i - 1];
      cp[i] = o / m;
      dp[i] = (b[i] - o * dp[i - 1]) / m;
    }
    x[n - 1] = dp[n - 1];
    for (int i = n - 2; i >= 0; --i) x[i] = dp[i] - cp[i] * x[i + 1];
    return x;
  };

  std::vector<Vec3> y = thomas(rhs);
  std::vector<Vec3> ub(n, Vec3::Zero());
  ub[0] = Vec3::Constant(gamma);
  ub[n - 1] = Vec3::Constant(o);
  std::vector<Vec3> z = thomas(ub);

  // v = (1, 0, ..., 0, o/gamma)
  const Vec3 vy = y[0] + (o / gamma) * y[n - 1];
  const Vec3 vz = z[0] + (o / gamma) * z[n - 1];
  std::vector<Vec3> x(n);
  for (int i = 0; i < n; ++i)
    x[i] = y[i] - z[i].cwiseProduct(vy.cwiseQuotient(Vec3::Ones() + vz));
  return x;
}

} // namespace

PeriodicCubicSpline::PeriodicCubicSpline(std::vector<Vec3> values,
                                         double period)
    : values_(std::move(values)), period_(period) {
  const int n = static_cast<int>(values_.size());
  if (n < 3) throw std::invalid_argument("PeriodicCubicSpline: need >= 3");
  if (!(period > 0.0))
    throw std::invalid_argument("PeriodicCubicSpline: period must be > 0");
  spacing_ = period_ / n;

  // Continuity of the first derivative at every node:
  //   (h/6) M_{i-1} + (2h/3) M_i + (h/6) M_{i+1} = (p_{i+1}-2p_i+p_{i-1})/h
  const double h = spacing_;
  std::vector<Vec3> rhs(n);
  for (int i = 0; i < n; ++i) {
    const Vec3& prev = values_[(i - 1 + n) % n];
    const Vec3& next = values_[(i + 1) % n];
    rhs[i] = (next - 2.0 * values_[i] + prev) / h;
  }
  second_ = solve_cyclic_tridiagonal(h / 6.0, 2.0 * h / 3.0, rhs);
}

void PeriodicCubicSpline::locate(double x, int& interval,
                                 double& local) const {
  double t = std::fmod(x, period_);
  if (t < 0.0) t += period_;
  interval = static_cast<int>(t / spacing_);
  if (interval >= n()) interval = n() - 1;
  local = t - interval * spacing_;
}

Vec3 PeriodicCubicSpline::eval(double x) const {
  int i;
  double s;
  locate(x, i, s);
  const int j = (i + 1) % n();
  const double h = spacing_;
  const double u = h - s;
  return (second_[i] * (u * u * u) + second_[j] * (s * s * s)) / (6.0 * h) +
         (values_[i] / h - second_[i] * h / 6.0) * u +
         (values_[j] / h - second_[j] * h / 6.0) * s;
}

Vec3 PeriodicCubicSpline::eval_derivative(double x) const {
  int i;
  double s;
  locate(x, i, s);
  const int j = (i + 1) % n();
  const double h = spacing_;
  const double u = h - s;
  return (-second_[i] * (u * u) + second_[j] * (s * s)) / (2.0 * h) +
         (values_[j] - values_[i]) / h - (second_[j] - second_[i]) * h / 6.0;
}

} // namespace cssf
