#pragma once

#include <vector>

#include "cssf/types.hpp"

namespace cssf {

/// Periodic cubic spline through n equally spaced samples on [0, period).
/// C2 across the seam; evaluation wraps the argument into the period.
class PeriodicCubicSpline {
 public:
  PeriodicCubicSpline(std::vector<Vec3> values, double period);

  Vec3 eval(double x) const;
  Vec3 eval_derivative(double x) const;

  int n() const { return static_cast<int>(values_.size()); }
  double period() const { return period_; }
  double spacing() const { return spacing_; }

 private:
  void locate(double x, int& interval, double& local) const;

  std::vector<Vec3> values_;
  std::vector<Vec3> second_; // second derivatives at nodes
  double period_;
  double spacing_;
};

} // namespace cssf
