#pragma once

#include "cssf/curve.hpp"
#include "cssf/spline.hpp"

namespace cssf {

/// Arclength chart of an interpolating periodic spline: cumulative length
/// table per grid interval plus inversion (arclength -> parameter).
class ArclengthChart {
 public:
  explicit ArclengthChart(const CurveState& curve);

  double total_length() const { return total_; }
  /// Parameter x with arclength(x) = s, s measured from node 0.
  double parameter_at(double s) const;
  const PeriodicCubicSpline& spline() const { return spline_; }

 private:
  double segment_length(double from, double to) const;

  PeriodicCubicSpline spline_;
  std::vector<double> cumulative_; // cumulative_[i] = length of [0, x_i]
  double total_ = 0.0;
};

/// Total length of the interpolating spline through the samples.
double curve_length(const CurveState& curve);

/// Polygon (chord) length; cheap per-step diagnostic.
double polygon_length(const CurveState& curve);

/// Same locus, nodes equispaced in arclength starting from node 0.
/// Node count is preserved. Throws on immersion violation.
CurveState resample_arclength(const CurveState& curve);

} // namespace cssf
