#pragma once

#include <numbers>
#include <stdexcept>
#include <vector>

namespace cssf {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Uniform periodic grid on [0, 2pi). Node count must be even (keeps
/// centered stencils symmetric across the period) and at least 16.
struct ParamGrid {
  int n_nodes = 0;
  double spacing = 0.0;
  std::vector<double> nodes;

  explicit ParamGrid(int n) {
    if (n < 16 || n % 2 != 0)
      throw std::invalid_argument("ParamGrid: n_nodes must be even and >= 16");
    n_nodes = n;
    spacing = kTwoPi / n;
    nodes.resize(n);
    for (int i = 0; i < n; ++i) nodes[i] = i * spacing;
  }

  /// Wraps any integer index into [0, n_nodes).
  int wrap(int i) const {
    int m = i % n_nodes;
    return m < 0 ? m + n_nodes : m;
  }
};

} // namespace cssf
