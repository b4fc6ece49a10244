#pragma once

#include <utility>
#include <vector>

#include "cssf/grid.hpp"
#include "cssf/types.hpp"

namespace cssf {

/// A closed curve in R^3 sampled on a uniform periodic grid, stamped with
/// the time it was taken at. Index arithmetic on positions wraps mod n.
struct CurveState {
  ParamGrid grid;
  std::vector<Vec3> positions;
  FrameTag frame = FrameTag::rescaled;
  double time = 0.0; // tau when rescaled, t when physical

  CurveState(ParamGrid g, std::vector<Vec3> pos, FrameTag tag, double when)
      : grid(std::move(g)), positions(std::move(pos)), frame(tag), time(when) {
    if (static_cast<int>(positions.size()) != grid.n_nodes)
      throw std::invalid_argument("CurveState: positions/grid size mismatch");
  }

  int n() const { return grid.n_nodes; }
  const Vec3& at(int i) const { return positions[grid.wrap(i)]; }
};

/// Samples a closed curve x -> f(x) on a fresh n-node grid.
template <typename F>
CurveState sample_curve(int n, F&& f, FrameTag tag = FrameTag::rescaled,
                        double when = 0.0) {
  ParamGrid grid(n);
  std::vector<Vec3> pos(n);
  for (int i = 0; i < n; ++i) pos[i] = f(grid.nodes[i]);
  return CurveState(std::move(grid), std::move(pos), tag, when);
}

} // namespace cssf
