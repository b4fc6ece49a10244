#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace cssf {

using Vec3 = Eigen::Vector3d;

/// Which time variable a curve lives in: physical time t or the
/// logarithmic time of the self-similar rescaling.
enum class FrameTag { physical, rescaled };

inline const char* frame_name(FrameTag tag) {
  return tag == FrameTag::physical ? "physical" : "rescaled";
}

} // namespace cssf
