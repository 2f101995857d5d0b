#include "lpr/point_cloud.hpp"

#include <cmath>

#include "lpr/error.hpp"

namespace lpr {

void PointCloud::validate() const {
  if (points.empty()) {
    throw EmptyError("point cloud '" + source_id + "' has no points");
  }
  if (intensity && intensity->size() != points.size()) {
    throw DataError("point cloud '" + source_id + "': intensity rows (" +
                    std::to_string(intensity->size()) + ") != point count (" +
                    std::to_string(points.size()) + ")");
  }
  if (frame == Frame::spherical) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Vec3& p = points[i];
      const bool ok = p.x >= 0.0 && p.y > -180.0 - 1e-9 && p.y <= 180.0 + 1e-9 && p.z >= -1e-9 &&
                      p.z <= 180.0 + 1e-9;
      if (!ok) {
        throw DataError("point cloud '" + source_id + "': spherical ranges violated at index " +
                        std::to_string(i));
      }
    }
  }
}

const char* frame_name(Frame f) {
  return f == Frame::cartesian ? "cartesian" : "spherical";
}

}  // namespace lpr
