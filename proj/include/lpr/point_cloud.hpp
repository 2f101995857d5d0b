#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lpr {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

enum class Frame { cartesian, spherical };

/// One LiDAR scan. In the spherical frame the x/y/z slots hold
/// (range [m], azimuth theta [deg], polar phi [deg]) with theta in
/// (-180, 180] (possibly shifted by the sensor convention) and phi in
/// [0, 180]. Immutable by convention once built; every operation returns
/// a new cloud.
struct PointCloud {
  std::vector<Vec3> points;
  std::optional<std::vector<double>> intensity;
  Frame frame = Frame::cartesian;
  std::string source_id;
  // Free-form annotations recorded by loaders, e.g. coord_convention.
  std::map<std::string, std::string> metadata;

  std::size_t size() const { return points.size(); }
  bool has_intensity() const { return intensity.has_value(); }

  /// Throws EmptyError / DataError when the intensity row count or point
  /// count violates the cloud invariants.
  void validate() const;
};

struct Pose {
  std::string source_id;
  double x = 0.0;
  double y = 0.0;
  std::optional<double> z;
  double timestamp = 0.0;
};

const char* frame_name(Frame f);

}  // namespace lpr
