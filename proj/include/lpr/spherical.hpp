#pragma once

#include <string>
#include <vector>

#include "lpr/point_cloud.hpp"

namespace lpr::geom {

/// Angular coverage of one sensor model. theta_shift_deg rotates the
/// azimuth origin before wrapping, for sensors whose horizontal window is
/// not the full circle; presets ship with shift 0.
struct SensorFov {
  double horizontal_min_deg = -180.0;
  double horizontal_max_deg = 180.0;
  double vertical_min_deg = -90.0;
  double vertical_max_deg = 90.0;
  int channels = 1;
  double theta_shift_deg = 0.0;

  double horizontal_span_deg() const { return horizontal_max_deg - horizontal_min_deg; }
  bool full_circle() const;
  void validate() const;
};

/// Named presets: sick-lms151, vlp16, hdl64e, hdl32e, os1-128.
const SensorFov& sensor_preset(const std::string& name);
std::vector<std::string> sensor_preset_names();

/// Wraps an angle into (-180, 180].
double wrap_angle_deg(double deg);

/// Cartesian -> (r, theta, phi): r = sqrt(x^2+y^2+z^2), theta =
/// atan2(y, x) in degrees shifted by the sensor convention and wrapped
/// into (-180, 180], phi = arccos(z/r) in degrees. Points at the origin
/// map to (0, 0, 0). Intensity is carried through unchanged.
PointCloud to_spherical(const PointCloud& cloud, const SensorFov& fov);

/// (r, theta, phi) -> Cartesian, angles in degrees.
PointCloud from_spherical(const PointCloud& cloud);

}  // namespace lpr::geom
