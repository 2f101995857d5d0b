#pragma once

#include <filesystem>
#include <unordered_map>
#include <vector>

#include "lpr/point_cloud.hpp"

namespace lpr::io {

/// Reads a binary scan of consecutive little-endian float32 (x, y, z,
/// intensity) records, 16 bytes per point (the usual Velodyne export
/// layout). The file length must be a non-zero multiple of 16 and all
/// values finite. source_id is the file stem.
///
/// metadata["coord_convention"] records whether the coordinates fit a unit
/// cube ("unit_cube") or look metric ("metric"); submap datasets ship both
/// and downstream steps may want to know which they got.
PointCloud load_xyzi_binary(const std::filesystem::path& path);

/// Inverse of load_xyzi_binary. Valid files round-trip byte-exactly.
void write_xyzi_binary(const std::filesystem::path& path, const PointCloud& cloud);

/// Column names expected in a cloud CSV. The intensity column is optional
/// in the file; x/y/z are mandatory.
struct CsvColumns {
  std::string x = "x";
  std::string y = "y";
  std::string z = "z";
  std::string intensity = "intensity";
};

/// Reads a UTF-8 CSV with a header row into a Cartesian cloud. A missing
/// intensity column yields a cloud without intensity; unparseable or
/// non-finite cells raise DataError naming the line.
PointCloud load_csv_cloud(const std::filesystem::path& path, const CsvColumns& columns = {});

/// Pose CSV: header row, columns source_id,timestamp,x,y[,z].
std::vector<Pose> load_pose_csv(const std::filesystem::path& path);

/// Index by source_id. Duplicate ids raise DataError.
std::unordered_map<std::string, Pose> pose_index(const std::vector<Pose>& poses);

}  // namespace lpr::io
