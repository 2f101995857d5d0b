#pragma once

#include "lpr/point_cloud.hpp"

namespace lpr {

/// Keeps points with r_min <= sqrt(x^2+y^2+z^2) <= r_max (both bounds
/// inclusive, so a point exactly at a bound survives). Intensity rows are
/// filtered in lockstep and relative order is preserved. Requires a
/// Cartesian cloud and 0 <= r_min < r_max; an empty result is an error.
PointCloud range_filter(const PointCloud& cloud, double r_min, double r_max);

/// Voxel-grid downsample: membership by floor(coord / voxel_size) per axis,
/// one output point per occupied voxel at the arithmetic mean of its
/// members (intensity averaged the same way). Output is ordered by voxel
/// index, and member values are accumulated in sorted order so the result
/// is bit-identical under input permutation.
PointCloud voxel_downsample(const PointCloud& cloud, double voxel_size);

}  // namespace lpr
