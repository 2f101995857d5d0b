#pragma once

#include <Eigen/Core>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "lpr/point_cloud.hpp"

namespace lpr::sparse {

/// Integer voxel address. Coordinates always live on the stride-1 lattice
/// of the quantization grid; strided tensors keep snapped (multiple-of-
/// stride) values rather than re-scaling.
struct VoxelCoord {
  std::array<std::int32_t, 3> v{0, 0, 0};

  std::int32_t operator[](int axis) const { return v[static_cast<std::size_t>(axis)]; }
  std::int32_t& operator[](int axis) { return v[static_cast<std::size_t>(axis)]; }
  friend auto operator<=>(const VoxelCoord&, const VoxelCoord&) = default;
};

struct VoxelCoordHash {
  std::size_t operator()(const VoxelCoord& c) const noexcept {
    // FNV-1a over the three packed indices.
    std::uint64_t h = 1469598103934665603ull;
    for (std::int32_t x : c.v) {
      auto u = static_cast<std::uint32_t>(x);
      for (int shift = 0; shift < 32; shift += 8) {
        h ^= (u >> shift) & 0xffu;
        h *= 1099511628211ull;
      }
    }
    return static_cast<std::size_t>(h);
  }
};

/// Per-axis grid step. Cartesian mode steps are meters on x/y/z; spherical
/// mode steps are (r meters, theta degrees, phi degrees) and require a
/// spherical-frame cloud. theta_period, when set, is the azimuth wrap
/// modulus ceil(360 / theta_step) in voxel units: quantization then
/// canonicalizes theta bins into [0, period) and kernel maps connect
/// neighborhoods across the +-180 degree seam. Leave it unset for
/// partial-FoV sensors.
struct QuantizationSpec {
  enum class Mode { cartesian, spherical };

  Mode mode = Mode::cartesian;
  std::array<double, 3> step{0.1, 0.1, 0.1};
  std::optional<std::int32_t> theta_period;

  static QuantizationSpec cartesian(double step);
  static QuantizationSpec spherical(double r_step, double theta_step_deg, double phi_step_deg,
                                    bool wrap_theta);
  void validate() const;
};

enum class FeatureMode { ones, intensity };

/// Deduplicated voxel coordinates with one feature row per voxel.
/// Coordinates are kept lexicographically sorted so that every downstream
/// reduction visits rows in a permutation-independent order.
struct SparseTensor {
  std::vector<VoxelCoord> coords;
  Eigen::MatrixXd features;  // rows align with coords
  std::array<std::int32_t, 3> stride{1, 1, 1};
  std::optional<std::int32_t> theta_period;
  std::unordered_map<VoxelCoord, int, VoxelCoordHash> lookup;

  std::size_t size() const { return coords.size(); }
  int dim() const { return static_cast<int>(features.cols()); }
  void rebuild_lookup();
  void validate() const;
};

/// Voxel index per axis = floor(coordinate / step); duplicate voxels are
/// merged with the feature mean. Feature dimension is 1: constant 1.0 in
/// ones mode, the per-voxel mean intensity otherwise. Member values are
/// accumulated in sorted order, so the result is bit-identical under any
/// permutation of the input points.
SparseTensor quantize(const PointCloud& cloud, const QuantizationSpec& spec, FeatureMode mode);

/// floor division toward negative infinity.
constexpr std::int32_t floor_div(std::int32_t a, std::int32_t b) {
  std::int32_t q = a / b;
  std::int32_t r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

/// Canonical residue in [0, m).
constexpr std::int32_t wrap_mod(std::int32_t a, std::int32_t m) {
  std::int32_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace lpr::sparse
