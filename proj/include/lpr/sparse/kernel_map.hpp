#pragma once

#include <utility>
#include <vector>

#include "lpr/sparse/tensor.hpp"

namespace lpr::sparse {

/// Precomputed gather lists for one convolution: for every kernel offset,
/// the (input row, output row) pairs where
///   input coordinate = output coordinate + offset * input_stride.
/// Output coordinates are the input set snapped to multiples of
/// input_stride * conv_stride (identity when conv_stride is 1), kept
/// sorted; pair lists are in canonical (output-row, offset) build order.
struct KernelMap {
  int kernel_size = 3;
  int conv_stride = 1;
  std::vector<VoxelCoord> out_coords;
  std::array<std::int32_t, 3> out_stride{1, 1, 1};
  std::optional<std::int32_t> theta_period;
  std::vector<std::vector<std::pair<int, int>>> pairs;  // one list per offset

  std::size_t pair_count() const;
};

/// Kernel offset grid: centered [-(k-1)/2, (k-1)/2] per axis for odd k,
/// forward [0, k) per axis for even k. Lexicographic order.
std::vector<VoxelCoord> kernel_offsets(int kernel_size);

/// Public kernel-map construction; requires odd kernel_size and
/// conv_stride >= 1.
KernelMap build_kernel_map(const SparseTensor& input, int kernel_size, int conv_stride);

namespace detail {
/// Same construction without the odd-kernel restriction; the graph
/// executor uses even kernels for its strided layers.
KernelMap make_kernel_map(const SparseTensor& input, int kernel_size, int conv_stride);
}  // namespace detail

}  // namespace lpr::sparse
