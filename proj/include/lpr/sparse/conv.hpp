#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "lpr/sparse/kernel_map.hpp"
#include "lpr/sparse/tensor.hpp"

namespace lpr::sparse {

/// Generalized sparse convolution. weights holds k^3 matrices of shape
/// (out_dim x in_dim), one per kernel offset in kernel_offsets() order.
/// Output feature at row u is sum over offsets kappa with a mapped input
/// row v of W_kappa * feature(v), plus the optional bias.
SparseTensor sparse_conv(const SparseTensor& input, const std::vector<Eigen::MatrixXd>& weights,
                         const std::optional<Eigen::VectorXd>& bias, const KernelMap& map);

/// Decoder-side transposed convolution: scatters coarse features back onto
/// target_coords (the encoder-level coordinate set being restored).
/// Output row v = sum over offsets kappa of W_kappa * feature(v - kappa *
/// out_stride) where the input row exists; out_stride = input stride /
/// conv_stride. A target coordinate no kernel offset can reach is a
/// coordinate error.
SparseTensor transposed_sparse_conv(const SparseTensor& input,
                                    const std::vector<Eigen::MatrixXd>& weights,
                                    const std::optional<Eigen::VectorXd>& bias,
                                    const std::vector<VoxelCoord>& target_coords, int kernel_size,
                                    int conv_stride);

/// Per-coordinate concatenation (decoder dims then encoder dims) over an
/// identical coordinate set; output keeps the decoder's row order.
SparseTensor skip_concat(const SparseTensor& decoder, const SparseTensor& encoder);

enum class PoolKind { mean, max, gem };

struct Descriptor {
  Eigen::VectorXd values;
  bool normalized = false;

  int dim() const { return static_cast<int>(values.size()); }
};

/// Reduces all voxels to one vector per feature channel: mean, max, or the
/// generalized mean (sum f^p / n)^(1/p) with features clamped at 0 (gem
/// requires p >= 1). With l2_normalize the result is scaled to unit
/// Euclidean norm unless it is the zero vector.
Descriptor global_pool(const SparseTensor& input, PoolKind kind, double power = 3.0,
                       bool l2_normalize = true);

const char* pool_kind_name(PoolKind kind);
PoolKind pool_kind_from_name(const std::string& name);

}  // namespace lpr::sparse
