#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "lpr/sparse/conv.hpp"

namespace lpr::sparse {

enum class Activation { relu };
enum class NormKind { layer };  // per-voxel standardization across channels

struct ConvLayer {
  int kernel = 3;
  int stride = 1;
  int in_dim = 0;
  int out_dim = 0;
  bool has_bias = true;
  std::vector<Eigen::MatrixXd> weights;  // k^3 matrices, (out_dim x in_dim) each
  std::optional<Eigen::VectorXd> bias;
};

struct TransposedConvLayer {
  int kernel = 2;
  int stride = 2;
  int in_dim = 0;
  int out_dim = 0;
  bool has_bias = true;
  int target_layer = -1;  // index of the layer whose output support is restored
  std::vector<Eigen::MatrixXd> weights;
  std::optional<Eigen::VectorXd> bias;
};

struct SkipLayer {
  int source_layer = -1;  // concatenate with that layer's saved output
};

struct ActivationLayer {
  Activation kind = Activation::relu;
};

struct NormLayer {
  NormKind kind = NormKind::layer;
  int dim = 0;
  // Folded affine statistics when a weight file supplies them.
  std::optional<Eigen::VectorXd> scale;
  std::optional<Eigen::VectorXd> offset;
};

struct GlobalPoolLayer {
  PoolKind kind = PoolKind::gem;
  double power = 3.0;
  bool l2_normalize = true;
};

using Layer = std::variant<ConvLayer, TransposedConvLayer, SkipLayer, ActivationLayer, NormLayer,
                           GlobalPoolLayer>;

const char* layer_kind_name(const Layer& layer);

/// Declarative network description: an ordered layer list ending in exactly
/// one GlobalPool. validate() checks dimension chaining, skip ordering, and
/// that every transposed conv undoes the stride of the encoder level it
/// targets.
struct LayerGraph {
  int input_dim = 1;
  std::vector<Layer> layers;

  void validate() const;
  int descriptor_dim() const;
  bool has_weights() const;
};

/// Knobs for the built-in U-shaped graph: len(widths) encoder levels with
/// stride-2 transitions, a mirrored decoder with skip connections, and a
/// head projecting to descriptor_dim.
struct GraphConfig {
  std::vector<int> widths{16, 32, 64};
  int descriptor_dim = 64;
  PoolKind pool = PoolKind::gem;
  double pool_power = 3.0;
  bool pool_normalize = true;
  int input_dim = 1;
};

LayerGraph make_unet_graph(const GraphConfig& cfg);

/// Deterministic pseudo-random weights, uniform in [-a, a] with
/// a = 1 / sqrt(fan_in * k^3); biases zero. Same seed, same weights.
void seed_weights(LayerGraph& graph, std::uint64_t seed);

/// Executes the graph on an already-quantized tensor.
Descriptor forward_tensor(const SparseTensor& input, const LayerGraph& graph);

/// Quantize then execute. Deterministic for fixed weights and input, and
/// bit-identical under permutations of the input point order.
Descriptor forward(const PointCloud& cloud, const LayerGraph& graph, const QuantizationSpec& spec,
                   FeatureMode mode);

}  // namespace lpr::sparse
