#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpr/eval/recall.hpp"
#include "lpr/eval/smooth_ap.hpp"
#include "lpr/sparse/graph.hpp"
#include "lpr/spherical.hpp"

namespace lpr::pipeline {

/// Flat key-value config text: one `key = value` per line, '#' comments,
/// dotted keys. Serialization is sorted by key so parse -> serialize ->
/// parse is the identity and the hash is canonical.
using KvMap = std::map<std::string, std::string>;

KvMap parse_kv_text(const std::string& text);
KvMap parse_kv_file(const std::filesystem::path& path);
std::string serialize_kv(const KvMap& kv);

std::uint64_t fnv1a64(std::string_view bytes);
std::string config_hash(const KvMap& kv);  // 16 hex chars

/// Training-run metadata carried in configs for provenance. Recorded, not
/// executed: there is no training loop in this toolkit.
struct TrainingMetadata {
  int batch_size = 2048;
  int split_size = 16;
  double initial_lr = 1e-3;
  std::vector<int> lr_milestones{250, 350};
  double weight_decay = 1e-4;
  double sigmoid_tau = 0.01;
};

struct PipelineConfig {
  KvMap raw;
  std::string hash;

  // dataset
  std::string dataset_format = "xyzi";  // xyzi | csv
  std::filesystem::path cloud_dir;
  std::filesystem::path pose_csv;

  // sensor
  std::string sensor_name = "vlp16";
  geom::SensorFov sensor;

  // preprocessing
  std::optional<std::pair<double, double>> range_filter_m;
  std::optional<double> voxel_size_m;  // unset = "none"
  std::string coord_mode = "cartesian";      // cartesian | spherical
  std::string intensity_mode = "none";       // none | minmax | equalize
  int intensity_bins = 256;
  std::string intensity_scope = "scan";      // scan | run

  // quantization + network
  sparse::QuantizationSpec quantization;
  sparse::GraphConfig graph;
  std::optional<std::filesystem::path> weights_path;
  std::uint64_t seed = 0;

  // evaluation + clustering
  eval::EvalProtocol protocol;
  eval::SmoothApConfig smooth_ap;
  int cluster_k = 10;
  std::uint64_t cluster_seed = 1;

  // benchmark
  std::vector<int> bench_sizes{4096, 25000};
  int bench_repetitions = 20;

  TrainingMetadata training;

  static PipelineConfig load(const std::filesystem::path& path);
  /// base_dir resolves relative paths; referenced files must exist.
  static PipelineConfig from_kv(const KvMap& kv, const std::filesystem::path& base_dir);
};

}  // namespace lpr::pipeline
