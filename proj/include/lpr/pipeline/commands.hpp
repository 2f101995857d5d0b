#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lpr/pipeline/config.hpp"

namespace lpr::pipeline {

struct CommandOptions {
  std::filesystem::path out_dir = ".";
  std::optional<std::uint64_t> seed_override;
  int jobs = 1;
};

struct PreprocessResult {
  std::filesystem::path archive_path;
  std::filesystem::path manifest_path;
  std::size_t processed = 0;
  std::vector<std::string> failures;  // "file: message" per failed input
};

/// load -> range filter -> optional voxel downsample -> optional spherical
/// transform -> intensity normalization, archived in input order with a
/// manifest CSV of per-cloud point counts. Per-file failures are collected
/// rather than aborting the run.
PreprocessResult run_preprocess(const PipelineConfig& config, const CommandOptions& options);

struct DescribeResult {
  std::filesystem::path descriptor_path;
  std::size_t described = 0;
};

/// One descriptor per archived cloud through the configured graph, joined
/// with poses from the pose CSV. A source_id without a pose is a data
/// error naming it.
DescribeResult run_describe(const PipelineConfig& config,
                            const std::filesystem::path& archive_path,
                            const CommandOptions& options);

struct EvalResult {
  std::filesystem::path metrics_path;
  std::optional<double> recall_at_1;
  std::optional<double> recall_at_1_percent;
  std::size_t evaluated = 0;
};

/// Recall@1 and Recall@1% of a query set against a database set; the two
/// sets may come from different runs or datasets.
EvalResult run_eval(const PipelineConfig& config, const std::filesystem::path& query_path,
                    const std::filesystem::path& database_path, const CommandOptions& options);

struct ClusterResult {
  std::filesystem::path labels_path;
  std::filesystem::path scatter_path;
  int k = 0;
};

/// k-means over a descriptor set; labels CSV joined to poses plus an SVG
/// scatter of poses colored by cluster.
ClusterResult run_cluster(const PipelineConfig& config,
                          const std::filesystem::path& descriptor_path,
                          const CommandOptions& options);

struct BenchResult {
  std::filesystem::path csv_path;
  std::filesystem::path plot_path;
  std::vector<double> median_ms;  // one per size
};

/// Times preprocess + quantize + forward over generated clouds of the
/// requested sizes and reports median / p95 milliseconds per size.
BenchResult run_bench(const PipelineConfig& config, const std::vector<int>& sizes,
                      const CommandOptions& options);

}  // namespace lpr::pipeline
