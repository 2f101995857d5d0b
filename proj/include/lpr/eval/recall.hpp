#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lpr/point_cloud.hpp"
#include "lpr/sparse/conv.hpp"

namespace lpr::eval {

/// Axis-aligned square region, boundary inclusive.
struct TestArea {
  double center_x = 0.0;
  double center_y = 0.0;
  double side = 0.0;

  bool contains(double x, double y) const;
};

/// Retrieval protocol. Pose distances (positive matching) are 2-D
/// Euclidean on (x, y); z, when present, does not enter the metric.
struct EvalProtocol {
  double positive_threshold_m = 25.0;
  std::vector<TestArea> test_areas;
  int recall_percent_floor = 1;
  bool exclude_self = false;  // drop database entries with the query's source_id

  void validate() const;
};

enum class SetRole { query, database };

struct DescriptorEntry {
  std::string source_id;
  sparse::Descriptor descriptor;
  Pose pose;
};

struct DescriptorSet {
  std::vector<DescriptorEntry> entries;
  SetRole role = SetRole::database;

  std::size_t size() const { return entries.size(); }
  int dim() const;
  void validate() const;  // uniform dimension, unique source_ids
};

/// Partitions pose indices into (inside any area, outside all areas).
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_by_areas(
    std::span<const Pose> poses, std::span<const TestArea> areas);

/// Convenience overload partitioning a descriptor set by its poses.
std::pair<DescriptorSet, DescriptorSet> split_by_areas(const DescriptorSet& set,
                                                       std::span<const TestArea> areas);

struct RecallQuery {
  enum class Kind { top_n, one_percent };
  Kind kind = Kind::top_n;
  int n = 1;

  static RecallQuery top(int n);
  static RecallQuery one_percent();
};

struct RecallResult {
  std::size_t evaluated = 0;   // queries with at least one reachable positive
  std::size_t successes = 0;
  std::size_t candidates = 0;  // retrieved entries per query
  std::optional<double> recall;  // empty when no query was evaluated
};

/// Recall@N / Recall@1%: for each evaluated query, retrieve the n nearest
/// database descriptors (n = max(ceil(0.01 * |database|), floor) in
/// one-percent mode) and count a success when any retrieved pose lies
/// within positive_threshold_m. Queries without a reachable positive are
/// excluded from the denominator. Nearest-neighbor ties break by database
/// index, so results are reproducible bit-for-bit.
RecallResult recall_at(const DescriptorSet& queries, const DescriptorSet& database,
                       const EvalProtocol& protocol, const RecallQuery& query);

}  // namespace lpr::eval
