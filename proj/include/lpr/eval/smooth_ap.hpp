#pragma once

#include <cstdint>
#include <optional>
#include <span>

namespace lpr::eval {

struct SmoothApConfig {
  double tau = 0.01;                // sigmoid temperature
  std::optional<int> truncation;    // top-k candidate pool; unset = all

  void validate() const;
};

/// Sigmoid-relaxed average precision of one ranking. Hard rank indicators
/// are replaced by sigmoid((s_j - s_i) / tau); as tau -> 0 the value
/// approaches exact AP. Scores are similarities (higher ranks earlier).
/// Truncation restricts the candidate pool to the top-k scores (ties by
/// index) before relaxation. Requires at least one positive.
double smooth_ap(std::span<const double> scores, std::span<const std::uint8_t> positive_mask,
                 const SmoothApConfig& config = {});

}  // namespace lpr::eval
