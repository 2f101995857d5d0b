#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lpr::intensity {

/// Equal-width histogram over [lo, hi] with cumulative counts, the working
/// state of histogram equalization. c_min is the smallest nonzero
/// cumulative count.
struct IntensityHistogram {
  int bin_count = 0;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<std::int64_t> counts;
  std::vector<std::int64_t> cumulative;
  std::int64_t total = 0;
  std::int64_t c_min = 0;

  int bin_of(double value) const;
};

IntensityHistogram build_histogram(std::span<const double> values, int bins);

/// Maps values through an existing histogram's cumulative distribution:
/// s = (C(bin) - c_min) / (N - c_min), already in [0, 1]. When only one
/// bin is occupied every value maps to 1.
std::vector<double> equalize_against(const IntensityHistogram& hist,
                                     std::span<const double> values);

/// Histogram equalization of one scan's intensity channel. Output order
/// matches input order; the maximum is exactly 1 whenever at least two
/// bins are occupied.
std::vector<double> equalize(std::span<const double> values, int bins = 256);

/// Plain min-max scaling (v - min) / (max - min); all-constant input maps
/// to all zeros.
std::vector<double> scale_to_unit(std::span<const double> values);

}  // namespace lpr::intensity
