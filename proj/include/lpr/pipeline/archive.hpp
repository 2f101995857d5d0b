#pragma once

#include <filesystem>
#include <vector>

#include "lpr/point_cloud.hpp"

namespace lpr::pipeline {

/// Processed-cloud archive: magic "LPRA", version, cloud count, then per
/// cloud the source_id, frame, point payload (float64 LE) and optional
/// intensity payload. Entry order is preserved; identical inputs produce
/// byte-identical archives.
void save_archive(const std::filesystem::path& path, const std::vector<PointCloud>& clouds);

std::vector<PointCloud> load_archive(const std::filesystem::path& path);

}  // namespace lpr::pipeline
