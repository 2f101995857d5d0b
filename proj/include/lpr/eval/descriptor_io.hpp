#pragma once

#include <filesystem>

#include "lpr/eval/recall.hpp"

namespace lpr::eval {

/// Descriptor-set container: magic "LPRD", version, descriptor dimension
/// and row count, then per row the source_id, pose, and the float32
/// little-endian descriptor payload. Writing the same set twice produces
/// byte-identical files.
void save_descriptor_set(const std::filesystem::path& path, const DescriptorSet& set);

DescriptorSet load_descriptor_set(const std::filesystem::path& path);

}  // namespace lpr::eval
