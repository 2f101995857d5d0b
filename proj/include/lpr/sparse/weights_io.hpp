#pragma once

#include <filesystem>

#include "lpr/sparse/graph.hpp"

namespace lpr::sparse {

/// Self-describing weight container: magic "LPRW", format version, a JSON
/// layer list with shapes, then the float32 little-endian payload in layer
/// order (per conv: k^3 matrices row-major, then bias; per norm: scale then
/// offset when present).
void save_weights(const std::filesystem::path& path, const LayerGraph& graph);

/// Loads weights into a graph built from configuration. The stored layer
/// list must match the graph structure exactly; mismatches raise
/// FormatError (container) or ShapeError (shapes).
void load_weights(const std::filesystem::path& path, LayerGraph& graph);

}  // namespace lpr::sparse
