#pragma once

#include "chroma/coloring.hpp"
#include "chroma/fisk.hpp"
#include "chroma/graph.hpp"

#include <string>

namespace chroma {

// Deterministic DOT document. Color classes become fill colors; the Fisk
// carrier is drawn with highlighted vertices and edges.
std::string export_dot(const Graph& g, const Coloring* coloring = nullptr,
                       const FiskVariety* fisk = nullptr);

} // namespace chroma
