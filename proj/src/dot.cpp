#include "chroma/dot.hpp"

#include <set>
#include <sstream>

namespace chroma {

namespace {

const char* kPalette[] = {
    "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3", "#a6d854", "#ffd92f",
    "#e5c494", "#b3b3b3", "#1b9e77", "#d95f02", "#7570b3", "#e7298a",
};
constexpr int kPaletteSize = 12;

} // namespace

std::string export_dot(const Graph& g, const Coloring* coloring, const FiskVariety* fisk) {
    std::set<int> carrier_vertices;
    std::set<std::pair<int, int>> carrier_edges;
    if (fisk) {
        for (int v : fisk->carrier_vertices) carrier_vertices.insert(v);
        for (auto [u, v] : fisk->carrier.edge_list())
            carrier_edges.insert({std::min(fisk->carrier_vertices[u], fisk->carrier_vertices[v]),
                                  std::max(fisk->carrier_vertices[u], fisk->carrier_vertices[v])});
    }

    std::ostringstream out;
    out << "graph {\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < g.n(); ++v) {
        out << "  " << v << " [";
        if (coloring) {
            int c = coloring->colors[v];
            out << "style=filled, fillcolor=\"" << kPalette[c % kPaletteSize] << "\", label=\""
                << v << "/" << c << "\"";
        } else {
            out << "label=\"" << v << "\"";
        }
        if (carrier_vertices.count(v)) out << ", penwidth=2.5, color=\"#d62728\"";
        out << "];\n";
    }
    for (auto [u, v] : g.edge_list()) {
        out << "  " << u << " -- " << v;
        if (carrier_edges.count({u, v})) out << " [color=\"#d62728\", penwidth=2.5]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace chroma
