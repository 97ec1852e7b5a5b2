#pragma once

#include "chroma/graph.hpp"

#include <string>

namespace chroma {

// Canonical graph document: compact JSON {"edges":[[u,v],...],"n":N} with
// u < v, edges sorted lexicographically, one trailing newline. Writers emit
// this form bit-exactly.
std::string to_canonical_json(const Graph& g);

// Accepts the canonical JSON document or a plain edge-list text
// ("u v" per line, n inferred as max vertex + 1).
Graph graph_from_text(const std::string& text);

Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

} // namespace chroma
