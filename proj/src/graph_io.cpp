#include "chroma/graph_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace chroma {

std::string to_canonical_json(const Graph& g) {
    nlohmann::json doc;
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    doc["n"] = g.n();
    return doc.dump() + "\n";
}

namespace {

Graph graph_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw ParseError("graph json: expected object with fields 'n' and 'edges'");
    int n = doc["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("graph json: edge entries must be [u,v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, edges);
}

Graph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u)) continue; // blank line
        if (!(ls >> v)) throw ParseError("edge list: missing second endpoint", lineno);
        std::string rest;
        if (ls >> rest) throw ParseError("edge list: trailing tokens", lineno);
        edges.emplace_back(u, v);
        n = std::max(n, std::max(u, v) + 1);
    }
    return Graph(n, edges);
}

} // namespace

Graph graph_from_text(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return graph_from_json(text);
        break;
    }
    return graph_from_edge_list(text);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return graph_from_text(buf.str());
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write graph file: " + path);
    out << to_canonical_json(g);
}

} // namespace chroma
