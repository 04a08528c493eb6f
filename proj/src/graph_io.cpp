#include "zdtpc/graph_io.hpp"

#include <json.hpp>

namespace zdtpc {

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.order();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.has_labels()) {
        nlohmann::ordered_json labels = nlohmann::ordered_json::object();
        for (Vertex v = 0; v < g.order(); ++v) labels[std::to_string(v)] = g.label(v);
        j["labels"] = std::move(labels);
    }
    return j.dump() + "\n";
}

Graph graph_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("graph file is not valid JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned())
        throw ParseError("graph file needs a non-negative integer \"n\"", 0);
    const auto n = j["n"].get<std::size_t>();
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array", 0);
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
                throw ParseError("each edge must be a pair of vertex indices", 0);
            edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
        }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_object()) throw ParseError("\"labels\" must be an object", 0);
        labels.resize(n);
        for (Vertex v = 0; v < n; ++v) labels[v] = "v" + std::to_string(v + 1);
        for (const auto& [key, value] : j["labels"].items()) {
            std::size_t used = 0;
            unsigned long index = 0;
            try {
                index = std::stoul(key, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != key.size() || index >= n || !value.is_string())
                throw ParseError("bad label entry \"" + key + "\"", 0);
            labels[index] = value.get<std::string>();
        }
    }
    return Graph(n, std::move(edges), std::move(labels));
}

std::string to_dot(const Graph& g, std::string_view name) {
    std::string out = "graph " + dot_quote(std::string(name)) + " {\n";
    for (Vertex v = 0; v < g.order(); ++v)
        out += "  " + std::to_string(v) + " [label=" + dot_quote(g.label(v)) + "];\n";
    for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    return out + "}\n";
}

}  // namespace zdtpc
