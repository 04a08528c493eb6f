#pragma once

// Immutable simple undirected graphs on dense vertex indices 0..n-1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zdtpc/error.hpp"

namespace zdtpc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free vertex indices.
using CodeSet = std::vector<Vertex>;

CodeSet make_code(std::vector<Vertex> vertices);

class Graph {
public:
    Graph() = default;
    /// Edges may come in any order and orientation. Self-loops, duplicates and out-of-range
    /// endpoints throw PreconditionError. `labels` is empty or has exactly n entries.
    Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels = {});

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    /// Lexicographically sorted with u < v in every pair.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// Ascending.
    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Adjacency row of v as 64-bit words; bit u set iff u ~ v.
    std::span<const std::uint64_t> row(Vertex v) const;
    std::size_t words_per_row() const noexcept { return words_; }

    bool has_labels() const noexcept { return !labels_.empty(); }
    /// The sidecar label, or "v<i+1>" when the graph carries none.
    std::string label(Vertex v) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }

private:
    void check(Vertex v) const;

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adjacency_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::string> labels_;
};

Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_complete(std::size_t n);
/// Parts are 0..m-1 and m..m+n-1.
Graph make_complete_bipartite(std::size_t m, std::size_t n);
/// K_{1,n} with centre 0.
Graph make_star(std::size_t n);
/// g's vertices first, then one copy of h per vertex of g in order; vertex i of g is joined to
/// every vertex of copy i.
Graph corona(const Graph& g, const Graph& h);
/// The 8-vertex non-regular example graph with a code {v1,v2,v7,v8}.
Graph fixture_fig1();

/// t when every vertex has degree t.
std::optional<std::size_t> is_regular(const Graph& g);
/// Largest shortest-path distance; nullopt when the graph is disconnected.
std::optional<std::size_t> diameter(const Graph& g);
std::vector<Vertex> articulation_points(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
/// Distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);
/// Induced subgraph on `vertices` (sorted), reindexed in that order; labels carried along.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// True iff every vertex of `code` has exactly one neighbour inside `code`.
bool is_matching(const Graph& g, const CodeSet& code);
/// Every index in range, sorted and unique.
bool is_valid_code(const Graph& g, const CodeSet& code);

}  // namespace zdtpc
