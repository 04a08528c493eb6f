#include "zdtpc/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>

namespace zdtpc {

CodeSet make_code(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), words_((n + 63) / 64), labels_(std::move(labels)) {
    if (n > std::numeric_limits<Vertex>::max()) throw PreconditionError("graph too large");
    if (!labels_.empty() && labels_.size() != n)
        throw PreconditionError("label count " + std::to_string(labels_.size()) + " does not match " +
                                std::to_string(n) + " vertices");
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw PreconditionError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
        if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw PreconditionError("duplicate edge {" + std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + "}");
    edges_ = std::move(edges);

    std::vector<std::size_t> deg(n, 0);
    for (auto [u, v] : edges_) ++deg[u], ++deg[v];
    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    adjacency_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    bits_.assign(n * words_, 0);
    for (auto [u, v] : edges_) {
        adjacency_[fill[u]++] = v;
        adjacency_[fill[v]++] = u;
        bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }
    for (std::size_t v = 0; v < n; ++v)
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
}

void Graph::check(Vertex v) const {
    if (v >= n_) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check(v);
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
    check(v);
    return {bits_.data() + v * words_, words_};
}

std::string Graph::label(Vertex v) const {
    check(v);
    return labels_.empty() ? "v" + std::to_string(v + 1) : labels_[v];
}

Graph make_path(std::size_t n) {
    if (n < 1) throw PreconditionError("path needs at least 1 vertex");
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph make_cycle(std::size_t n) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, static_cast<Vertex>(n - 1));
    return Graph(n, std::move(e));
}

Graph make_complete(std::size_t n) {
    if (n < 1) throw PreconditionError("complete graph needs at least 1 vertex");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph make_complete_bipartite(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw PreconditionError("complete bipartite parts must be nonempty");
    std::vector<Edge> e;
    for (Vertex i = 0; i < m; ++i)
        for (Vertex j = 0; j < n; ++j) e.emplace_back(i, static_cast<Vertex>(m + j));
    return Graph(m + n, std::move(e));
}

Graph make_star(std::size_t n) { return make_complete_bipartite(1, n); }

Graph corona(const Graph& g, const Graph& h) {
    const std::size_t ng = g.order(), nh = h.order();
    std::vector<Edge> e(g.edges());
    for (Vertex i = 0; i < ng; ++i) {
        const auto base = static_cast<Vertex>(ng + i * nh);
        for (auto [u, v] : h.edges()) e.emplace_back(base + u, base + v);
        for (Vertex w = 0; w < nh; ++w) e.emplace_back(i, base + w);
    }
    return Graph(ng + ng * nh, std::move(e));
}

Graph fixture_fig1() {
    return Graph(8, {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 7}, {6, 7}});
}

std::optional<std::size_t> is_regular(const Graph& g) {
    if (g.order() == 0) return 0;
    const auto t = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) != t) return std::nullopt;
    return t;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
    constexpr auto inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(g.order(), inf);
    std::deque<Vertex> queue{source};
    dist.at(source) = 0;
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (auto w : g.neighbors(v))
            if (dist[w] == inf) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::optional<std::size_t> diameter(const Graph& g) {
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        for (auto d : bfs_distances(g, v)) {
            if (d == std::numeric_limits<std::size_t>::max()) return std::nullopt;
            best = std::max(best, d);
        }
    return best;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        auto& comp = out.emplace_back();
        std::vector<Vertex> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (auto w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g); }

std::vector<Vertex> articulation_points(const Graph& g) {
    const std::size_t n = g.order();
    constexpr auto unvisited = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> disc(n, unvisited), low(n, 0);
    std::vector<bool> cut(n, false);
    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };
    std::size_t time = 0;
    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != unvisited) continue;
        std::size_t root_children = 0;
        std::vector<Frame> stack{{root, root, 0}};
        disc[root] = low[root] = time++;
        while (!stack.empty()) {
            auto& f = stack.back();
            const auto nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                const auto w = nb[f.next++];
                if (disc[w] == unvisited) {
                    disc[w] = low[w] = time++;
                    if (f.v == root) ++root_children;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const auto v = f.v, parent = f.parent;
            stack.pop_back();
            if (v == root) continue;
            low[parent] = std::min(low[parent], low[v]);
            if (parent != root && low[v] >= disc[parent]) cut[parent] = true;
        }
        if (root_children > 1) cut[root] = true;
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (cut[v]) out.push_back(v);
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> index(g.order(), std::numeric_limits<Vertex>::max());
    for (std::size_t i = 0; i < vertices.size(); ++i) index.at(vertices[i]) = static_cast<Vertex>(i);
    std::vector<Edge> e;
    for (auto [u, v] : g.edges())
        if (index[u] != std::numeric_limits<Vertex>::max() && index[v] != std::numeric_limits<Vertex>::max())
            e.emplace_back(index[u], index[v]);
    std::vector<std::string> labels;
    if (g.has_labels())
        for (auto v : vertices) labels.push_back(g.label(v));
    return Graph(vertices.size(), std::move(e), std::move(labels));
}

bool is_valid_code(const Graph& g, const CodeSet& code) {
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (code[i] >= g.order()) return false;
        if (i > 0 && code[i - 1] >= code[i]) return false;
    }
    return true;
}

bool is_matching(const Graph& g, const CodeSet& code) {
    for (auto c : code) {
        std::size_t inside = 0;
        for (auto d : code) inside += g.adjacent(c, d);
        if (inside != 1) return false;
    }
    return true;
}

}  // namespace zdtpc
