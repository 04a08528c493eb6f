#include "zdtpc/tree_lab.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <map>

#include <json.hpp>

namespace zdtpc {

std::vector<Vertex> private_neighborhood(const Graph& g, const CodeSet& s, Vertex v) {
    if (!std::binary_search(s.begin(), s.end(), v))
        throw PreconditionError("vertex " + std::to_string(v) + " is not in the set");
    std::vector<Vertex> out;
    for (auto u : g.neighbors(v)) {
        bool other = false;
        for (auto w : g.neighbors(u))
            if (w != v && std::binary_search(s.begin(), s.end(), w)) {
                other = true;
                break;
            }
        if (!other) out.push_back(u);
    }
    return out;
}

bool is_quasi_isolated(const Graph& g, const CodeSet& s, Vertex v) {
    for (auto u : s)
        if (private_neighborhood(g, s, u) == std::vector<Vertex>{v}) return true;
    return false;
}

std::vector<Vertex> leaf_set(const Graph& t) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < t.order(); ++v)
        if (t.degree(v) == 1) out.push_back(v);
    return out;
}

Vertex k_support_vertex(const Graph& t, Vertex leaf, std::size_t k) {
    if (!is_tree(t)) throw PreconditionError("k-support vertices are defined on trees");
    if (t.degree(leaf) != 1) throw PreconditionError("vertex " + std::to_string(leaf) + " is not a leaf");
    const auto dist = bfs_distances(t, leaf);
    for (Vertex v = 0; v < t.order(); ++v)
        if (dist[v] == k) return v;
    throw PreconditionError("no vertex at distance " + std::to_string(k) + " from leaf " + std::to_string(leaf));
}

std::string_view to_string(GraftOp op) {
    switch (op) {
        case GraftOp::A1: return "A1";
        case GraftOp::A2: return "A2";
        case GraftOp::A3: return "A3";
        case GraftOp::A4: return "A4";
    }
    return "?";
}

GraftOp graft_op_from_string(std::string_view text) {
    for (auto op : {GraftOp::A1, GraftOp::A2, GraftOp::A3, GraftOp::A4})
        if (to_string(op) == text) return op;
    throw ParseError("unknown operation '" + std::string(text) + "'", 0);
}

std::string trace_to_json(const BuildTrace& trace) {
    nlohmann::ordered_json j;
    j["initial_length"] = trace.initial_length;
    auto steps = nlohmann::ordered_json::array();
    for (const auto& s : trace.steps) {
        nlohmann::ordered_json e;
        e["op"] = std::string(to_string(s.op));
        e["at"] = s.at;
        if (s.op != GraftOp::A2) e["length"] = s.length;
        if (s.op == GraftOp::A4) e["depth"] = s.depth;
        steps.push_back(std::move(e));
    }
    j["steps"] = std::move(steps);
    return j.dump(2) + "\n";
}

BuildTrace trace_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("trace is not valid JSON: ") + e.what(), e.byte);
    }
    auto count = [](const nlohmann::json& obj, const char* key) -> std::size_t {
        if (!obj.contains(key) || !obj[key].is_number_unsigned())
            throw ParseError(std::string("trace field '") + key + "' must be a non-negative integer", 0);
        return obj[key].get<std::size_t>();
    };
    if (!j.is_object()) throw ParseError("trace must be an object", 0);
    BuildTrace trace;
    trace.initial_length = count(j, "initial_length");
    if (j.contains("steps")) {
        if (!j["steps"].is_array()) throw ParseError("trace field 'steps' must be an array", 0);
        for (const auto& e : j["steps"]) {
            if (!e.is_object() || !e.contains("op") || !e["op"].is_string())
                throw ParseError("each step needs an 'op' string", 0);
            TreeBuildStep s;
            s.op = graft_op_from_string(e["op"].get<std::string>());
            s.at = static_cast<Vertex>(count(e, "at"));
            if (s.op != GraftOp::A2) s.length = count(e, "length");
            if (s.op == GraftOp::A4) s.depth = count(e, "depth");
            trace.steps.push_back(s);
        }
    }
    return trace;
}

Graph apply_step(const Graph& t, const CodeSet& code, const TreeBuildStep& step) {
    const std::string name(to_string(step.op));
    if (!is_tree(t)) throw PreconditionError(name + ": input is not a tree");
    if (step.at >= t.order()) throw PreconditionError(name + ": vertex " + std::to_string(step.at) + " out of range");
    if (!is_total_perfect_code(t, code)) throw PreconditionError(name + ": the given set is not a code of the tree");
    if (!std::binary_search(code.begin(), code.end(), step.at))
        throw PreconditionError(name + ": vertex " + std::to_string(step.at) + " is not in the code");
    if ((step.op == GraftOp::A3 || step.op == GraftOp::A4) && is_quasi_isolated(t, code, step.at))
        throw PreconditionError(name + ": vertex " + std::to_string(step.at) + " is quasi-isolated");

    const auto n = static_cast<Vertex>(t.order());
    std::vector<Edge> edges(t.edges());
    std::size_t added = 1;
    Vertex joint = n;
    switch (step.op) {
        case GraftOp::A2: break;
        case GraftOp::A1:
        case GraftOp::A3:
            if (step.length < 5 || step.length % 4 == 2)
                throw PreconditionError(name + ": path length " + std::to_string(step.length) +
                                        " needs length >= 5 and length mod 4 != 2");
            added = step.length;
            break;
        case GraftOp::A4:
            if (step.length % 2 == 0 || step.length % 8 == 3)
                throw PreconditionError(name + ": path length " + std::to_string(step.length) +
                                        " must be odd with length mod 8 != 3");
            if (step.depth == 0 || step.depth + 1 >= step.length)
                throw PreconditionError(name + ": depth " + std::to_string(step.depth) +
                                        " must name an interior vertex of the path");
            added = step.length;
            joint = n + static_cast<Vertex>(step.depth);
            break;
    }
    for (Vertex i = 0; i + 1 < added; ++i) edges.emplace_back(n + i, n + i + 1);
    edges.emplace_back(step.at, joint);
    return Graph(t.order() + added, std::move(edges));
}

BuildTrace generate_family_T(std::size_t initial_length, const std::vector<TreeBuildStep>& steps) {
    if (initial_length < 2 || initial_length % 4 == 1)
        throw PreconditionError("initial path length " + std::to_string(initial_length) +
                                " must be at least 2 and not 1 mod 4");
    BuildTrace trace;
    trace.initial_length = initial_length;
    trace.tree = make_path(initial_length);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& step = steps[i];
        if (step.at >= trace.tree.order())
            throw PreconditionError("step " + std::to_string(i) + ": vertex " + std::to_string(step.at) +
                                    " out of range");
        const auto code = find_tpc_containing(trace.tree, step.at);
        if (!code)
            throw PreconditionError("step " + std::to_string(i) + ": vertex " + std::to_string(step.at) +
                                    " lies in no code of the current tree");
        trace.tree = apply_step(trace.tree, *code, step);
        trace.steps.push_back(step);
        if (!tree_tpc(trace.tree)) {
            trace.failed_step = i;
            break;
        }
    }
    return trace;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw PreconditionError("uniform_below needs a positive bound");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

namespace {

std::vector<std::size_t> a4_depths(std::size_t length) {
    std::vector<std::size_t> out;
    if (length % 2 == 0 || length % 8 == 3) return out;
    for (std::size_t k = 1; k + 1 < length; ++k) {
        const auto other = length - 1 - k;
        if ((k % 4 == 0 || k % 4 == 3) && (other % 4 == 0 || other % 4 == 3)) out.push_back(k);
    }
    return out;
}

}  // namespace

BuildTrace random_family_T(std::uint64_t seed, std::size_t vertex_budget) {
    static constexpr std::size_t kStarts[] = {2, 3, 4, 6, 7, 8};
    if (vertex_budget < 2) throw PreconditionError("vertex budget must be at least 2");
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> starts;
    for (auto s : kStarts)
        if (s <= vertex_budget) starts.push_back(s);
    BuildTrace trace;
    trace.initial_length = starts[uniform_below(rng, starts.size())];
    trace.tree = make_path(trace.initial_length);

    for (int attempt = 0; attempt < 200; ++attempt) {
        const std::size_t room = vertex_budget - trace.tree.order();
        if (room == 0 || uniform_below(rng, 12) == 0) break;
        TreeBuildStep step;
        step.op = static_cast<GraftOp>(uniform_below(rng, 4));
        step.at = static_cast<Vertex>(uniform_below(rng, trace.tree.order()));
        const auto code = find_tpc_containing(trace.tree, step.at);
        if (!code) continue;
        if ((step.op == GraftOp::A3 || step.op == GraftOp::A4) && is_quasi_isolated(trace.tree, *code, step.at))
            continue;
        std::vector<std::size_t> lengths;
        if (step.op == GraftOp::A1 || step.op == GraftOp::A3) {
            for (std::size_t n = 5; n <= room; ++n)
                if (n % 4 == 0 || n % 4 == 1) lengths.push_back(n);
        } else if (step.op == GraftOp::A4) {
            for (std::size_t n = 5; n <= room; ++n)
                if (!a4_depths(n).empty()) lengths.push_back(n);
        }
        if (step.op != GraftOp::A2) {
            if (lengths.empty()) continue;
            step.length = lengths[uniform_below(rng, lengths.size())];
            if (step.op == GraftOp::A4) {
                const auto depths = a4_depths(step.length);
                step.depth = depths[uniform_below(rng, depths.size())];
            }
        }
        trace.tree = apply_step(trace.tree, *code, step);
        trace.steps.push_back(step);
        if (!tree_tpc(trace.tree)) {
            trace.failed_step = trace.steps.size() - 1;
            break;
        }
    }
    return trace;
}

Graph corona_family(CoronaKind kind, std::size_t length) {
    const std::size_t residue = kind == CoronaKind::three_mod_four ? 3 : kind == CoronaKind::zero_mod_four ? 0 : 2;
    if (length < 2 || length % 4 != residue)
        throw PreconditionError("corona length " + std::to_string(length) + " is not " + std::to_string(residue) +
                                " mod 4");
    return corona(make_path(length), make_path(1));
}

namespace {

std::pair<Graph, CodeSet> with_pendants(std::size_t base, const CodeSet& hosts, std::size_t pendants) {
    std::vector<Edge> edges(make_path(base).edges());
    for (std::size_t i = 0; i < pendants; ++i)
        edges.emplace_back(hosts[i % hosts.size()], static_cast<Vertex>(base + i));
    Graph g(base + pendants, std::move(edges));
    if (!is_total_perfect_code(g, hosts))
        throw std::logic_error("pendant construction lost its code on P_" + std::to_string(base));
    return {std::move(g), hosts};
}

}  // namespace

std::pair<Graph, CodeSet> round_robin_pendant_tree(std::size_t k, std::size_t base_length) {
    if (base_length < 2 || base_length % 4 != 2)
        throw PreconditionError("base length " + std::to_string(base_length) + " must be 2 mod 4");
    CodeSet hosts;
    for (Vertex i = 0; i < base_length; ++i)
        if (i % 4 < 2) hosts.push_back(i);
    return with_pendants(base_length, hosts, 2 * k + 2);
}

std::pair<Graph, CodeSet> paired_pendant_tree(std::size_t n) {
    if (n < 1) throw PreconditionError("paired_pendant_tree needs n >= 1");
    const std::size_t base = 4 * n - 1;
    CodeSet hosts;
    for (Vertex i = 0; i < base; ++i)
        if (i % 4 == 1 || i % 4 == 2) hosts.push_back(i);
    return with_pendants(base, hosts, 2 * n);
}

namespace {

constexpr std::size_t kMaxCanonical = 32;

/// Bounded-degree tree in flat arrays; the probe decodes millions of these.
struct SmallTree {
    std::size_t n = 0;
    std::array<std::uint8_t, kMaxCanonical> deg{};
    std::array<std::array<std::uint8_t, kMaxCanonical>, kMaxCanonical> nb{};

    void link(std::size_t a, std::size_t b) {
        nb[a][deg[a]++] = static_cast<std::uint8_t>(b);
        nb[b][deg[b]++] = static_cast<std::uint8_t>(a);
    }
};

SmallTree small_of(const Graph& g) {
    if (g.order() > kMaxCanonical)
        throw BoundError("canonical forms support trees of at most " + std::to_string(kMaxCanonical) + " vertices");
    SmallTree t;
    t.n = g.order();
    for (const auto& [a, b] : g.edges()) t.link(a, b);
    return t;
}

/// Balanced-parenthesis code as a bit string: '(' is 1, ')' is 0, most significant bit first.
struct Code {
    std::uint8_t len = 0;
    std::uint64_t bits = 0;
    auto operator<=>(const Code&) const = default;
};

Code encode_rooted(const SmallTree& t, std::size_t root) {
    std::array<std::uint8_t, kMaxCanonical> order{}, parent{};
    std::array<Code, kMaxCanonical> code{};
    std::array<std::array<Code, kMaxCanonical>, kMaxCanonical> kids;
    std::array<std::uint8_t, kMaxCanonical> kid_count{};
    std::size_t size = 1;
    order[0] = static_cast<std::uint8_t>(root);
    parent[root] = static_cast<std::uint8_t>(root);
    for (std::size_t i = 0; i < size; ++i) {
        const auto v = order[i];
        for (std::size_t j = 0; j < t.deg[v]; ++j) {
            const auto w = t.nb[v][j];
            if (w != parent[v]) {
                parent[w] = v;
                order[size++] = w;
            }
        }
    }
    for (std::size_t i = size; i-- > 0;) {
        const auto v = order[i];
        auto& ks = kids[v];
        std::sort(ks.begin(), ks.begin() + kid_count[v]);
        Code c{1, 1};
        for (std::size_t j = 0; j < kid_count[v]; ++j) {
            c.bits = (c.bits << ks[j].len) | ks[j].bits;
            c.len = static_cast<std::uint8_t>(c.len + ks[j].len);
        }
        c.bits <<= 1;
        ++c.len;
        code[v] = c;
        if (i > 0) kids[parent[v]][kid_count[parent[v]]++] = c;
    }
    return code[root];
}

Code canonical(const SmallTree& t) {
    if (t.n == 0) return {};
    std::array<std::uint8_t, kMaxCanonical> deg = t.deg;
    std::vector<std::size_t> layer;
    for (std::size_t v = 0; v < t.n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    std::size_t remaining = t.n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<std::size_t> next;
        for (auto v : layer)
            for (std::size_t j = 0; j < t.deg[v]; ++j)
                if (--deg[t.nb[v][j]] == 1) next.push_back(t.nb[v][j]);
        layer = std::move(next);
    }
    Code best = encode_rooted(t, layer[0]);
    if (layer.size() == 2) best = std::min(best, encode_rooted(t, layer[1]));
    return best;
}

std::string render(const Code& c) {
    std::string s;
    for (std::size_t i = c.len; i-- > 0;) s += (c.bits >> i) & 1 ? '(' : ')';
    return s;
}

SmallTree pruefer_tree(const std::vector<Vertex>& seq) {
    SmallTree t;
    t.n = seq.size() + 2;
    std::array<std::uint8_t, kMaxCanonical> deg;
    deg.fill(1);
    for (auto s : seq) ++deg[s];
    for (auto s : seq)
        for (std::size_t leaf = 0; leaf < t.n; ++leaf)
            if (deg[leaf] == 1) {
                t.link(leaf, s);
                --deg[leaf];
                --deg[s];
                break;
            }
    std::size_t a = t.n, b = 0;
    for (std::size_t v = 0; v < t.n; ++v)
        if (deg[v] == 1) (a == t.n ? a : b) = v;
    t.link(a, b);
    return t;
}

Graph graph_of(const SmallTree& t) {
    std::vector<Edge> e;
    for (std::size_t v = 0; v < t.n; ++v)
        for (std::size_t j = 0; j < t.deg[v]; ++j)
            if (v < t.nb[v][j]) e.emplace_back(static_cast<Vertex>(v), t.nb[v][j]);
    return Graph(t.n, std::move(e));
}

Graph without(const Graph& t, const std::vector<Vertex>& removed, Vertex keep, Vertex& keep_index) {
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < t.order(); ++v)
        if (std::find(removed.begin(), removed.end(), v) == removed.end()) rest.push_back(v);
    keep_index = static_cast<Vertex>(std::find(rest.begin(), rest.end(), keep) - rest.begin());
    return induced_subgraph(t, rest);
}

/// Degree-2 run starting at leaf `leaf`: the leaf, then each degree-2 vertex after it. `end`
/// receives the first vertex of other degree.
std::vector<Vertex> hanging_chain(const Graph& t, Vertex leaf, Vertex& end) {
    std::vector<Vertex> chain{leaf};
    Vertex prev = leaf, cur = t.neighbors(leaf)[0];
    while (t.degree(cur) == 2) {
        chain.push_back(cur);
        const auto nb = t.neighbors(cur);
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    end = cur;
    return chain;
}

class Reducer {
public:
    bool reducible(const Graph& t) {
        const auto key = canonical(small_of(t));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const bool result = compute(t);
        memo_[key] = result;
        return result;
    }

private:
    bool compute(const Graph& t) {
        const std::size_t n = t.order();
        std::size_t max_degree = 0;
        for (Vertex v = 0; v < n; ++v) max_degree = std::max(max_degree, t.degree(v));
        if (n >= 2 && max_degree <= 2) return n % 4 != 1;
        if (n < 2) return false;

        // Undo A2: drop a leaf whose support lies in some code of what remains.
        for (auto leaf : leaf_set(t)) {
            Vertex at = 0;
            const auto rest = without(t, {leaf}, t.neighbors(leaf)[0], at);
            if (find_tpc_containing(rest, at) && reducible(rest)) return true;
        }
        // Undo A1 (A3 adds a condition, so A1 covers it): strip the last `len` chain vertices.
        for (auto leaf : leaf_set(t)) {
            Vertex end = 0;
            const auto chain = hanging_chain(t, leaf, end);
            for (std::size_t len = 5; len <= chain.size(); ++len) {
                if (len % 4 == 2) continue;
                const std::vector<Vertex> strip(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(len));
                const Vertex host = len < chain.size() ? chain[len] : end;
                Vertex at = 0;
                const auto rest = without(t, strip, host, at);
                if (find_tpc_containing(rest, at) && reducible(rest)) return true;
            }
        }
        // Undo A4: a degree-3 vertex carrying two bare arms.
        for (Vertex u = 0; u < n; ++u) {
            if (t.degree(u) != 3) continue;
            const auto nb = t.neighbors(u);
            for (std::size_t h = 0; h < 3; ++h) {
                std::vector<Vertex> strip{u};
                bool bare = true;
                for (std::size_t i = 0; i < 3 && bare; ++i) {
                    if (i == h) continue;
                    Vertex prev = u, cur = nb[i];
                    while (bare) {
                        strip.push_back(cur);
                        if (t.degree(cur) == 1) break;
                        if (t.degree(cur) != 2) bare = false;
                        const auto cn = t.neighbors(cur);
                        const Vertex next = cn[0] == prev ? cn[1] : cn[0];
                        prev = cur;
                        cur = next;
                    }
                }
                const std::size_t len = strip.size();
                if (!bare || len % 2 == 0 || len % 8 == 3) continue;
                Vertex at = 0;
                const auto rest = without(t, strip, nb[h], at);
                if (!reducible(rest)) continue;
                for (const auto& code : enumerate_tpcs(rest))
                    if (std::binary_search(code.begin(), code.end(), at) && !is_quasi_isolated(rest, code, at))
                        return true;
            }
        }
        return false;
    }

    std::map<Code, bool> memo_;
};

}  // namespace

Graph tree_from_pruefer(const std::vector<Vertex>& seq) {
    for (auto s : seq)
        if (s >= seq.size() + 2) throw PreconditionError("Pruefer entry out of range");
    if (seq.size() + 2 > kMaxCanonical)
        throw BoundError("Pruefer decoding supports at most " + std::to_string(kMaxCanonical) + " vertices");
    return graph_of(pruefer_tree(seq));
}

std::string tree_canonical_form(const Graph& t) {
    if (!is_tree(t)) throw PreconditionError("canonical form needs a tree");
    return render(canonical(small_of(t)));
}

MembershipProbe membership_probe(std::size_t max_vertices) {
    MembershipProbe probe;
    if (max_vertices > kMaxCanonical)
        throw BoundError("membership probe supports at most " + std::to_string(kMaxCanonical) + " vertices");
    std::map<Code, Graph> classes;
    for (std::size_t n = 2; n <= max_vertices; ++n) {
        std::vector<Vertex> seq(n - 2, 0);
        while (true) {
            ++probe.labelled_trees;
            const auto tree = pruefer_tree(seq);
            const auto key = canonical(tree);
            if (!classes.count(key)) classes.emplace(key, graph_of(tree));
            std::size_t i = 0;
            while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
            if (i == seq.size()) break;
        }
    }
    Reducer reducer;
    probe.isomorphism_classes = classes.size();
    for (const auto& [key, tree] : classes) {
        if (!tree_tpc(tree)) continue;
        ++probe.admitting_classes;
        if (!reducer.reducible(tree)) probe.unreduced.push_back(render(key));
    }
    return probe;
}

}  // namespace zdtpc
