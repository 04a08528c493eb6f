#include "zdtpc/tpc.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <iostream>

namespace zdtpc {

namespace {

// Exact cover of V by open neighbourhoods. Every vertex is undecided, in or out; `covered`
// counts in-neighbours and `open` counts undecided neighbours. Decisions go on a trail and
// are undone in reverse.
class CoverSearch {
public:
    explicit CoverSearch(const Graph& g)
        : g_(g), state_(g.order(), kUndecided), covered_(g.order(), 0), open_(g.order(), 0) {
        for (Vertex v = 0; v < g.order(); ++v) open_[v] = g.degree(v);
    }

    /// Forces implied by the initial state. False when the graph has no code at all.
    bool start() {
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (open_[v] == 0) return false;
            if (open_[v] == 1) queue_.push_back({g_.neighbors(v)[0], kIn});
        }
        return drain();
    }

    std::size_t mark() const { return trail_.size(); }

    void undo(std::size_t mark) {
        queue_.clear();
        while (trail_.size() > mark) {
            const Vertex v = trail_.back();
            trail_.pop_back();
            const bool was_in = state_[v] == kIn;
            state_[v] = kUndecided;
            for (auto w : g_.neighbors(v)) {
                ++open_[w];
                if (was_in) --covered_[w];
            }
        }
    }

    bool decide(Vertex v, signed char value) {
        queue_.push_back({v, value});
        return drain();
    }

    bool undecided(Vertex v) const { return state_[v] == kUndecided; }

    /// Depth-first search from the current state; `on_solution` returns false to stop.
    template <class F>
    bool search(F&& on_solution) {
        Vertex pick = 0;
        std::size_t best = SIZE_MAX;
        for (Vertex v = 0; v < g_.order(); ++v)
            if (covered_[v] == 0 && open_[v] < best) {
                best = open_[v];
                pick = v;
            }
        if (best == SIZE_MAX) return on_solution(code());

        std::vector<Vertex> candidates;
        for (auto u : g_.neighbors(pick))
            if (state_[u] == kUndecided) candidates.push_back(u);
        const auto outer = mark();
        for (auto u : candidates) {
            const auto before = mark();
            if (decide(u, kIn) && !search(on_solution)) return false;
            undo(before);
            if (!decide(u, kOut)) break;
        }
        undo(outer);
        return true;
    }

    CodeSet code() const {
        CodeSet c;
        for (Vertex v = 0; v < g_.order(); ++v)
            if (state_[v] == kIn) c.push_back(v);
        return c;
    }

    /// Leaves the state as it was.
    bool feasible() {
        const auto before = mark();
        bool found = false;
        search([&](const CodeSet&) {
            found = true;
            return false;
        });
        undo(before);
        return found;
    }

private:
    static constexpr signed char kUndecided = -1, kOut = 0, kIn = 1;

    struct Pending {
        Vertex v;
        signed char value;
    };

    bool drain() {
        while (!queue_.empty()) {
            const auto [v, value] = queue_.back();
            queue_.pop_back();
            if (!assign(v, value)) {
                queue_.clear();
                return false;
            }
        }
        return true;
    }

    bool assign(Vertex v, signed char value) {
        if (state_[v] != kUndecided) return state_[v] == value;
        state_[v] = value;
        trail_.push_back(v);
        for (auto w : g_.neighbors(v)) {
            --open_[w];
            if (value == kIn) ++covered_[w];
        }
        for (auto w : g_.neighbors(v)) {
            if (covered_[w] > 1) return false;
            if (covered_[w] == 1) {
                if (value == kIn && open_[w] > 0)
                    for (auto u : g_.neighbors(w))
                        if (state_[u] == kUndecided) queue_.push_back({u, kOut});
            } else if (open_[w] == 0) {
                return false;
            } else if (open_[w] == 1) {
                for (auto u : g_.neighbors(w))
                    if (state_[u] == kUndecided) {
                        queue_.push_back({u, kIn});
                        break;
                    }
            }
        }
        return true;
    }

    const Graph& g_;
    std::vector<signed char> state_;
    std::vector<std::size_t> covered_;
    std::vector<std::size_t> open_;
    std::vector<Vertex> trail_;
    std::vector<Pending> queue_;
};

void warn_if_large(const Graph& g, const SearchOptions& options) {
    if (g.order() <= options.vertex_bound) return;
    const std::string msg = "exact search on " + std::to_string(g.order()) + " vertices exceeds the bound of " +
                            std::to_string(options.vertex_bound);
    if (options.warn)
        options.warn(msg);
    else
        std::clog << "warning: " << msg << "\n";
}

}  // namespace

bool is_total_perfect_code(const Graph& g, const CodeSet& code) {
    if (!is_valid_code(g, code)) return false;
    std::vector<std::uint64_t> in(g.words_per_row(), 0);
    for (auto c : code) in[c / 64] |= std::uint64_t{1} << (c % 64);
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto row = g.row(v);
        int hits = 0;
        for (std::size_t w = 0; w < row.size(); ++w) hits += std::popcount(row[w] & in[w]);
        if (hits != 1) return false;
    }
    return true;
}

// Components never interact, so the greedy pass below yields the union of the per-component
// least codes.
namespace {

std::optional<CodeSet> least_code(const Graph& g, std::optional<Vertex> forced, const SearchOptions& options) {
    warn_if_large(g, options);
    CoverSearch s(g);
    if (!s.start()) return std::nullopt;
    if (forced && !s.decide(*forced, 1)) return std::nullopt;
    if (!s.feasible()) return std::nullopt;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!s.undecided(v)) continue;
        const auto before = s.mark();
        if (s.decide(v, 1) && s.feasible()) continue;
        s.undo(before);
        if (!s.decide(v, 0)) throw std::logic_error("exact search lost a feasible state");
    }
    return s.code();
}

}  // namespace

std::optional<CodeSet> find_tpc(const Graph& g, const SearchOptions& options) {
    return least_code(g, std::nullopt, options);
}

std::optional<CodeSet> find_tpc_containing(const Graph& g, Vertex v, const SearchOptions& options) {
    if (v >= g.order()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    return least_code(g, v, options);
}

std::vector<CodeSet> enumerate_tpcs(const Graph& g, const SearchOptions& options) {
    if (g.order() > options.enumeration_bound)
        throw BoundError("enumeration is limited to " + std::to_string(options.enumeration_bound) +
                         " vertices (graph has " + std::to_string(g.order()) + "); use find_tpc instead");
    std::vector<CodeSet> out;
    CoverSearch s(g);
    if (!s.start()) return out;
    s.search([&](const CodeSet& c) {
        out.push_back(c);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<CodeSet> tree_tpc(const Graph& t) {
    if (!is_tree(t)) throw PreconditionError("tree_tpc needs a tree");
    const std::size_t n = t.order();
    std::vector<Vertex> order{0}, parent(n, 0);
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (auto w : t.neighbors(order[i]))
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = order[i];
                order.push_back(w);
            }

    // ok[v][x][c]: the subtree of v has a valid assignment with v's membership x and exactly c
    // in-code children, given that v's own requirement is c + (parent in code) = 1.
    std::vector<std::array<std::array<bool, 2>, 2>> ok(n);
    for (std::size_t i = n; i-- > 0;) {
        const auto v = order[i];
        for (int x = 0; x < 2; ++x) {
            std::size_t forced_in = 0, flexible_in = 0;
            bool dead = false;
            for (auto w : t.neighbors(v)) {
                if (w == parent[v] && v != 0) continue;
                const bool can_out = ok[w][0][1 - x], can_in = ok[w][1][1 - x];
                if (!can_out && !can_in) dead = true;
                else if (!can_out) ++forced_in;
                else if (can_in) ++flexible_in;
            }
            ok[v][x][0] = !dead && forced_in == 0;
            ok[v][x][1] = !dead && (forced_in == 1 || (forced_in == 0 && flexible_in > 0));
        }
    }

    int root_x = ok[0][0][1] ? 0 : ok[0][1][1] ? 1 : -1;
    if (root_x < 0) return std::nullopt;

    std::vector<int> x(n, 0), need(n, 0);
    x[0] = root_x;
    need[0] = 1;
    for (auto v : order) {
        // Pick which child goes in when v needs one in-code child.
        Vertex chosen = static_cast<Vertex>(n);
        if (need[v] == 1) {
            for (auto w : t.neighbors(v)) {
                if (w == parent[v] && v != 0) continue;
                if (!ok[w][0][1 - x[v]]) {
                    chosen = w;
                    break;
                }
            }
            if (chosen == n)
                for (auto w : t.neighbors(v)) {
                    if (w == parent[v] && v != 0) continue;
                    if (ok[w][1][1 - x[v]]) {
                        chosen = w;
                        break;
                    }
                }
        }
        for (auto w : t.neighbors(v)) {
            if (w == parent[v] && v != 0) continue;
            x[w] = (w == chosen) ? 1 : 0;
            need[w] = 1 - x[v];
        }
    }
    CodeSet code;
    for (Vertex v = 0; v < n; ++v)
        if (x[v]) code.push_back(v);
    return code;
}

bool path_decider(std::size_t n) {
    if (n < 2) throw PreconditionError("path rule needs n >= 2");
    return n % 4 != 1;
}

CodeSet path_code(std::size_t n) {
    if (!path_decider(n)) throw PreconditionError("P_" + std::to_string(n) + " has no code (n mod 4 = 1)");
    // 1-based positions 2,3 mod 4 when n is a multiple of 4, otherwise 1,2 mod 4.
    const std::size_t first = n % 4 == 0 ? 2 : 1;
    CodeSet c;
    for (std::size_t i = 1; i <= n; ++i)
        if (i % 4 == first % 4 || i % 4 == (first + 1) % 4) c.push_back(static_cast<Vertex>(i - 1));
    return c;
}

bool cycle_decider(std::size_t n) {
    if (n < 3) throw PreconditionError("cycle rule needs n >= 3");
    return n % 4 == 0;
}

CodeSet cycle_code(std::size_t n) {
    if (!cycle_decider(n)) throw PreconditionError("C_" + std::to_string(n) + " has no code (n mod 4 != 0)");
    CodeSet c;
    for (std::size_t i = 0; i < n; ++i)
        if (i % 4 < 2) c.push_back(static_cast<Vertex>(i));
    return c;
}

bool complete_decider(std::size_t n) {
    if (n < 2) throw PreconditionError("complete-graph rule needs n >= 2");
    return n == 2;
}

CodeSet complete_bipartite_code(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw PreconditionError("complete bipartite parts must be nonempty");
    return {0, static_cast<Vertex>(m)};
}

std::optional<bool> regular_parity_check(const Graph& g) {
    if (is_regular(g) && g.order() % 2 == 1) return false;
    return std::nullopt;
}

bool is_star(const Graph& g) {
    if (g.order() < 2 || !is_tree(g)) return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) return true;
    return false;
}

EndVertexReport end_vertex_analysis(const Graph& g, const SearchOptions& options) {
    EndVertexReport r;
    r.hypothesis_holds = g.order() >= 3 && !is_star(g);
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) r.end_vertices.push_back(v);
    const auto codes = enumerate_tpcs(g, options);
    r.code_count = codes.size();
    for (const auto& c : codes) {
        const bool avoids = std::none_of(c.begin(), c.end(), [&](Vertex v) { return g.degree(v) == 1; });
        if (avoids) {
            r.some_code_avoids_end_vertices = true;
            r.avoiding_code = c;
            break;
        }
    }
    return r;
}

}  // namespace zdtpc
