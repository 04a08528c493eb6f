#pragma once

// Total perfect codes: sets C with exactly one neighbour in C for every vertex.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zdtpc/graph.hpp"

namespace zdtpc {

struct Verdict {
    bool admits = false;
    std::optional<CodeSet> witness;
    std::string decider_id;
    bool cross_checked = false;
    /// Free-form remark, e.g. which reading of a rule the decider applies.
    std::string note;
};

struct SearchOptions {
    /// Graphs above this many vertices are still searched, after a warning.
    std::size_t vertex_bound = 64;
    /// enumerate_tpcs refuses graphs above this many vertices.
    std::size_t enumeration_bound = 24;
    /// Receives warnings; std::clog when empty.
    std::function<void(const std::string&)> warn;
};

bool is_total_perfect_code(const Graph& g, const CodeSet& code);

/// Lexicographically least code under sorted-sequence order, or nullopt.
std::optional<CodeSet> find_tpc(const Graph& g, const SearchOptions& options = {});
/// Lexicographically least code containing `v`, or nullopt when no code contains it.
std::optional<CodeSet> find_tpc_containing(const Graph& g, Vertex v, const SearchOptions& options = {});
/// Every code, in lexicographic order. Throws BoundError above the enumeration bound.
std::vector<CodeSet> enumerate_tpcs(const Graph& g, const SearchOptions& options = {});

/// Linear-time search on a tree. Throws PreconditionError when `t` is not a tree.
std::optional<CodeSet> tree_tpc(const Graph& t);

bool path_decider(std::size_t n);
/// Constructive code for P_n; PreconditionError when n mod 4 = 1.
CodeSet path_code(std::size_t n);
bool cycle_decider(std::size_t n);
CodeSet cycle_code(std::size_t n);
bool complete_decider(std::size_t n);
/// One vertex from each part of K_{m,n}.
CodeSet complete_bipartite_code(std::size_t m, std::size_t n);

/// false when g is regular of odd order; nullopt when no conclusion follows.
std::optional<bool> regular_parity_check(const Graph& g);

struct EndVertexReport {
    /// Order at least 3 and not a star.
    bool hypothesis_holds = false;
    std::size_t code_count = 0;
    bool some_code_avoids_end_vertices = false;
    std::optional<CodeSet> avoiding_code;
    std::vector<Vertex> end_vertices;
};

/// Enumerates the codes of g and records whether one avoids every degree-one vertex.
EndVertexReport end_vertex_analysis(const Graph& g, const SearchOptions& options = {});

bool is_star(const Graph& g);

}  // namespace zdtpc
