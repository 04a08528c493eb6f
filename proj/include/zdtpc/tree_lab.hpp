#pragma once

// Tree constructions that grow codes: the four grafting operations, the family they generate,
// pendant constructions with a known code, and corona trees without one.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "zdtpc/graph.hpp"
#include "zdtpc/tpc.hpp"

namespace zdtpc {

/// pn(v, S): vertices whose only neighbour in S is v.
std::vector<Vertex> private_neighborhood(const Graph& g, const CodeSet& s, Vertex v);
/// True when some u in S has pn(u, S) = {v}.
bool is_quasi_isolated(const Graph& g, const CodeSet& s, Vertex v);
std::vector<Vertex> leaf_set(const Graph& t);
/// Smallest-index vertex at distance k from `leaf`. Throws PreconditionError when `leaf` is not a
/// leaf or k exceeds its eccentricity.
Vertex k_support_vertex(const Graph& t, Vertex leaf, std::size_t k);

enum class GraftOp { A1, A2, A3, A4 };
std::string_view to_string(GraftOp op);
GraftOp graft_op_from_string(std::string_view text);

/// One growth step. A1 and A3 join a leaf of a new path P_length to `at`; A2 hangs a single new
/// vertex on `at`; A4 joins the vertex at distance `depth` from the first leaf of P_length to `at`.
struct TreeBuildStep {
    GraftOp op = GraftOp::A2;
    Vertex at = 0;
    std::size_t length = 0;
    std::size_t depth = 0;

    friend bool operator==(const TreeBuildStep&, const TreeBuildStep&) = default;
};

struct BuildTrace {
    std::size_t initial_length = 2;
    std::vector<TreeBuildStep> steps;
    Graph tree;
    /// Index of the first step whose result has no code; the build stops there.
    std::optional<std::size_t> failed_step;
};

/// {"initial_length": n, "steps": [{"op": "A1", "at": v, "length": n, "depth": k}, ...]} with
/// 0-based vertex indices; "length" and "depth" appear only for ops that use them.
std::string trace_to_json(const BuildTrace& trace);
/// Reads a trace file; the tree is rebuilt by generate_family_T.
BuildTrace trace_from_json(std::string_view text);

/// Grows `t` by one step. `code` must be a code of `t` containing `step.at`; A3 and A4 also need
/// `step.at` not quasi-isolated with respect to `code`. Path lengths: A1/A3 need length >= 5
/// and length mod 4 != 2; A4 needs odd length with length mod 8 != 3 and 0 < depth < length - 1.
/// New vertices are appended after those of `t`, path vertices in path order.
Graph apply_step(const Graph& t, const CodeSet& code, const TreeBuildStep& step);

/// Builds P_n0 and applies `steps`, each against the least code containing its attachment
/// vertex, checking after every step that the tree still has a code.
BuildTrace generate_family_T(std::size_t initial_length, const std::vector<TreeBuildStep>& steps);

/// Unbiased draw from [0, bound); identical on every platform for a given engine state.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Random trace with at most `vertex_budget` vertices. Path lengths are drawn from the classes that
/// keep a code: A1/A3 lengths are 0 or 1 mod 4, A4 arms are 0 or 3 mod 4.
BuildTrace random_family_T(std::uint64_t seed, std::size_t vertex_budget);

enum class CoronaKind { three_mod_four, zero_mod_four, two_mod_four };
/// corona(P_length, K_1); length must lie in the class named by `kind`.
Graph corona_family(CoronaKind kind, std::size_t length);

/// Path P_base (base mod 4 = 2) with 2k+2 pendants dealt round-robin onto the code vertices
/// {v1, v2, v5, v6, ...}. Returns the tree and that vertex set, which is its code.
std::pair<Graph, CodeSet> round_robin_pendant_tree(std::size_t k, std::size_t base_length = 6);
/// Path P_{4n-1} with one pendant on each of {v2, v3, v6, v7, ...}; 6n-1 vertices in all.
std::pair<Graph, CodeSet> paired_pendant_tree(std::size_t n);

/// Decodes a Pruefer sequence over {0..n-1} into a tree on n = seq.size() + 2 vertices.
Graph tree_from_pruefer(const std::vector<Vertex>& seq);
/// Canonical text for the isomorphism class of a tree (AHU encoding rooted at the centre).
std::string tree_canonical_form(const Graph& t);

struct MembershipProbe {
    std::size_t labelled_trees = 0;
    std::size_t isomorphism_classes = 0;
    std::size_t admitting_classes = 0;
    /// Canonical forms of admitting trees that no reverse operation reduces to a base path.
    std::vector<std::string> unreduced;
};

/// Walks every Pruefer sequence for 2 <= n <= max_vertices and checks that each tree with a code
/// reduces to a base path P_n (n mod 4 != 1) by undoing the four operations.
MembershipProbe membership_probe(std::size_t max_vertices);

}  // namespace zdtpc
