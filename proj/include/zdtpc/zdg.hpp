#pragma once

// Zero-divisor graphs of finite commutative rings and the ring-side code deciders.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zdtpc/graph.hpp"
#include "zdtpc/ring.hpp"
#include "zdtpc/tpc.hpp"

namespace zdtpc {

/// Gamma(R): one vertex per nonzero zero-divisor, in ascending element order; distinct x, y are
/// adjacent iff xy = 0. Vertex labels are element names.
struct ZdGraph {
    FiniteRing ring;
    Graph graph;
    std::vector<Element> elements;

    /// Throws PreconditionError when `a` is not a nonzero zero-divisor.
    Vertex vertex_of(Element a) const;
    std::vector<Element> to_elements(const CodeSet& code) const;
    std::vector<std::string> names(const CodeSet& code) const;
};

ZdGraph zero_divisor_graph(const FiniteRing& ring);

/// ann(x) without 0 and x: the neighbourhood of x in Gamma(R).
std::vector<Element> cap_ann(const FiniteRing& ring, Element x);

/// First edge {x, y} in lexicographic order whose endpoints form a code; {} for an empty graph.
/// Codes in these graphs have exactly two vertices, so a miss here means no code at all.
std::optional<CodeSet> tpc_pair_solver(const ZdGraph& z);

std::vector<Vertex> degree_one_vertices(const ZdGraph& z);

struct DeciderResult {
    std::string id;
    bool admits = false;
    /// Element names of the code the decider produced, when it produces one.
    std::optional<std::vector<std::string>> witness;
    std::string note;
};

struct RingVerdict {
    std::string ring;
    bool admits = false;
    std::optional<std::vector<std::string>> witness;
    std::vector<DeciderResult> deciders;
    /// True when a graph search confirmed the structural answer.
    bool cross_checked = false;
    std::vector<std::string> discrepancies;
};

std::string verdict_to_json(const RingVerdict& verdict);

struct ZdgOptions {
    RingLimits limits;
    /// The exact search runs on graphs with at most this many vertices.
    std::size_t exact_bound = 1024;
    SearchOptions search;
};

/// Local non-field R: the annihilator rule, the degree-one rule and the pair search, which must
/// agree. The annihilator rule admits iff some x has |ann(x)| = 2 with |Z(R)| >= 3, or Gamma(R)
/// is a single edge.
RingVerdict local_decider(const FiniteRing& ring, const ZdgOptions& options = {});

struct CutVertexReport {
    std::vector<Element> articulation_points;
    std::optional<std::vector<Element>> code;
    /// Some x has |ann(x)| = 2 and |Z(R)| >= 3.
    bool annihilator_two = false;
    /// Order 16, local, |Z(R)| > 2 and no x with |ann(x)| = 2.
    bool exceptional_fingerprint = false;
    /// Mismatches against the cut-vertex statements; empty when all hold.
    std::vector<std::string> findings;
};

/// Checks on a local ring: code members of degree above one are cut vertices; cut vertices exist
/// iff the annihilator condition holds or the ring has the exceptional fingerprint; exceptional
/// rings have cut vertices and no code.
CutVertexReport cut_vertex_report(const FiniteRing& ring);

/// Product of k >= 2 fields: admits iff k = 2, witness {(1,0), (0,1)}.
RingVerdict reduced_decider(std::span<const FiniteRing> fields, const ZdgOptions& options = {});

/// Product of local non-field rings followed by fields. One local and one field admit iff the
/// local ring has exactly one nonzero zero-divisor; any other split with a local factor and at
/// least two factors does not admit.
RingVerdict mixed_decider(std::span<const FiniteRing> locals, std::span<const FiniteRing> fields,
                          const ZdgOptions& options = {});

/// Splits a ring into local factors: products are flattened and Z_n splits into its prime-power
/// parts. Throws PreconditionError when a piece is not local.
std::vector<FiniteRing> local_components(const FiniteRing& ring);

/// Decides the product of `factors` (one factor for a plain ring) by the structural rule for its
/// local split, then cross-checks with the pair and exact searches when the product fits the cap.
RingVerdict decide_ring(std::span<const FiniteRing> factors, const ZdgOptions& options = {});

/// |Z*(R_1 x ... x R_k)| = prod |R_i| - prod |U(R_i)| - 1.
std::size_t count_zero_divisors(std::span<const FiniteRing> factors);

/// One of the six product shapes with a closed-form count, evaluated both ways the starred
/// sizes can be read.
struct CountFormEvaluation {
    std::string form;
    std::string ring;
    std::size_t count = 0;
    /// Starred sizes read as nonzero elements.
    std::size_t nonzero_reading = 0;
    /// Starred sizes read as units.
    std::size_t unit_reading = 0;
    std::optional<std::size_t> stated;

    bool formula_matches() const { return nonzero_reading == count || unit_reading == count; }
};

/// Locals first, then fields, as in each form: local-field, local-local, local-field-field,
/// local-local-field, local-field-field-field, three-locals. nullopt for other shapes.
std::optional<CountFormEvaluation> evaluate_count_form(std::span<const FiniteRing> factors);

/// The smallest ring of each form, with the vertex count quoted for it.
std::vector<CountFormEvaluation> count_form_report(const RingLimits& limits = {});

}  // namespace zdtpc
