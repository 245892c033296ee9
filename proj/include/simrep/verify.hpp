#ifndef SIMREP_VERIFY_HPP
#define SIMREP_VERIFY_HPP

#include "simrep/model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace simrep {

enum class ViolationKind {
    missing_edge_overlap,    // uv is an edge but the intervals/arcs are disjoint
    forbidden_overlap,       // uv is not an edge but the intervals/arcs meet
    shared_vertex_mismatch,  // R_i(v) != R_j(v)
    vertex_set_mismatch,     // representation and graph disagree on which vertices exist
};

std::string_view to_string(ViolationKind kind) noexcept;

struct Violation {
    ViolationKind kind;
    std::vector<VertexId> subject;     // one or two vertices
    std::vector<std::size_t> graphs;   // one or two graph indices

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ViolationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool has(ViolationKind kind) const;
};

/// `VIOLATION kind subject graphs` lines, or `OK`.
std::string format_report(const ViolationReport& report);

// Every failing pair is reported; nothing is thrown for invalid
// representations. `graph_index` only labels the reported violations.
ViolationReport verify_interval_rep(const Graph& g, const IntervalRep& rep, std::size_t graph_index = 0);
ViolationReport verify_arc_rep(const Graph& g, const CircularArcRep& rep, std::size_t graph_index = 0);

/// Per-graph validity plus agreement on every shared vertex. A representation
/// count different from k shows up as vertex-set mismatches. Throws
/// std::invalid_argument when the model kinds differ.
ViolationReport verify_simultaneous(const SimRepInstance& inst, const SimultaneousReps& reps);

struct SunflowerReport {
    bool is_sunflower = false;
    std::optional<VertexSet> core;
    /// Two index pairs (i, j) whose vertex-set intersections differ.
    std::optional<std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>> witness;
};

/// A single graph counts as a sunflower with core V(G_0).
SunflowerReport classify_sunflower(const SimRepInstance& inst);

}  // namespace simrep

#endif
