#ifndef SIMREP_MODEL_HPP
#define SIMREP_MODEL_HPP

#include "simrep/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace simrep {

// Thrown for any structurally invalid value: bad labels, bad triples,
// inverted intervals, out-of-range arcs.
class ModelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A vertex label. Nonempty, no whitespace, no '|' or ','.
/// Labels starting with '@' are reserved for generated gadget vertices.
class VertexId {
public:
    explicit VertexId(std::string label);

    const std::string& str() const noexcept { return label_; }
    bool reserved() const noexcept { return label_.front() == '@'; }

    friend bool operator==(const VertexId&, const VertexId&) = default;
    friend std::strong_ordering operator<=>(const VertexId& a, const VertexId& b) {
        return a.label_.compare(b.label_) <=> 0;
    }

private:
    std::string label_;
};

bool is_valid_label(std::string_view label) noexcept;

using VertexSet = std::set<VertexId>;

/// Simple undirected graph. Vertex and edge lists keep insertion order so
/// that serialization is reproducible; lookups go through ordered sets.
class Graph {
public:
    using Edge = std::pair<VertexId, VertexId>;  // first < second

    Graph() = default;

    /// Adds `v` unless already present.
    void add_vertex(const VertexId& v);
    /// Both endpoints must already be vertices. Re-adding an edge throws.
    void add_edge(const VertexId& u, const VertexId& v);

    bool contains(const VertexId& v) const { return vertex_set_.contains(v); }
    bool adjacent(const VertexId& u, const VertexId& v) const;

    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const VertexSet& vertex_set() const noexcept { return vertex_set_; }
    std::size_t order() const noexcept { return vertices_.size(); }

    /// Equality as sets; insertion order is ignored.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_set_ == b.vertex_set_ && a.edge_set_ == b.edge_set_;
    }

private:
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    VertexSet vertex_set_;
    std::set<Edge> edge_set_;
};

Graph::Edge make_edge(const VertexId& u, const VertexId& v);

struct Triple {
    VertexId x, y, z;
    friend bool operator==(const Triple&, const Triple&) = default;
};

/// A Betweenness (TotalOrdering) instance: ground set S and triples T.
class TotalOrderingInstance {
public:
    TotalOrderingInstance() = default;
    /// Throws ModelError on duplicate ground elements, triple members outside
    /// the ground set, or a triple with a repeated member.
    TotalOrderingInstance(std::vector<VertexId> ground, std::vector<Triple> triples);

    const std::vector<VertexId>& ground() const noexcept { return ground_; }
    const std::vector<Triple>& triples() const noexcept { return triples_; }
    std::size_t s() const noexcept { return ground_.size(); }
    std::size_t t() const noexcept { return triples_.size(); }

    friend bool operator==(const TotalOrderingInstance&, const TotalOrderingInstance&) = default;

private:
    std::vector<VertexId> ground_;
    std::vector<Triple> triples_;
};

enum class ModelKind { interval, circular_arc };

std::string_view to_string(ModelKind kind) noexcept;

struct SimRepInstance {
    ModelKind model = ModelKind::interval;
    std::vector<Graph> graphs;

    std::size_t k() const noexcept { return graphs.size(); }
    friend bool operator==(const SimRepInstance&, const SimRepInstance&) = default;
};

/// V(G_i) ∩ V(G_j). Throws std::out_of_range for a bad index.
VertexSet shared_vertices(const SimRepInstance& inst, std::size_t i, std::size_t j);

/// Closed interval [l, r] with l <= r.
class Interval {
public:
    Interval(Rational l, Rational r);

    const Rational& l() const noexcept { return l_; }
    const Rational& r() const noexcept { return r_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Rational l_, r_;
};

inline bool overlaps(const Interval& a, const Interval& b) {
    return std::max(a.l(), b.l()) <= std::min(a.r(), b.r());
}

using IntervalRep = std::map<VertexId, Interval>;

/// Returns a representation whose endpoints are the ranks 0, 1, ... of the
/// distinct endpoint values of `rep`. Relative order and coincidences are kept.
IntervalRep canonicalize(const IntervalRep& rep);

/// Closed arc starting at `start` and running clockwise for `length`.
struct Arc {
    Rational start;
    Rational length;
    friend bool operator==(const Arc&, const Arc&) = default;
};

class CircularArcRep {
public:
    explicit CircularArcRep(Rational circumference);

    /// Throws ModelError unless 0 <= start < L and 0 < length < L.
    void set(const VertexId& v, Arc arc);

    const Rational& circumference() const noexcept { return circumference_; }
    const std::map<VertexId, Arc>& arcs() const noexcept { return arcs_; }
    const Arc& at(const VertexId& v) const { return arcs_.at(v); }
    bool contains(const VertexId& v) const { return arcs_.contains(v); }

    /// Whether point `p` in [0, L) lies on the arc.
    bool covers(const Arc& arc, const Rational& p) const;
    bool overlaps(const Arc& a, const Arc& b) const;

    friend bool operator==(const CircularArcRep&, const CircularArcRep&) = default;

private:
    Rational circumference_;
    std::map<VertexId, Arc> arcs_;
};

/// Reduces `x` into [0, L).
Rational mod_circle(Rational x, const Rational& circumference);

using LinearOrder = std::vector<VertexId>;

/// One representation per graph of a SimRepInstance, index-aligned.
class SimultaneousReps {
public:
    using Intervals = std::vector<IntervalRep>;
    using Arcs = std::vector<CircularArcRep>;

    SimultaneousReps() = default;
    explicit SimultaneousReps(Intervals reps) : reps_(std::move(reps)) {}
    /// All reps must share one circumference.
    explicit SimultaneousReps(Arcs reps);

    ModelKind model() const noexcept {
        return std::holds_alternative<Intervals>(reps_) ? ModelKind::interval
                                                        : ModelKind::circular_arc;
    }
    std::size_t size() const noexcept;

    const Intervals& intervals() const { return std::get<Intervals>(reps_); }
    const Arcs& arcs() const { return std::get<Arcs>(reps_); }
    Intervals& intervals() { return std::get<Intervals>(reps_); }
    Arcs& arcs() { return std::get<Arcs>(reps_); }

    friend bool operator==(const SimultaneousReps&, const SimultaneousReps&) = default;

private:
    std::variant<Intervals, Arcs> reps_;
};

}  // namespace simrep

template <>
struct std::hash<simrep::VertexId> {
    std::size_t operator()(const simrep::VertexId& v) const noexcept {
        return std::hash<std::string>{}(v.str());
    }
};

#endif
