#ifndef SIMREP_REDUCE_HPP
#define SIMREP_REDUCE_HPP

#include "simrep/model.hpp"

#include <stdexcept>

namespace simrep {

// Reductions from Betweenness to simultaneous interval / circular-arc
// representation, and the witness maps in both directions.
//
// For the i-th triple (x, y, z), 1-based, the gadget graph G_i has vertices
// x, y, z, @a.i, @b.i, @c.i and edges x-@b.i, y-@b.i, z-@b.i, x-@a.i, z-@c.i.
// G_0 is the ground set with no edges. The circular-arc variant adds the
// isolated vertex @iso to every graph.

namespace gadget {
VertexId a(std::size_t triple);
VertexId b(std::size_t triple);
VertexId c(std::size_t triple);
VertexId iso();
}  // namespace gadget

class WitnessError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

SimRepInstance build_interval_instance(const TotalOrderingInstance& to);
SimRepInstance build_circular_arc_instance(const TotalOrderingInstance& to);

/// Integer witness for build_interval_instance(to). With p the 1-based rank in
/// `order`, element p gets [8p, 8p+4]; for a triple whose outer elements have
/// ranks m < M, @b gets [8m+2, 8M+2], the outer gadget of rank m gets
/// [8m-2, 8m+1] and that of rank M gets [8M+3, 8M+6].
/// Throws WitnessError("order not satisfying") if `order` is not a solution.
SimultaneousReps lift_order(const TotalOrderingInstance& to, const LinearOrder& order);

/// Same coordinates as arcs on a circle of length 8s+16, with @iso at
/// (8s+10, length 2).
SimultaneousReps lift_order_ca(const TotalOrderingInstance& to, const LinearOrder& order);

/// Reads S off G_0's representation, sorted by left endpoint. Throws
/// WitnessError("not a valid certificate") unless `inst` is the reduction of
/// `to` and `reps` is simultaneous for it.
LinearOrder extract_order(const SimRepInstance& inst, const SimultaneousReps& reps, const TotalOrderingInstance& to);

/// Cuts the circle at the midpoint of @iso's arc in G_0 and sorts S by
/// left endpoint on the resulting line.
LinearOrder extract_order_ca(const SimRepInstance& inst, const SimultaneousReps& reps,
                             const TotalOrderingInstance& to);

}  // namespace simrep

#endif
