#ifndef SIMREP_RENDER_HPP
#define SIMREP_RENDER_HPP

#include "simrep/model.hpp"

#include <string>

namespace simrep {

// Static drawings of a simultaneous representation. Both expect `reps` to
// pass verify_simultaneous for `inst`; shared vertices are drawn at one
// position across all graphs.

/// One block per graph, one row per vertex, endpoints on canonical integer
/// columns.
std::string render_ascii(const SimRepInstance& inst, const SimultaneousReps& reps);

/// One horizontal track per graph for intervals, one circle per graph for arcs.
std::string render_svg(const SimRepInstance& inst, const SimultaneousReps& reps);

}  // namespace simrep

#endif
