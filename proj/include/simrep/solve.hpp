#ifndef SIMREP_SOLVE_HPP
#define SIMREP_SOLVE_HPP

#include "simrep/model.hpp"

#include <cstdint>
#include <optional>

namespace simrep {

struct SearchLimits {
    /// Every extension of a partial assignment counts as one node.
    std::uint64_t max_nodes = 10'000'000;
};

enum class Outcome { yes, no, resource_exceeded };

template <typename Witness>
struct Verdict {
    Outcome outcome = Outcome::no;
    std::optional<Witness> witness;  // set iff outcome == yes
    std::uint64_t nodes = 0;

    bool yes() const noexcept { return outcome == Outcome::yes; }
};

/// Whether every triple has its middle element strictly between the outer
/// two in `order`. Throws std::invalid_argument if `order` is not a
/// permutation of S.
bool check_order(const TotalOrderingInstance& to, const LinearOrder& order);

/// Builds the order left to right, cutting a prefix as soon as some triple
/// can no longer be satisfied by any completion.
Verdict<LinearOrder> solve_betweenness(const TotalOrderingInstance& to, const SearchLimits& limits = {});

/// Exhaustive search over orders of the 2n interval endpoints of the union
/// vertex set. Witness coordinates are event positions 0..2n-1.
Verdict<SimultaneousReps> solve_simrep_interval(const SimRepInstance& inst, const SearchLimits& limits = {});

/// Same over circular endpoint orders, with the first vertex's opening pinned
/// to position 0. Witness circumference is 2n.
Verdict<SimultaneousReps> solve_simrep_circular_arc(const SimRepInstance& inst, const SearchLimits& limits = {});

/// Dispatches on inst.model.
Verdict<SimultaneousReps> solve_simrep(const SimRepInstance& inst, const SearchLimits& limits = {});

Verdict<IntervalRep> recognize_interval(const Graph& g, const SearchLimits& limits = {});

}  // namespace simrep

#endif
