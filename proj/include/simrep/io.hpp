#ifndef SIMREP_IO_HPP
#define SIMREP_IO_HPP

#include "simrep/model.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

// Line-oriented text documents. Comment lines start with '#', tokens are
// whitespace separated.
//
//   TotalOrdering     S: 1 2 3           SimRep       MODEL: interval
//                     T: 1 2 3                        GRAPH 0
//                                                     V: a b c
//   Order             ORDER: 3 1 2                    E: a-b b-c
//
//   Representation    MODEL: circular-arc
//                     CIRC: 24
//                     REP 0
//                     a 0 3/2
//
// Representation lines are `v l r` for intervals and `v start length` for arcs.

namespace simrep {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class DocumentKind { total_ordering, simrep, representation, order, unknown };

/// Classifies by the first keyword line: `S:`, `ORDER:`, or `MODEL:` followed
/// by `GRAPH` (instance) or `REP` / `CIRC:` (representation).
DocumentKind detect_kind(std::string_view text);

Rational parse_rational(std::string_view token);
std::string format_rational(const Rational& q);

TotalOrderingInstance parse_total_ordering(std::string_view text);
std::string write_total_ordering(const TotalOrderingInstance& inst);

SimRepInstance parse_simrep(std::string_view text);
std::string write_simrep(const SimRepInstance& inst);

SimultaneousReps parse_reps(std::string_view text);
std::string write_reps(const SimultaneousReps& reps);

LinearOrder parse_order(std::string_view text);
std::string write_order(const LinearOrder& order);

}  // namespace simrep

#endif
