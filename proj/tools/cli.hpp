#ifndef SIMREP_TOOLS_CLI_HPP
#define SIMREP_TOOLS_CLI_HPP

#include "simrep/model.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace simrep::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2, exhausted = 3 };

/// Runs one `simrep` command line (args excludes the program name). Results
/// go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Random instance on ground set 1..s. With `satisfiable`, each triple is
/// read off a hidden random order, forwards or backwards.
TotalOrderingInstance generate(std::uint64_t seed, std::size_t s, std::size_t t, bool satisfiable);

}  // namespace simrep::cli

#endif
