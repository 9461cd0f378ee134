#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sftkit/catalog.hpp"

namespace sftkit::cli {

enum ExitCode : int { kExitFound = 0, kExitRefuted = 1, kExitBounded = 2, kExitInput = 3 };

int exit_code_for(Verdict v);

// A graph source is a catalog id or alias, inline JSON, or a path to a JSON file holding a graph
// ({"vertices", "edges"}), a matrix (list of rows) or {"matrix": ...}.
struct Resolved {
  std::string source;
  std::string id;  // catalog id, empty otherwise
  DirectedMultigraph graph;
  IntMatrix matrix;
};
Resolved resolve_source(const std::string& source);

// Runs one invocation.  args excludes the program name.  Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sftkit::cli
