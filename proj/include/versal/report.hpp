#pragma once

#include <optional>
#include <string>
#include <vector>

#include "versal/deformation.hpp"
#include "versal/input.hpp"

namespace versal {

struct RunRequest {
  /// One of t1, t2, normal, deform, gb, hilbert.
  std::string command;
  std::optional<Degree> degree;
  int maxOrder = 20;
  int verbosity = 0;
  /// Last degree printed by `hilbert`.
  int hilbertUpto = 10;
  LogSink log;
};

struct Report {
  std::string text;
  /// Single JSON document; see README for the keys.
  std::string json;
};

/// Runs one command on a loaded system. Throws UsageError for bad requests
/// and the library errors for failed computations.
Report runCommand(const InputSystem& system, const RunRequest& request);

/// Column-aligned layout with `{d}` row labels when the matrix is graded.
std::string formatMatrix(const PolyMatrix& m);

}  // namespace versal
