#pragma once

#include <string>
#include <vector>

#include "versal/polymatrix.hpp"

namespace versal {

/// A parsed input file: the ring and the generators of I.
struct InputSystem {
  RingPtr ring;
  std::vector<Polynomial> generators;
  /// True when the file carried a `degrees:` line.
  bool declaredDegrees = false;

  /// Generators as a 1 x m matrix.
  PolyMatrix generatorRow() const { return PolyMatrix::row(ring, generators); }
};

/// Parses the line-oriented input format:
///
///   ring: QQ
///   vars: x0 x1 x2
///   degrees: 1 1 1          (optional; integers or tuples like (1,0,0))
///   generators:
///     x0*x2 - x1^2
///
/// `#` starts a comment. Errors carry 1-based line and column.
InputSystem parseInput(const std::string& text);
InputSystem loadInput(const std::string& path);

}  // namespace versal
