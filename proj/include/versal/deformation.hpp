#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "versal/cotangent.hpp"

namespace versal {

/// Matrix over S[t] stored by t-order: piece k holds the terms of total
/// t-degree exactly k.
class TOrderSeries {
 public:
  TOrderSeries(RingPtr ring, std::size_t rows, std::size_t cols);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  /// Number of stored pieces (highest stored order + 1).
  std::size_t size() const { return pieces_.size(); }

  /// Piece k; a zero matrix when k is beyond the stored range.
  const PolyMatrix& piece(std::size_t k) const;
  /// Mutable piece k, growing the series as needed.
  PolyMatrix& at(std::size_t k);

  PolyMatrix sum() const;
  void truncate(std::size_t k);
  /// Highest order with a nonzero piece, or -1 when everything vanishes.
  int maxOrder() const;
  /// True when every piece k contains only terms of t-degree k.
  bool orderHomogeneous() const;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<PolyMatrix> pieces_;
  PolyMatrix zero_;
};

enum class DeformationStatus { InProgress, Polynomial, Truncated };
const char* toString(DeformationStatus s);

struct DeformationState {
  /// S[t]; the parameter block holds one variable per tangent direction.
  RingPtr ring;
  TOrderSeries F;  // 1 x m
  TOrderSeries R;  // m x l
  TOrderSeries G;  // d x 1
  TOrderSeries C;  // l x d
  /// Obstruction representatives over S[t]; C piece 0 equals V.
  PolyMatrix V;
  int order = 0;
  DeformationStatus status = DeformationStatus::InProgress;
};

using LogSink = std::function<void(const std::string&)>;

/// Order-by-order solver for transpose(F R) + C G = 0. Holds the Gröbner
/// data that every step reuses.
class LiftingEngine {
 public:
  /// `T2` must have one row per relation of `complex`.
  LiftingEngine(const CotangentComplex& complex, const TangentBasis& T1, const TangentBasis& T2);
  ~LiftingEngine();
  LiftingEngine(const LiftingEngine&) = delete;
  LiftingEngine& operator=(const LiftingEngine&) = delete;

  const RingPtr& ring() const;

  DeformationState firstOrder() const;
  /// Advances `state` by one t-order. Throws LiftError when an obstruction
  /// is not in the span of the T2 representatives.
  void liftStep(DeformationState& state) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

DeformationState firstOrder(const CotangentComplex& complex, const TangentBasis& T1,
                            const TangentBasis& T2);

struct DeformationOptions {
  int maxOrder = 20;
  /// 0 silent, 1 status line, 2 per-order log.
  int verbosity = 0;
  LogSink log;
};

/// Computes T1 and T2 in local mode when they are not supplied, then lifts
/// until the solution is polynomial or maxOrder is reached.
DeformationState versalDeformation(const CotangentComplex& complex,
                                   const std::optional<TangentBasis>& T1,
                                   const std::optional<TangentBasis>& T2,
                                   const DeformationOptions& options = {});

struct VerificationReport {
  bool ok = true;
  /// True when the residual was checked without truncation.
  bool exact = false;
  /// transpose(F R) + C G, truncated above the state's order unless exact.
  PolyMatrix residual;
  std::vector<std::string> failures;
};

VerificationReport verifyState(const DeformationState& state);

}  // namespace versal
