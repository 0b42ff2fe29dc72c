#pragma once

#include <optional>
#include <vector>

#include "versal/groebner.hpp"

namespace versal {

enum class TangentMode { GradedPiece, LocalTotal };

/// Representatives of a basis of a cohomology space. For T1 and the normal
/// module the columns are vectors phi in S^m (one entry per generator of I);
/// for T2 they are vectors V in S^l (one entry per relation).
struct TangentBasis {
  PolyMatrix columns;
  /// Internal degree of each basis class.
  std::vector<Degree> columnDegrees;
  TangentMode mode = TangentMode::GradedPiece;
  std::optional<Degree> degree;

  std::size_t dimension() const { return columns.cols(); }
};

/// Fixed data attached to an ideal I = (F0): its Gröbner basis and the
/// minimal relations R0. Computes tangent and obstruction spaces.
class CotangentComplex {
 public:
  /// F0 is a 1 x m row of generators.
  explicit CotangentComplex(const PolyMatrix& F0);

  const PolyMatrix& generators() const { return F0_; }
  const PolyMatrix& relations() const { return R0_; }
  const GroebnerBasis& idealBasis() const { return ideal_; }
  bool homogeneous() const { return homogeneous_; }

  /// Degree-d piece of Hom(I, S/I).
  TangentBasis normalMatrix(const Degree& d) const;
  /// Degree-d piece of T1, or all of T1 when d is absent.
  TangentBasis cotangent1(const std::optional<Degree>& d = std::nullopt) const;
  /// Degree-d piece of T2, or all of T2 when d is absent.
  TangentBasis cotangent2(const std::optional<Degree>& d = std::nullopt) const;

  /// Degree range [lo, hi] swept in local mode for T1 (which = 1) or T2.
  std::pair<int, int> localDegreeRange(int which) const;

 private:
  void requireGraded() const;
  TangentBasis normalPiece(const Degree& d, bool modJacobian) const;
  TangentBasis obstructionPiece(const Degree& d) const;
  int socleDegreeOfJacobianQuotient() const;

  PolyMatrix F0_;
  GroebnerBasis ideal_;
  PolyMatrix R0_;
  bool homogeneous_ = false;
  std::vector<Degree> genDegrees_;
  // Koszul lift and second syzygies, computed on first use by cotangent2.
  mutable std::optional<PolyMatrix> koszulLift_;
  mutable std::optional<PolyMatrix> secondSyzygies_;
  mutable std::optional<int> socle_;
};

TangentBasis normalMatrix(const Degree& d, const PolyMatrix& F0);
TangentBasis cotangent1(const PolyMatrix& F0, const std::optional<Degree>& d = std::nullopt);
TangentBasis cotangent2(const PolyMatrix& F0, const std::optional<Degree>& d = std::nullopt);

/// Krull dimension of QQ[x]/I computed from the leading-term ideal.
std::size_t krullDimension(const GroebnerBasis& ideal);

/// Jacobian matrix (m x n) of a 1 x m row of generators.
PolyMatrix jacobianMatrix(const PolyMatrix& F0);

}  // namespace versal
