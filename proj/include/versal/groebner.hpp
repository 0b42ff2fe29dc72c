#pragma once

#include <optional>
#include <vector>

#include "versal/exactla.hpp"
#include "versal/polymatrix.hpp"

namespace versal {

/// Module monomial order. Positions below `eliminationBlock` dominate every
/// position at or above it; within a block the order is term-over-position
/// (monomial first, lower position index wins ties). A block of 0 is plain
/// term-over-position.
struct ModuleOrder {
  std::size_t eliminationBlock = 0;
};

/// Reduced Gröbner basis of a submodule of a free module of finite rank.
class GroebnerBasis {
 public:
  struct ModTerm {
    Monomial mono;
    std::uint32_t pos;
    Scalar coef;
  };
  using Element = std::vector<ModTerm>;

  /// Buchberger with the normal selection strategy and the chain criterion
  /// (plus the coprime criterion in rank 1). Zero generators are ignored.
  static GroebnerBasis compute(const RingPtr& ring, std::size_t rank,
                               const std::vector<Vector>& generators, ModuleOrder order = {});
  static GroebnerBasis ofIdeal(const std::vector<Polynomial>& generators);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  ModuleOrder order() const { return order_; }
  std::size_t size() const { return basis_.size(); }
  std::vector<Vector> elements() const;
  /// Ideal case: generators as polynomials.
  std::vector<Polynomial> polynomials() const;

  Vector normalForm(const Vector& v) const;
  Polynomial normalForm(const Polynomial& p) const;
  bool contains(const Vector& v) const { return versal::isZero(normalForm(v)); }
  bool contains(const Polynomial& p) const { return normalForm(p).isZero(); }

  /// True if m*e_pos is not divisible by any leading term.
  bool isStandard(const Monomial& m, std::size_t pos = 0) const;
  std::vector<std::pair<Monomial, std::size_t>> leadingTerms() const;

  /// Element-level access for the lifting code.
  Element toElement(const Vector& v) const;
  Vector toVector(const Element& e) const;
  Element reduce(Element p) const;

 private:
  GroebnerBasis(RingPtr ring, std::size_t rank, ModuleOrder order)
      : ring_(std::move(ring)), rank_(rank), order_(order), byPosition_(rank) {}

  int compare(const ModTerm& a, const ModTerm& b) const;
  void sortElement(Element& e) const;
  std::ptrdiff_t findReducer(const ModTerm& t) const;
  void insert(Element e);
  void buchberger();
  void minimizeAndInterreduce();

  RingPtr ring_;
  std::size_t rank_;
  ModuleOrder order_;
  std::vector<Element> basis_;
  std::vector<std::vector<std::size_t>> byPosition_;
};

/// Columns generate {v : F v = 0}. Computed from an elimination Gröbner basis
/// of the graph module {(F v, v)}. With `minimize` (and F graded) the columns
/// are a minimal homogeneous generating set, sorted by degree.
PolyMatrix syzygyMatrix(const PolyMatrix& F, bool minimize = true);

/// Trivial syzygies F_j e_i - F_i e_j (i < j) of a 1 x m matrix.
PolyMatrix koszulSyzygies(const PolyMatrix& F);

/// Solves A x = b modulo an ideal J applied componentwise. Reuses one
/// elimination Gröbner basis for many right-hand sides.
class ModuleLifter {
 public:
  explicit ModuleLifter(const PolyMatrix& A, const std::vector<Polynomial>& ideal = {});

  struct Reduction {
    /// Normal form of b modulo im A + J^rows.
    Vector remainder;
    /// x with b - remainder = A x (mod J).
    Vector coefficients;
  };
  Reduction reduce(const Vector& b) const;
  std::optional<Vector> lift(const Vector& b) const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  GroebnerBasis gb_;
};

/// X with A X = B mod J, or nullopt when some column is not liftable.
std::optional<PolyMatrix> moduleQuotientLift(const PolyMatrix& A, const PolyMatrix& B,
                                             const std::vector<Polynomial>& ideal = {});

/// All x-monomials of multidegree d, in descending monomial order.
/// Requires a positive grading.
std::vector<Monomial> monomialsOfDegree(const Ring& ring, const Degree& d);

struct GradedPiece {
  /// (monomial, free-module position) pairs labelling coordinates.
  std::vector<std::pair<Monomial, std::size_t>> labels;
  /// Columns are a basis of the piece in label coordinates.
  ScalarMatrix basis;
};

/// Degree-d piece of coker(presentation). The presentation must carry row
/// degrees; u*e_i has degree deg(u) + rowDegree(i).
GradedPiece gradedPieceBasis(const PolyMatrix& presentation, const Degree& d);

/// Standard monomials of multidegree d for an ideal basis.
std::vector<Monomial> standardMonomials(const GroebnerBasis& ideal, const Degree& d);
std::size_t hilbertFunction(const GroebnerBasis& ideal, const Degree& d);

/// True when QQ[x]/I is finite dimensional: every x-variable has a pure power
/// among the leading terms.
bool finiteColength(const GroebnerBasis& ideal);

}  // namespace versal
