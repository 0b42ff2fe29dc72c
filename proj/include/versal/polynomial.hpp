#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "versal/ring.hpp"

namespace versal {

struct Term {
  Monomial mono;
  Scalar coef;
};

/// Sparse polynomial in QQ[x; t]. Terms are kept in descending monomial order
/// with no zero coefficients, so structural equality is mathematical equality.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Takes terms in any order; combines duplicates and drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t v);
  static Polynomial monomial(RingPtr ring, Monomial m, const Scalar& c = 1);

  const RingPtr& ring() const { return ring_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t numTerms() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  const Term& leadTerm() const { return terms_.front(); }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial operator*(const Scalar& c) const;
  Polynomial mulTerm(const Monomial& m, const Scalar& c) const;

  friend bool operator==(const Polynomial& p, const Polynomial& q);

  Polynomial partialDerivative(std::size_t v) const;
  /// Common multidegree when homogeneous; nullopt otherwise. Zero has no degree.
  std::optional<Degree> multiDegree() const;
  bool isHomogeneous() const;

  /// Drops every term of total t-degree above k.
  Polynomial tTruncate(int k) const;
  /// Terms of total t-degree exactly k.
  Polynomial tPart(int k) const;
  /// Minimum t-degree over all terms; nullopt for zero.
  std::optional<int> tOrder() const;
  int maxTDegree() const;
  bool hasT() const;

  /// Groups terms by their t-monomial: result[mu] is an x-only polynomial.
  std::vector<std::pair<Monomial, Polynomial>> splitByT() const;

  /// Same terms viewed in another ring with identical x-block; t-exponents
  /// are padded with zeros or must vanish beyond the target t-block.
  Polynomial embed(const RingPtr& target) const;

  /// Coefficient of monomial m (zero when absent).
  Scalar coefficient(const Monomial& m) const;

  /// Canonical text; inverse of parseExpr.
  std::string toString() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial operator*(const Scalar& c, const Polynomial& p);

/// Parses the polynomial grammar: rational literals, identifiers, + - * ^ and
/// parentheses; `*` is mandatory between factors. Columns in errors are
/// 1-based; `line` is reported as given.
Polynomial parseExpr(std::string_view text, const RingPtr& ring, std::size_t line = 1);
std::string printExpr(const Polynomial& p);

}  // namespace versal
