#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace versal {

using Scalar = mpq_class;
using Integer = mpz_class;

/// A multidegree; length equals the grading rank of the ring.
using Degree = std::vector<int>;

Degree operator+(const Degree& a, const Degree& b);
Degree operator-(const Degree& a, const Degree& b);
Degree operator-(const Degree& a);
std::string toString(const Degree& d);
/// Sum of components; strictly increasing along divisibility for positive
/// gradings, so it is used to sort by degree.
int weight(const Degree& d);

std::string toString(const Scalar& c);

/// Exponent vector over the two variable blocks (x first, then t).
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in a ring with the given block sizes.
  Monomial(std::size_t numX, std::size_t numT);
  Monomial(std::vector<std::uint16_t> exponents, std::size_t numX);

  std::size_t size() const { return exps_.size(); }
  std::size_t numX() const { return numX_; }
  std::uint16_t operator[](std::size_t v) const { return exps_[v]; }
  std::span<const std::uint16_t> exponents() const { return exps_; }
  void setExponent(std::size_t v, std::uint16_t e);

  int xDegree() const { return xDeg_; }
  int tDegree() const { return tDeg_; }
  int totalDegree() const { return xDeg_ + tDeg_; }
  bool isOne() const { return xDeg_ == 0 && tDeg_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// this / divisor; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial xPart() const;
  Monomial tPart() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  std::size_t hash() const;

 private:
  void recount();

  std::vector<std::uint16_t> exps_;
  std::uint16_t numX_ = 0;
  int xDeg_ = 0;
  int tDeg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Block order: graded reverse lexicographic on the x-block, ties broken by
/// graded reverse lexicographic on the t-block. Returns -1, 0 or 1.
int compareMonomials(const Monomial& a, const Monomial& b);

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring QQ[x; t] with a Z^r grading on every variable.
class Ring {
 public:
  static RingPtr create(std::vector<std::string> xVars,
                        std::vector<Degree> xDegrees,
                        std::vector<std::string> tVars = {},
                        std::vector<Degree> tDegrees = {});
  /// Standard Z-grading: every x variable has degree 1.
  static RingPtr standard(std::vector<std::string> xVars);

  std::size_t numX() const { return xVars_.size(); }
  std::size_t numT() const { return tVars_.size(); }
  std::size_t numVars() const { return numX() + numT(); }
  std::size_t gradingRank() const { return rank_; }

  const std::string& varName(std::size_t v) const;
  const Degree& varDegree(std::size_t v) const;
  const std::vector<std::string>& xVars() const { return xVars_; }
  const std::vector<std::string>& tVars() const { return tVars_; }
  std::optional<std::size_t> indexOf(std::string_view name) const;

  /// True when every x-variable degree is componentwise non-negative and
  /// nonzero, so that each graded piece of QQ[x] is finite dimensional.
  bool positivelyGraded() const;

  Monomial one() const { return Monomial(numX(), numT()); }
  Degree zeroDegree() const { return Degree(rank_, 0); }
  Degree degreeOf(const Monomial& m) const;

  /// Same x-block and grading with a fresh t-block.
  RingPtr withParameters(std::vector<std::string> tVars,
                         std::vector<Degree> tDegrees) const;

  /// Ring whose x-block is this ring's t-block, standard Z-graded.
  RingPtr parameterRing() const;

  bool sameAs(const Ring& other) const;

 private:
  Ring() = default;

  std::vector<std::string> xVars_;
  std::vector<std::string> tVars_;
  std::vector<Degree> degrees_;
  std::size_t rank_ = 1;
};

}  // namespace versal
