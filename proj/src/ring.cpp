#include "versal/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "versal/errors.hpp"

namespace versal {

Degree operator+(const Degree& a, const Degree& b) {
  if (a.size() != b.size()) throw DimensionError("degree length mismatch");
  Degree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Degree operator-(const Degree& a, const Degree& b) {
  if (a.size() != b.size()) throw DimensionError("degree length mismatch");
  Degree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Degree operator-(const Degree& a) {
  Degree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

std::string toString(const Degree& d) {
  if (d.size() == 1) return std::to_string(d[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

int weight(const Degree& d) { return std::accumulate(d.begin(), d.end(), 0); }

std::string toString(const Scalar& c) { return c.get_str(); }

Monomial::Monomial(std::size_t numX, std::size_t numT)
    : exps_(numX + numT, 0), numX_(static_cast<std::uint16_t>(numX)) {}

Monomial::Monomial(std::vector<std::uint16_t> exponents, std::size_t numX)
    : exps_(std::move(exponents)), numX_(static_cast<std::uint16_t>(numX)) {
  recount();
}

void Monomial::setExponent(std::size_t v, std::uint16_t e) {
  int delta = int(e) - int(exps_[v]);
  exps_[v] = e;
  (v < numX_ ? xDeg_ : tDeg_) += delta;
}

void Monomial::recount() {
  xDeg_ = tDeg_ = 0;
  for (std::size_t v = 0; v < exps_.size(); ++v)
    (v < numX_ ? xDeg_ : tDeg_) += exps_[v];
}

bool Monomial::divides(const Monomial& other) const {
  if (xDeg_ > other.xDeg_ || tDeg_ > other.tDeg_) return false;
  for (std::size_t v = 0; v < exps_.size(); ++v)
    if (exps_[v] > other.exps_[v]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t v = 0; v < exps_.size(); ++v)
    if (exps_[v] && other.exps_[v]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t v = 0; v < exps_.size(); ++v) r.exps_[v] += other.exps_[v];
  r.xDeg_ += other.xDeg_;
  r.tDeg_ += other.tDeg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::size_t v = 0; v < exps_.size(); ++v) r.exps_[v] -= divisor.exps_[v];
  r.xDeg_ -= divisor.xDeg_;
  r.tDeg_ -= divisor.tDeg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t v = 0; v < exps_.size(); ++v)
    r.exps_[v] = std::max(exps_[v], other.exps_[v]);
  r.recount();
  return r;
}

Monomial Monomial::xPart() const {
  Monomial r = *this;
  std::fill(r.exps_.begin() + numX_, r.exps_.end(), 0);
  r.tDeg_ = 0;
  return r;
}

Monomial Monomial::tPart() const {
  Monomial r = *this;
  std::fill(r.exps_.begin(), r.exps_.begin() + numX_, 0);
  r.xDeg_ = 0;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

namespace {

int grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
            int degA, int degB) {
  if (degA != degB) return degA > degB ? 1 : -1;
  for (std::size_t v = hi; v-- > lo;) {
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int compareMonomials(const Monomial& a, const Monomial& b) {
  int c = grevlex(a, b, 0, a.numX(), a.xDegree(), b.xDegree());
  if (c) return c;
  return grevlex(a, b, a.numX(), a.size(), a.tDegree(), b.tDegree());
}

RingPtr Ring::create(std::vector<std::string> xVars, std::vector<Degree> xDegrees,
                     std::vector<std::string> tVars, std::vector<Degree> tDegrees) {
  if (xDegrees.size() != xVars.size())
    throw DimensionError("one degree is required per variable");
  std::size_t rank = xDegrees.empty() ? 1 : xDegrees.front().size();
  if (rank == 0) throw DimensionError("grading rank must be positive");
  if (tDegrees.empty()) tDegrees.assign(tVars.size(), Degree(rank, 0));
  if (tDegrees.size() != tVars.size())
    throw DimensionError("one degree is required per parameter");
  std::set<std::string> seen;
  for (const auto* block : {&xVars, &tVars})
    for (const auto& name : *block)
      if (!seen.insert(name).second)
        throw PreconditionError("duplicate variable name '" + name + "'");
  for (const auto* block : {&xDegrees, &tDegrees})
    for (const auto& d : *block)
      if (d.size() != rank) throw DimensionError("degree tuples differ in length");
  if (xVars.size() + tVars.size() > 0xffff)
    throw PreconditionError("too many variables");

  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->xVars_ = std::move(xVars);
  ring->tVars_ = std::move(tVars);
  ring->degrees_ = std::move(xDegrees);
  ring->degrees_.insert(ring->degrees_.end(), tDegrees.begin(), tDegrees.end());
  ring->rank_ = rank;
  return ring;
}

RingPtr Ring::standard(std::vector<std::string> xVars) {
  std::vector<Degree> degs(xVars.size(), Degree{1});
  return create(std::move(xVars), std::move(degs));
}

const std::string& Ring::varName(std::size_t v) const {
  return v < numX() ? xVars_[v] : tVars_[v - numX()];
}

const Degree& Ring::varDegree(std::size_t v) const { return degrees_[v]; }

std::optional<std::size_t> Ring::indexOf(std::string_view name) const {
  for (std::size_t v = 0; v < numVars(); ++v)
    if (varName(v) == name) return v;
  return std::nullopt;
}

bool Ring::positivelyGraded() const {
  for (std::size_t v = 0; v < numX(); ++v) {
    bool nonzero = false;
    for (int c : degrees_[v]) {
      if (c < 0) return false;
      nonzero |= c != 0;
    }
    if (!nonzero) return false;
  }
  return true;
}

Degree Ring::degreeOf(const Monomial& m) const {
  Degree d(rank_, 0);
  for (std::size_t v = 0; v < m.size(); ++v)
    if (m[v])
      for (std::size_t k = 0; k < rank_; ++k) d[k] += int(m[v]) * degrees_[v][k];
  return d;
}

RingPtr Ring::withParameters(std::vector<std::string> tVars,
                             std::vector<Degree> tDegrees) const {
  std::vector<Degree> xDegs(degrees_.begin(), degrees_.begin() + numX());
  return create(xVars_, std::move(xDegs), std::move(tVars), std::move(tDegrees));
}

RingPtr Ring::parameterRing() const { return standard(tVars_); }

bool Ring::sameAs(const Ring& other) const {
  return this == &other || (xVars_ == other.xVars_ && tVars_ == other.tVars_ &&
                            degrees_ == other.degrees_);
}

}  // namespace versal
