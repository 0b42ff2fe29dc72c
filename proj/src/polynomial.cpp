#include "versal/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "versal/errors.hpp"

namespace versal {

namespace {

void requireSameRing(const RingPtr& a, const RingPtr& b) {
  if (a != b && !a->sameAs(*b)) throw RingMismatchError();
}

bool termGreater(const Term& a, const Term& b) {
  return compareMonomials(a.mono, b.mono) > 0;
}

// Sorts descending, merges equal monomials and drops zero coefficients.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), termGreater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Scalar c = terms[i].coef;
    while (j < terms.size() && terms[j].mono == terms[i].mono) c += terms[j++].coef;
    if (sgn(c) != 0) {
      if (out != i) terms[out].mono = std::move(terms[i].mono);
      terms[out].coef = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Merge of two canonical term lists: a + sign*b.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, bool negateB) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compareMonomials(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (negateB) out.back().coef = -out.back().coef;
    } else {
      Scalar s = negateB ? Scalar(a[i].coef - b[j].coef) : Scalar(a[i].coef + b[j].coef);
      if (sgn(s) != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (negateB) out.back().coef = -out.back().coef;
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.mono.size() != ring_->numVars() || t.mono.numX() != ring_->numX())
      throw DimensionError("monomial does not fit the ring");
  canonicalize(terms_);
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Monomial one = ring->one();
  return monomial(std::move(ring), std::move(one), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t v) {
  if (v >= ring->numVars()) throw DimensionError("variable index out of range");
  Monomial m = ring->one();
  m.setExponent(v, 1);
  return monomial(std::move(ring), std::move(m));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Scalar& c) {
  Polynomial p(std::move(ring));
  if (sgn(c) != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
  requireSameRing(ring_, q.ring_);
  Polynomial r(ring_);
  r.terms_ = merge(terms_, q.terms_, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
  requireSameRing(ring_, q.ring_);
  Polynomial r(ring_);
  r.terms_ = merge(terms_, q.terms_, true);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  if (q.isZero()) return *this;
  return *this = *this + q;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  if (q.isZero()) return *this;
  return *this = *this - q;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
  requireSameRing(ring_, q.ring_);
  Polynomial r(ring_);
  if (isZero() || q.isZero()) return r;
  if (terms_.size() == 1) return q.mulTerm(terms_[0].mono, terms_[0].coef);
  if (q.terms_.size() == 1) return mulTerm(q.terms_[0].mono, q.terms_[0].coef);
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(terms_.size() * q.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : q.terms_) {
      auto [it, inserted] = acc.try_emplace(a.mono * b.mono, a.coef * b.coef);
      if (!inserted) it->second += a.coef * b.coef;
    }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) r.terms_.push_back({m, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(), termGreater);
  return r;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
  Polynomial r(ring_);
  if (sgn(c) == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial operator*(const Scalar& c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::mulTerm(const Monomial& m, const Scalar& c) const {
  Polynomial r(ring_);
  if (sgn(c) == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order of terms.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  if (p.terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < p.terms_.size(); ++i)
    if (!(p.terms_[i].mono == q.terms_[i].mono) || p.terms_[i].coef != q.terms_[i].coef)
      return false;
  return true;
}

Polynomial Polynomial::partialDerivative(std::size_t v) const {
  if (v >= ring_->numVars()) throw DimensionError("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[v] == 0) continue;
    Monomial m = t.mono;
    m.setExponent(v, t.mono[v] - 1);
    out.push_back({std::move(m), t.coef * t.mono[v]});
  }
  return Polynomial(ring_, std::move(out));
}

std::optional<Degree> Polynomial::multiDegree() const {
  if (isZero()) return std::nullopt;
  Degree d = ring_->degreeOf(terms_[0].mono);
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (ring_->degreeOf(terms_[i].mono) != d) return std::nullopt;
  return d;
}

bool Polynomial::isHomogeneous() const { return isZero() || multiDegree().has_value(); }

Polynomial Polynomial::tTruncate(int k) const {
  Polynomial r(ring_);
  for (const auto& t : terms_)
    if (t.mono.tDegree() <= k) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::tPart(int k) const {
  Polynomial r(ring_);
  for (const auto& t : terms_)
    if (t.mono.tDegree() == k) r.terms_.push_back(t);
  return r;
}

std::optional<int> Polynomial::tOrder() const {
  if (isZero()) return std::nullopt;
  int best = terms_[0].mono.tDegree();
  for (const auto& t : terms_) best = std::min(best, t.mono.tDegree());
  return best;
}

int Polynomial::maxTDegree() const {
  int best = 0;
  for (const auto& t : terms_) best = std::max(best, t.mono.tDegree());
  return best;
}

bool Polynomial::hasT() const {
  for (const auto& t : terms_)
    if (t.mono.tDegree() > 0) return true;
  return false;
}

std::vector<std::pair<Monomial, Polynomial>> Polynomial::splitByT() const {
  std::vector<std::pair<Monomial, Polynomial>> out;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (const auto& t : terms_) {
    Monomial tp = t.mono.tPart();
    auto [it, inserted] = index.try_emplace(tp, out.size());
    if (inserted) out.emplace_back(tp, Polynomial(ring_));
    // Terms arrive in descending order and x-parts within one t-monomial keep
    // that order because the x-block is compared first.
    out[it->second].second.terms_.push_back({t.mono.xPart(), t.coef});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return compareMonomials(a.first, b.first) > 0;
  });
  return out;
}

Polynomial Polynomial::embed(const RingPtr& target) const {
  if (target == ring_) return *this;
  if (target->numX() != ring_->numX())
    throw RingMismatchError();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::uint16_t> e(target->numVars(), 0);
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (t.mono[v] == 0) continue;
      if (v >= target->numVars()) throw RingMismatchError();
      e[v] = t.mono[v];
    }
    out.push_back({Monomial(std::move(e), target->numX()), t.coef});
  }
  return Polynomial(target, std::move(out));
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return 0;
}

std::string Polynomial::toString() const { return printExpr(*this); }

}  // namespace versal
