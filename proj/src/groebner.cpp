#include "versal/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "versal/errors.hpp"

namespace versal {

using Element = GroebnerBasis::Element;
using ModTerm = GroebnerBasis::ModTerm;

int GroebnerBasis::compare(const ModTerm& a, const ModTerm& b) const {
  bool topA = a.pos < order_.eliminationBlock;
  bool topB = b.pos < order_.eliminationBlock;
  if (topA != topB) return topA ? 1 : -1;
  int c = compareMonomials(a.mono, b.mono);
  if (c) return c;
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  return 0;
}

void GroebnerBasis::sortElement(Element& e) const {
  std::sort(e.begin(), e.end(),
            [this](const ModTerm& a, const ModTerm& b) { return compare(a, b) > 0; });
}

Element GroebnerBasis::toElement(const Vector& v) const {
  if (v.size() != rank_) throw DimensionError("vector rank does not match the module");
  Element e;
  for (std::size_t pos = 0; pos < v.size(); ++pos)
    for (const auto& t : v[pos].terms())
      e.push_back({t.mono, static_cast<std::uint32_t>(pos), t.coef});
  sortElement(e);
  return e;
}

Vector GroebnerBasis::toVector(const Element& e) const {
  std::vector<std::vector<Term>> parts(rank_);
  for (const auto& t : e) parts[t.pos].push_back({t.mono, t.coef});
  Vector v;
  v.reserve(rank_);
  for (auto& p : parts) v.emplace_back(ring_, std::move(p));
  return v;
}

namespace {

// p[pStart..] - c * m * g[gStart..], both in descending order.
template <class Cmp>
Element subtractMultiple(Element& p, std::size_t pStart, const Scalar& c, const Monomial& m,
                         const Element& g, std::size_t gStart, Cmp cmp) {
  Element out;
  out.reserve(p.size() - pStart + g.size() - gStart);
  std::size_t i = pStart, j = gStart;
  ModTerm scaled;
  bool haveScaled = false;
  auto loadScaled = [&] {
    if (j < g.size()) {
      scaled = {g[j].mono * m, g[j].pos, g[j].coef * c};
      haveScaled = true;
    } else {
      haveScaled = false;
    }
  };
  loadScaled();
  while (i < p.size() && haveScaled) {
    int k = cmp(p[i], scaled);
    if (k > 0) {
      out.push_back(std::move(p[i++]));
    } else if (k < 0) {
      scaled.coef = -scaled.coef;
      out.push_back(std::move(scaled));
      ++j;
      loadScaled();
    } else {
      Scalar s = p[i].coef - scaled.coef;
      if (sgn(s) != 0) out.push_back({std::move(p[i].mono), p[i].pos, std::move(s)});
      ++i;
      ++j;
      loadScaled();
    }
  }
  for (; i < p.size(); ++i) out.push_back(std::move(p[i]));
  while (haveScaled) {
    scaled.coef = -scaled.coef;
    out.push_back(std::move(scaled));
    ++j;
    loadScaled();
  }
  return out;
}

void makeMonic(Element& e) {
  if (e.empty() || e[0].coef == 1) return;
  Scalar inv = 1 / e[0].coef;
  for (auto& t : e) t.coef *= inv;
}

}  // namespace

std::ptrdiff_t GroebnerBasis::findReducer(const ModTerm& t) const {
  for (std::size_t idx : byPosition_[t.pos])
    if (basis_[idx][0].mono.divides(t.mono)) return static_cast<std::ptrdiff_t>(idx);
  return -1;
}

Element GroebnerBasis::reduce(Element p) const {
  auto cmp = [this](const ModTerm& a, const ModTerm& b) { return compare(a, b); };
  Element rem;
  std::size_t head = 0;
  while (head < p.size()) {
    std::ptrdiff_t idx = findReducer(p[head]);
    if (idx < 0) {
      rem.push_back(std::move(p[head++]));
      continue;
    }
    const Element& g = basis_[idx];
    Scalar c = p[head].coef / g[0].coef;
    Monomial m = p[head].mono / g[0].mono;
    p = subtractMultiple(p, head + 1, c, m, g, 1, cmp);
    head = 0;
  }
  return rem;
}

void GroebnerBasis::insert(Element e) {
  makeMonic(e);
  byPosition_[e[0].pos].push_back(basis_.size());
  basis_.push_back(std::move(e));
}

namespace {

struct Pair {
  int degree;
  std::size_t i;
  std::size_t j;
  friend bool operator<(const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

std::uint64_t pairKey(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return (std::uint64_t(i) << 32) | std::uint64_t(j);
}

}  // namespace

void GroebnerBasis::buchberger() {
  auto cmp = [this](const ModTerm& a, const ModTerm& b) { return compare(a, b); };
  std::set<Pair> queue;
  std::unordered_set<std::uint64_t> pending;
  auto addPairsFor = [&](std::size_t n) {
    const ModTerm& lt = basis_[n][0];
    for (std::size_t i : byPosition_[lt.pos]) {
      if (i == n) continue;
      const ModTerm& other = basis_[i][0];
      if (rank_ == 1 && lt.mono.coprime(other.mono)) continue;
      queue.insert({lt.mono.lcm(other.mono).totalDegree(), std::min(i, n), std::max(i, n)});
      pending.insert(pairKey(i, n));
    }
  };
  for (std::size_t n = 0; n < basis_.size(); ++n) {
    // Pairs among the inputs; each pair once.
    const ModTerm& lt = basis_[n][0];
    for (std::size_t i : byPosition_[lt.pos]) {
      if (i >= n) break;
      const ModTerm& other = basis_[i][0];
      if (rank_ == 1 && lt.mono.coprime(other.mono)) continue;
      queue.insert({lt.mono.lcm(other.mono).totalDegree(), i, n});
      pending.insert(pairKey(i, n));
    }
  }
  while (!queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase(pairKey(pr.i, pr.j));
    const Element& gi = basis_[pr.i];
    const Element& gj = basis_[pr.j];
    Monomial l = gi[0].mono.lcm(gj[0].mono);
    bool chain = false;
    for (std::size_t k : byPosition_[gi[0].pos]) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis_[k][0].mono.divides(l)) continue;
      if (pending.count(pairKey(pr.i, k)) || pending.count(pairKey(pr.j, k))) continue;
      chain = true;
      break;
    }
    if (chain) continue;
    Element s;
    s.reserve(gi.size() + gj.size());
    Monomial mi = l / gi[0].mono;
    for (std::size_t t = 1; t < gi.size(); ++t)
      s.push_back({gi[t].mono * mi, gi[t].pos, gi[t].coef});
    s = subtractMultiple(s, 0, Scalar(1), l / gj[0].mono, gj, 1, cmp);
    Element r = reduce(std::move(s));
    if (r.empty()) continue;
    insert(std::move(r));
    addPairsFor(basis_.size() - 1);
  }
}

void GroebnerBasis::minimizeAndInterreduce() {
  std::vector<bool> keep(basis_.size(), true);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < basis_.size() && keep[i]; ++j) {
      if (i == j || !keep[j] || basis_[i][0].pos != basis_[j][0].pos) continue;
      if (!basis_[j][0].mono.divides(basis_[i][0].mono)) continue;
      if (basis_[j][0].mono == basis_[i][0].mono && j > i) continue;
      keep[i] = false;
    }
  }
  std::vector<Element> kept;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (keep[i]) kept.push_back(std::move(basis_[i]));
  std::sort(kept.begin(), kept.end(),
            [this](const Element& a, const Element& b) { return compare(a[0], b[0]) < 0; });
  basis_ = std::move(kept);
  for (auto& list : byPosition_) list.clear();
  for (std::size_t i = 0; i < basis_.size(); ++i) byPosition_[basis_[i][0].pos].push_back(i);
  for (auto& g : basis_) {
    Element tail(std::make_move_iterator(g.begin() + 1), std::make_move_iterator(g.end()));
    Element reduced = reduce(std::move(tail));
    g.resize(1);
    for (auto& t : reduced) g.push_back(std::move(t));
  }
}

GroebnerBasis GroebnerBasis::compute(const RingPtr& ring, std::size_t rank,
                                     const std::vector<Vector>& generators, ModuleOrder order) {
  GroebnerBasis gb(ring, rank, order);
  for (const auto& v : generators) {
    Element e = gb.toElement(v);
    if (!e.empty()) gb.insert(std::move(e));
  }
  gb.buchberger();
  gb.minimizeAndInterreduce();
  return gb;
}

GroebnerBasis GroebnerBasis::ofIdeal(const std::vector<Polynomial>& generators) {
  if (generators.empty()) throw PreconditionError("an ideal needs at least one generator");
  std::vector<Vector> gens;
  for (const auto& g : generators) gens.push_back({g});
  return compute(generators.front().ring(), 1, gens);
}

std::vector<Vector> GroebnerBasis::elements() const {
  std::vector<Vector> out;
  for (const auto& e : basis_) out.push_back(toVector(e));
  return out;
}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  if (rank_ != 1) throw DimensionError("not an ideal basis");
  std::vector<Polynomial> out;
  for (const auto& e : basis_) out.push_back(toVector(e)[0]);
  return out;
}

Vector GroebnerBasis::normalForm(const Vector& v) const { return toVector(reduce(toElement(v))); }

Polynomial GroebnerBasis::normalForm(const Polynomial& p) const {
  if (rank_ != 1) throw DimensionError("not an ideal basis");
  return normalForm(Vector{p})[0];
}

bool GroebnerBasis::isStandard(const Monomial& m, std::size_t pos) const {
  for (std::size_t idx : byPosition_.at(pos))
    if (basis_[idx][0].mono.divides(m)) return false;
  return true;
}

std::vector<std::pair<Monomial, std::size_t>> GroebnerBasis::leadingTerms() const {
  std::vector<std::pair<Monomial, std::size_t>> out;
  for (const auto& e : basis_) out.emplace_back(e[0].mono, e[0].pos);
  return out;
}

namespace {

std::vector<Degree> columnDegreesOrEmpty(const PolyMatrix& F) {
  if (F.colDegrees().size() == F.cols() && F.rowDegrees().size() == F.rows())
    return F.colDegrees();
  PolyMatrix copy = F;
  std::vector<Degree> zero(F.rows(), F.ring()->zeroDegree());
  if (copy.inferColumnDegrees(zero)) return copy.colDegrees();
  return {};
}

}  // namespace

PolyMatrix syzygyMatrix(const PolyMatrix& F, bool minimize) {
  const RingPtr& ring = F.ring();
  std::size_t r = F.rows(), m = F.cols();
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < m; ++j) {
    Vector v = F.column(j);
    Vector bottom = zeroVector(ring, m);
    bottom[j] = Polynomial::constant(ring, 1);
    v.insert(v.end(), bottom.begin(), bottom.end());
    gens.push_back(std::move(v));
  }
  GroebnerBasis gb = GroebnerBasis::compute(ring, r + m, gens, ModuleOrder{r});
  std::vector<Vector> candidates;
  for (const auto& e : gb.elements()) {
    bool topZero = true;
    for (std::size_t i = 0; i < r; ++i) topZero &= e[i].isZero();
    if (topZero) candidates.emplace_back(e.begin() + r, e.end());
  }

  std::vector<Degree> colDegF = columnDegreesOrEmpty(F);
  std::vector<Degree> syzDeg;
  bool graded = !colDegF.empty();
  if (graded) {
    for (const auto& v : candidates) {
      std::optional<Degree> deg;
      for (std::size_t k = 0; k < m && graded; ++k) {
        if (v[k].isZero()) continue;
        auto d = v[k].multiDegree();
        if (!d || (deg && *deg != *d + colDegF[k])) graded = false;
        else deg = *d + colDegF[k];
      }
      syzDeg.push_back(deg.value_or(ring->zeroDegree()));
    }
  }
  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (graded) return weight(syzDeg[a]) < weight(syzDeg[b]);
    int da = 0, db = 0;
    for (const auto& p : candidates[a])
      if (!p.isZero()) da = std::max(da, p.leadTerm().mono.totalDegree());
    for (const auto& p : candidates[b])
      if (!p.isZero()) db = std::max(db, p.leadTerm().mono.totalDegree());
    return da < db;
  });

  std::vector<std::size_t> chosen;
  if (minimize) {
    std::vector<Vector> kept;
    std::optional<GroebnerBasis> keptGb;
    for (std::size_t idx : order) {
      if (keptGb && keptGb->contains(candidates[idx])) continue;
      kept.push_back(candidates[idx]);
      chosen.push_back(idx);
      keptGb = GroebnerBasis::compute(ring, m, kept);
    }
  } else {
    chosen = order;
  }
  std::vector<Vector> cols;
  std::vector<Degree> cdeg;
  for (std::size_t idx : chosen) {
    cols.push_back(candidates[idx]);
    if (graded) cdeg.push_back(syzDeg[idx]);
  }
  PolyMatrix out = PolyMatrix::fromColumns(ring, m, cols);
  if (graded) out.setDegrees(colDegF, cdeg);
  return out;
}

PolyMatrix koszulSyzygies(const PolyMatrix& F) {
  if (F.rows() != 1) throw DimensionError("Koszul syzygies need a 1 x m matrix");
  const RingPtr& ring = F.ring();
  std::size_t m = F.cols();
  std::vector<Vector> cols;
  std::vector<Degree> degs;
  std::vector<Degree> colDegF = columnDegreesOrEmpty(F);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vector v = zeroVector(ring, m);
      v[i] = F(0, j);
      v[j] = -F(0, i);
      cols.push_back(std::move(v));
      if (!colDegF.empty()) degs.push_back(colDegF[i] + colDegF[j]);
    }
  PolyMatrix out = PolyMatrix::fromColumns(ring, m, cols);
  if (!colDegF.empty()) out.setDegrees(colDegF, degs);
  return out;
}

ModuleLifter::ModuleLifter(const PolyMatrix& A, const std::vector<Polynomial>& ideal)
    : ring_(A.ring()),
      rows_(A.rows()),
      cols_(A.cols()),
      gb_([&] {
        std::vector<Vector> gens;
        for (std::size_t j = 0; j < A.cols(); ++j) {
          Vector v = A.column(j);
          Vector bottom = zeroVector(A.ring(), A.cols());
          bottom[j] = Polynomial::constant(A.ring(), 1);
          v.insert(v.end(), bottom.begin(), bottom.end());
          gens.push_back(std::move(v));
        }
        for (const auto& g : ideal) {
          if (g.isZero()) continue;
          for (std::size_t i = 0; i < A.rows(); ++i) {
            Vector v = zeroVector(A.ring(), A.rows() + A.cols());
            v[i] = g;
            gens.push_back(std::move(v));
          }
        }
        return GroebnerBasis::compute(A.ring(), A.rows() + A.cols(), gens,
                                      ModuleOrder{A.rows()});
      }()) {}

ModuleLifter::Reduction ModuleLifter::reduce(const Vector& b) const {
  if (b.size() != rows_) throw DimensionError("right-hand side has the wrong length");
  Vector full = b;
  for (std::size_t j = 0; j < cols_; ++j) full.emplace_back(ring_);
  Vector nf = gb_.normalForm(full);
  Reduction out;
  out.remainder.assign(nf.begin(), nf.begin() + rows_);
  for (std::size_t j = 0; j < cols_; ++j) out.coefficients.push_back(-nf[rows_ + j]);
  return out;
}

std::optional<Vector> ModuleLifter::lift(const Vector& b) const {
  Reduction r = reduce(b);
  if (!isZero(r.remainder)) return std::nullopt;
  return std::move(r.coefficients);
}

std::optional<PolyMatrix> moduleQuotientLift(const PolyMatrix& A, const PolyMatrix& B,
                                             const std::vector<Polynomial>& ideal) {
  if (A.rows() != B.rows()) throw DimensionError("moduleQuotientLift: row counts differ");
  ModuleLifter lifter(A, ideal);
  PolyMatrix X(A.ring(), A.cols(), B.cols());
  for (std::size_t c = 0; c < B.cols(); ++c) {
    auto x = lifter.lift(B.column(c));
    if (!x) return std::nullopt;
    X.setColumn(c, *x);
  }
  return X;
}

std::vector<Monomial> monomialsOfDegree(const Ring& ring, const Degree& d) {
  if (!ring.positivelyGraded())
    throw PreconditionError("graded pieces need a positive grading on the x variables");
  if (d.size() != ring.gradingRank()) throw DimensionError("degree has the wrong length");
  std::vector<Monomial> out;
  for (int c : d)
    if (c < 0) return out;
  std::vector<std::uint16_t> exps(ring.numVars(), 0);
  std::function<void(std::size_t, Degree)> rec = [&](std::size_t v, Degree rest) {
    if (v == ring.numX()) {
      for (int c : rest)
        if (c != 0) return;
      out.emplace_back(exps, ring.numX());
      return;
    }
    const Degree& dv = ring.varDegree(v);
    for (std::uint16_t e = 0;; ++e) {
      bool ok = true;
      for (int c : rest) ok &= c >= 0;
      if (!ok) break;
      exps[v] = e;
      rec(v + 1, rest);
      for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= dv[k];
    }
    exps[v] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return compareMonomials(a, b) > 0; });
  return out;
}

GradedPiece gradedPieceBasis(const PolyMatrix& presentation, const Degree& d) {
  if (presentation.rowDegrees().size() != presentation.rows())
    throw PreconditionError("graded piece needs row degrees on the presentation");
  const RingPtr& ring = presentation.ring();
  GroebnerBasis gb = GroebnerBasis::compute(ring, presentation.rows(), presentation.columns());
  GradedPiece piece;
  for (std::size_t i = 0; i < presentation.rows(); ++i)
    for (auto& mono : monomialsOfDegree(*ring, d - presentation.rowDegrees()[i]))
      if (gb.isStandard(mono, i)) piece.labels.emplace_back(std::move(mono), i);
  piece.basis = ScalarMatrix::identity(piece.labels.size());
  return piece;
}

std::vector<Monomial> standardMonomials(const GroebnerBasis& ideal, const Degree& d) {
  std::vector<Monomial> out;
  for (auto& m : monomialsOfDegree(*ideal.ring(), d))
    if (ideal.isStandard(m, 0)) out.push_back(std::move(m));
  return out;
}

std::size_t hilbertFunction(const GroebnerBasis& ideal, const Degree& d) {
  if (ideal.rank() != 1) throw DimensionError("Hilbert function needs an ideal basis");
  return standardMonomials(ideal, d).size();
}

bool finiteColength(const GroebnerBasis& ideal) {
  const Ring& ring = *ideal.ring();
  std::vector<bool> hit(ring.numX(), false);
  for (const auto& [m, pos] : ideal.leadingTerms()) {
    if (m.tDegree() != 0) continue;
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < ring.numX(); ++v)
      if (m[v]) {
        ++support;
        var = v;
      }
    if (support == 0) return true;  // unit ideal
    if (support == 1) hit[var] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace versal
