#include "versal/cotangent.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "versal/errors.hpp"

namespace versal {

namespace {

// Coordinates of a graded piece of (S/I)^k in the basis of standard
// monomials: position p carries monomials of degree positionDegrees[p] + d.
class PieceCoordinates {
 public:
  PieceCoordinates(const GroebnerBasis& ideal, const std::vector<Degree>& positionDegrees,
                   const Degree& d)
      : ring_(ideal.ring()), index_(positionDegrees.size()) {
    for (std::size_t p = 0; p < positionDegrees.size(); ++p)
      for (auto& m : standardMonomials(ideal, positionDegrees[p] + d)) {
        index_[p].emplace(m, labels_.size());
        labels_.emplace_back(p, std::move(m));
      }
  }

  std::size_t size() const { return labels_.size(); }
  std::size_t rank() const { return index_.size(); }
  const std::pair<std::size_t, Monomial>& label(std::size_t k) const { return labels_[k]; }

  // Writes the coordinates of a reduced vector into column `col` of `out`,
  // starting at row `offset`.
  void write(const Vector& v, ScalarMatrix& out, std::size_t col, std::size_t offset = 0) const {
    for (std::size_t p = 0; p < v.size(); ++p)
      for (const auto& t : v[p].terms()) {
        auto it = index_[p].find(t.mono);
        if (it == index_[p].end())
          throw Error("internal: term " + printExpr(Polynomial::monomial(ring_, t.mono)) +
                      " lies outside the graded piece");
        out(offset + it->second, col) = t.coef;
      }
  }

  Vector vectorFrom(const ScalarMatrix& m, std::size_t col) const {
    std::vector<std::vector<Term>> parts(rank());
    for (std::size_t k = 0; k < size(); ++k)
      if (sgn(m(k, col)) != 0) parts[labels_[k].first].push_back({labels_[k].second, m(k, col)});
    Vector v;
    for (auto& p : parts) v.emplace_back(ring_, std::move(p));
    return v;
  }

 private:
  RingPtr ring_;
  std::vector<std::pair<std::size_t, Monomial>> labels_;
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> index_;
};

Polynomial reducedMultiple(const GroebnerBasis& ideal, const Polynomial& p, const Monomial& u) {
  if (p.isZero()) return p;
  return ideal.normalForm(p.mulTerm(u, 1));
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial acc(m[0][0].ring());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].isZero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * determinant(minor);
    if (c % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

void combinations(std::size_t n, std::size_t k,
                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

}  // namespace

std::size_t krullDimension(const GroebnerBasis& ideal) {
  const Ring& ring = *ideal.ring();
  std::size_t n = ring.numX();
  if (n > 62) throw PreconditionError("too many variables for the dimension search");
  std::vector<std::uint64_t> supports;
  for (const auto& [m, pos] : ideal.leadingTerms()) {
    std::uint64_t mask = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (m[v]) mask |= std::uint64_t(1) << v;
    if (mask == 0) return 0;  // unit ideal: empty variety, report 0
    supports.push_back(mask);
  }
  std::size_t best = 0;
  std::function<void(std::size_t, std::uint64_t, std::size_t)> dfs =
      [&](std::size_t v, std::uint64_t chosen, std::size_t count) {
        if (count + (n - v) <= best) return;
        if (v == n) {
          best = count;
          return;
        }
        std::uint64_t with = chosen | (std::uint64_t(1) << v);
        bool ok = std::none_of(supports.begin(), supports.end(),
                               [&](std::uint64_t s) { return (s & ~with) == 0; });
        if (ok) dfs(v + 1, with, count + 1);
        dfs(v + 1, chosen, count);
      };
  dfs(0, 0, 0);
  return best;
}

PolyMatrix jacobianMatrix(const PolyMatrix& F0) {
  const RingPtr& ring = F0.ring();
  PolyMatrix J(ring, F0.cols(), ring->numX());
  for (std::size_t j = 0; j < F0.cols(); ++j)
    for (std::size_t v = 0; v < ring->numX(); ++v) J(j, v) = F0(0, j).partialDerivative(v);
  return J;
}

CotangentComplex::CotangentComplex(const PolyMatrix& F0)
    : F0_(F0),
      ideal_([&] {
        if (F0.rows() != 1 || F0.cols() == 0)
          throw DimensionError("generators must form a nonempty 1 x m row");
        std::vector<Polynomial> gens;
        for (std::size_t j = 0; j < F0.cols(); ++j) {
          if (F0(0, j).isZero()) throw PreconditionError("generators must be nonzero");
          if (F0(0, j).hasT()) throw PreconditionError("generators must not involve parameters");
          gens.push_back(F0(0, j));
        }
        return GroebnerBasis::ofIdeal(gens);
      }()),
      R0_(F0.ring(), F0.cols(), 0) {
  homogeneous_ = true;
  for (std::size_t j = 0; j < F0_.cols(); ++j) {
    auto d = F0_(0, j).multiDegree();
    if (!d) {
      homogeneous_ = false;
      break;
    }
    genDegrees_.push_back(*d);
  }
  if (homogeneous_) F0_.setDegrees({F0_.ring()->zeroDegree()}, genDegrees_);
  else genDegrees_.clear();
  R0_ = syzygyMatrix(F0_);
}

void CotangentComplex::requireGraded() const {
  if (!homogeneous_)
    throw PreconditionError("graded computation requires homogeneous generators");
  if (!F0_.ring()->positivelyGraded())
    throw PreconditionError("graded computation requires a positive grading");
}

TangentBasis CotangentComplex::normalPiece(const Degree& d, bool modJacobian) const {
  requireGraded();
  const RingPtr& ring = F0_.ring();
  if (d.size() != ring->gradingRank()) throw DimensionError("degree has the wrong length");
  std::size_t m = F0_.cols(), l = R0_.cols();
  PieceCoordinates dom(ideal_, genDegrees_, d);
  PieceCoordinates cod(ideal_, R0_.colDegrees(), d);

  ScalarMatrix cocycle(cod.size(), dom.size());
  for (std::size_t k = 0; k < dom.size(); ++k) {
    const auto& [j, u] = dom.label(k);
    Vector img(l, Polynomial(ring));
    for (std::size_t c = 0; c < l; ++c) img[c] = reducedMultiple(ideal_, R0_(j, c), u);
    cod.write(img, cocycle, k);
  }
  ScalarMatrix kernel = kernelBasis(cocycle);

  if (modJacobian && kernel.cols() > 0) {
    std::vector<ScalarMatrix> blocks;
    std::vector<Vector> images;
    for (std::size_t v = 0; v < ring->numX(); ++v) {
      Vector partials(m, Polynomial(ring));
      for (std::size_t j = 0; j < m; ++j) partials[j] = F0_(0, j).partialDerivative(v);
      for (const auto& u : monomialsOfDegree(*ring, d + ring->varDegree(v))) {
        Vector img(m, Polynomial(ring));
        for (std::size_t j = 0; j < m; ++j) img[j] = reducedMultiple(ideal_, partials[j], u);
        if (!isZero(img)) images.push_back(std::move(img));
      }
    }
    ScalarMatrix imageMat(dom.size(), images.size());
    for (std::size_t k = 0; k < images.size(); ++k) dom.write(images[k], imageMat, k);
    std::vector<std::size_t> keep = complementColumns(imageMat, kernel);
    ScalarMatrix chosen(kernel.rows(), keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c)
      for (std::size_t r = 0; r < kernel.rows(); ++r) chosen(r, c) = kernel(r, keep[c]);
    kernel = std::move(chosen);
  }

  std::vector<Vector> cols;
  for (std::size_t c = 0; c < kernel.cols(); ++c) cols.push_back(dom.vectorFrom(kernel, c));
  TangentBasis out{PolyMatrix::fromColumns(ring, m, cols),
                   std::vector<Degree>(cols.size(), d), TangentMode::GradedPiece, d};
  std::vector<Degree> rowDeg;
  for (const auto& g : genDegrees_) rowDeg.push_back(-g);
  out.columns.setDegrees(rowDeg, out.columnDegrees);
  return out;
}

TangentBasis CotangentComplex::obstructionPiece(const Degree& d) const {
  requireGraded();
  const RingPtr& ring = F0_.ring();
  if (d.size() != ring->gradingRank()) throw DimensionError("degree has the wrong length");
  std::size_t m = F0_.cols(), l = R0_.cols();
  if (l == 0) {
    TangentBasis empty{PolyMatrix(ring, 0, 0), {}, TangentMode::GradedPiece, d};
    empty.columns.setDegrees({}, {});
    return empty;
  }
  PolyMatrix koszul = koszulSyzygies(F0_);
  if (!koszulLift_) {
    auto lift = moduleQuotientLift(R0_, koszul);
    if (!lift) throw LiftError("Koszul relations do not lift through the relation matrix");
    koszulLift_ = std::move(*lift);
    secondSyzygies_ = syzygyMatrix(R0_, false);
  }
  const PolyMatrix& lambda = *koszulLift_;
  const PolyMatrix& second = *secondSyzygies_;

  PieceCoordinates dom(ideal_, R0_.colDegrees(), d);
  PieceCoordinates codK(ideal_, koszul.colDegrees(), d);
  PieceCoordinates codB(ideal_, second.colDegrees(), d);
  ScalarMatrix cocycle(codK.size() + codB.size(), dom.size());
  for (std::size_t k = 0; k < dom.size(); ++k) {
    const auto& [c, u] = dom.label(k);
    Vector vk(lambda.cols(), Polynomial(ring));
    for (std::size_t q = 0; q < lambda.cols(); ++q) vk[q] = reducedMultiple(ideal_, lambda(c, q), u);
    codK.write(vk, cocycle, k);
    Vector vb(second.cols(), Polynomial(ring));
    for (std::size_t s = 0; s < second.cols(); ++s) vb[s] = reducedMultiple(ideal_, second(c, s), u);
    codB.write(vb, cocycle, k, codK.size());
  }
  ScalarMatrix kernel = kernelBasis(cocycle);

  if (kernel.cols() > 0) {
    PieceCoordinates eta(ideal_, genDegrees_, d);
    ScalarMatrix imageMat(dom.size(), eta.size());
    for (std::size_t k = 0; k < eta.size(); ++k) {
      const auto& [j, u] = eta.label(k);
      Vector img(l, Polynomial(ring));
      for (std::size_t c = 0; c < l; ++c) img[c] = reducedMultiple(ideal_, R0_(j, c), u);
      dom.write(img, imageMat, k);
    }
    std::vector<std::size_t> keep = complementColumns(imageMat, kernel);
    ScalarMatrix chosen(kernel.rows(), keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c)
      for (std::size_t r = 0; r < kernel.rows(); ++r) chosen(r, c) = kernel(r, keep[c]);
    kernel = std::move(chosen);
  }
  (void)m;
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < kernel.cols(); ++c) cols.push_back(dom.vectorFrom(kernel, c));
  TangentBasis out{PolyMatrix::fromColumns(ring, l, cols),
                   std::vector<Degree>(cols.size(), d), TangentMode::GradedPiece, d};
  std::vector<Degree> rowDeg;
  for (const auto& g : R0_.colDegrees()) rowDeg.push_back(-g);
  out.columns.setDegrees(rowDeg, out.columnDegrees);
  return out;
}

TangentBasis CotangentComplex::normalMatrix(const Degree& d) const { return normalPiece(d, false); }

int CotangentComplex::socleDegreeOfJacobianQuotient() const {
  if (socle_) return *socle_;
  const RingPtr& ring = F0_.ring();
  std::size_t n = ring->numX();
  std::size_t dim = krullDimension(ideal_);
  std::size_t codim = n - dim;
  std::vector<Polynomial> gens = ideal_.polynomials();
  if (codim > 0) {
    PolyMatrix J = jacobianMatrix(F0_);
    if (binomial(J.rows(), codim) * binomial(n, codim) > 20000)
      throw PreconditionError("local mode: too many Jacobian minors; pass a degree instead");
    combinations(J.rows(), codim, [&](const std::vector<std::size_t>& rows) {
      combinations(n, codim, [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<Polynomial>> sub;
        for (auto r : rows) {
          std::vector<Polynomial> row;
          for (auto c : cols) row.push_back(J(r, c));
          sub.push_back(std::move(row));
        }
        Polynomial det = determinant(sub);
        if (!det.isZero()) gens.push_back(std::move(det));
      });
    });
  }
  GroebnerBasis jac = GroebnerBasis::ofIdeal(gens);
  if (!finiteColength(jac))
    throw PreconditionError(
        "local mode: the singular locus is not isolated, so T1/T2 are not finite dimensional");
  // Bound the top degree by the pure powers among the leading terms.
  std::vector<int> pure(n, 0);
  bool unit = false;
  for (const auto& [mono, pos] : jac.leadingTerms()) {
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (mono[v]) {
        ++support;
        var = v;
      }
    if (support == 0) unit = true;
    if (support == 1 && (pure[var] == 0 || mono[var] < pure[var])) pure[var] = mono[var];
  }
  int top = -1;
  if (!unit) {
    int bound = 0;
    for (std::size_t v = 0; v < n; ++v) bound += (pure[v] - 1) * ring->varDegree(v)[0];
    for (int e = 0; e <= bound; ++e)
      if (hilbertFunction(jac, Degree{e}) > 0) top = e;
  }
  socle_ = top;
  return top;
}

std::pair<int, int> CotangentComplex::localDegreeRange(int which) const {
  requireGraded();
  if (F0_.ring()->gradingRank() != 1)
    throw PreconditionError("local mode requires a Z-grading; pass a degree for multigradings");
  int lo = 0;
  const auto& degs = which == 1 ? genDegrees_ : R0_.colDegrees();
  for (const auto& g : degs) lo = std::min(lo, -g[0]);
  int hi = socleDegreeOfJacobianQuotient();
  return {lo, std::max(lo, hi)};
}

namespace {

TangentBasis sweep(const CotangentComplex& cx, int which,
                   const std::function<TangentBasis(const Degree&)>& piece, std::size_t rows) {
  auto [lo, hi] = cx.localDegreeRange(which);
  std::vector<Vector> cols;
  std::vector<Degree> degs;
  RingPtr ring = cx.generators().ring();
  std::vector<Degree> rowDeg;
  for (int d = lo;; ++d) {
    TangentBasis b = piece(Degree{d});
    rowDeg = b.columns.rowDegrees();
    for (std::size_t c = 0; c < b.dimension(); ++c) {
      cols.push_back(b.columns.column(c));
      degs.push_back(Degree{d});
    }
    if (d >= hi && b.dimension() == 0) break;
    if (d > hi + 64) throw PreconditionError("local mode: degree sweep did not terminate");
  }
  TangentBasis out{PolyMatrix::fromColumns(ring, rows, cols), degs, TangentMode::LocalTotal,
                   std::nullopt};
  if (rowDeg.size() == rows) out.columns.setDegrees(rowDeg, degs);
  return out;
}

}  // namespace

TangentBasis CotangentComplex::cotangent1(const std::optional<Degree>& d) const {
  if (d) return normalPiece(*d, true);
  return sweep(*this, 1, [this](const Degree& e) { return normalPiece(e, true); }, F0_.cols());
}

TangentBasis CotangentComplex::cotangent2(const std::optional<Degree>& d) const {
  if (d) return obstructionPiece(*d);
  if (R0_.cols() == 0) return obstructionPiece(F0_.ring()->zeroDegree());
  return sweep(*this, 2, [this](const Degree& e) { return obstructionPiece(e); }, R0_.cols());
}

TangentBasis normalMatrix(const Degree& d, const PolyMatrix& F0) {
  return CotangentComplex(F0).normalMatrix(d);
}

TangentBasis cotangent1(const PolyMatrix& F0, const std::optional<Degree>& d) {
  return CotangentComplex(F0).cotangent1(d);
}

TangentBasis cotangent2(const PolyMatrix& F0, const std::optional<Degree>& d) {
  return CotangentComplex(F0).cotangent2(d);
}

}  // namespace versal
