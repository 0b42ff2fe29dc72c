#include "versal/deformation.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "versal/errors.hpp"

namespace versal {

TOrderSeries::TOrderSeries(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), zero_(ring, rows, cols) {}

const PolyMatrix& TOrderSeries::piece(std::size_t k) const {
  return k < pieces_.size() ? pieces_[k] : zero_;
}

PolyMatrix& TOrderSeries::at(std::size_t k) {
  while (pieces_.size() <= k) pieces_.push_back(zero_);
  return pieces_[k];
}

PolyMatrix TOrderSeries::sum() const {
  PolyMatrix s = zero_;
  for (const auto& p : pieces_) s += p;
  return s;
}

void TOrderSeries::truncate(std::size_t k) {
  if (pieces_.size() > k + 1) pieces_.erase(pieces_.begin() + static_cast<std::ptrdiff_t>(k + 1), pieces_.end());
}

int TOrderSeries::maxOrder() const {
  for (std::size_t k = pieces_.size(); k-- > 0;)
    if (!pieces_[k].isZero()) return static_cast<int>(k);
  return -1;
}

bool TOrderSeries::orderHomogeneous() const {
  for (std::size_t k = 0; k < pieces_.size(); ++k)
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        for (const auto& t : pieces_[k](r, c).terms())
          if (t.mono.tDegree() != static_cast<int>(k)) return false;
  return true;
}

const char* toString(DeformationStatus s) {
  switch (s) {
    case DeformationStatus::InProgress: return "in-progress";
    case DeformationStatus::Polynomial: return "polynomial";
    case DeformationStatus::Truncated: return "truncated";
  }
  return "unknown";
}

namespace {

// Free-module coordinate (position, x-monomial) of an element of S^l.
struct Coord {
  std::size_t pos;
  Monomial mono;
};

struct CoordLess {
  bool operator()(const Coord& a, const Coord& b) const {
    if (a.pos != b.pos) return a.pos < b.pos;
    return compareMonomials(a.mono, b.mono) > 0;
  }
};

struct MonomialDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compareMonomials(a, b) > 0;
  }
};

std::vector<std::string> parameterNames(const Ring& S, std::size_t n) {
  for (const char* prefix : {"t", "u", "s", "w"}) {
    std::vector<std::string> names;
    bool clash = false;
    for (std::size_t i = 1; i <= n; ++i) {
      names.push_back(std::string(prefix) + "_" + std::to_string(i));
      if (S.indexOf(names.back())) clash = true;
    }
    if (!clash) return names;
  }
  throw PreconditionError("no free names for the deformation parameters");
}

}  // namespace

struct LiftingEngine::Impl {
  RingPtr S, ST, P;
  std::size_t m = 0, l = 0, n = 0, d = 0;
  PolyMatrix F0, R0, phi, V;
  std::vector<Polynomial> idealGens;
  std::unique_ptr<ModuleLifter> f0Lifter;
  std::unique_ptr<ModuleLifter> relationLifter;
  // Normal forms of the obstruction representatives modulo im R0^T + I.
  std::vector<std::map<Coord, Scalar, CoordLess>> nfV;

  Impl(const CotangentComplex& cx, const TangentBasis& T1, const TangentBasis& T2)
      : S(cx.generators().ring()),
        F0(cx.generators()),
        R0(cx.relations()),
        phi(T1.columns),
        V(T2.columns) {
    m = F0.cols();
    l = R0.cols();
    n = phi.cols();
    d = V.cols();
    if (phi.rows() != m && n > 0)
      throw DimensionError("tangent basis must have one row per generator");
    if (V.rows() != l && d > 0)
      throw DimensionError("obstruction basis must have one row per relation");
    if (d == 0) V = PolyMatrix(S, l, 0);

    std::vector<Degree> tDegrees;
    bool graded = cx.homogeneous() && T1.columnDegrees.size() == n;
    for (std::size_t i = 0; i < n; ++i)
      tDegrees.push_back(graded ? -T1.columnDegrees[i] : S->zeroDegree());
    ST = S->withParameters(parameterNames(*S, n), tDegrees);
    P = ST->parameterRing();

    idealGens = cx.idealBasis().polynomials();
    f0Lifter = std::make_unique<ModuleLifter>(F0);
    if (l > 0) {
      relationLifter = std::make_unique<ModuleLifter>(R0.transpose(), idealGens);
      for (std::size_t j = 0; j < d; ++j) {
        auto red = relationLifter->reduce(V.column(j));
        std::map<Coord, Scalar, CoordLess> coords;
        for (std::size_t c = 0; c < l; ++c)
          for (const auto& t : red.remainder[c].terms()) coords[{c, t.mono}] = t.coef;
        nfV.push_back(std::move(coords));
      }
    }
  }

  Monomial toParam(const Monomial& st) const {
    std::vector<std::uint16_t> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = st[S->numX() + i];
    return Monomial(std::move(e), n);
  }

  Monomial fromParam(const Monomial& p) const {
    std::vector<std::uint16_t> e(S->numX() + n, 0);
    for (std::size_t i = 0; i < n; ++i) e[S->numX() + i] = p[i];
    return Monomial(std::move(e), S->numX());
  }

  Polynomial toParam(const Polynomial& st) const {
    std::vector<Term> terms;
    for (const auto& t : st.terms()) terms.push_back({toParam(t.mono), t.coef});
    return Polynomial(P, std::move(terms));
  }

  Polynomial fromParam(const Polynomial& p) const {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) terms.push_back({fromParam(t.mono), t.coef});
    return Polynomial(ST, std::move(terms));
  }

  // Splits an l x 1 matrix over S[t] by t-monomial into vectors over S.
  std::vector<std::pair<Monomial, Vector>> split(const PolyMatrix& col) const {
    std::map<Monomial, Vector, MonomialDescending> parts;
    for (std::size_t c = 0; c < col.rows(); ++c)
      for (auto& [mu, xs] : col(c, 0).splitByT()) {
        auto it = parts.find(mu);
        if (it == parts.end()) it = parts.emplace(mu, zeroVector(S, col.rows())).first;
        it->second[c] = xs.embed(S);
      }
    return {parts.begin(), parts.end()};
  }

  Polynomial times(const Monomial& mu, const Polynomial& x) const {
    return x.embed(ST).mulTerm(mu, 1);
  }

  DeformationState firstOrder() const {
    DeformationState s{ST,
                       TOrderSeries(ST, 1, m),
                       TOrderSeries(ST, m, l),
                       TOrderSeries(ST, d, 1),
                       TOrderSeries(ST, l, d),
                       V.embed(ST)};
    s.F.at(0) = F0.embed(ST);
    s.R.at(0) = R0.embed(ST);
    s.C.at(0) = s.V;
    s.order = 1;
    if (n == 0) {
      s.status = DeformationStatus::Polynomial;
      return s;
    }
    PolyMatrix& F1 = s.F.at(1);
    PolyMatrix& R1 = s.R.at(1);
    for (std::size_t i = 0; i < n; ++i) {
      Monomial ti = ST->one();
      ti.setExponent(S->numX() + i, 1);
      for (std::size_t j = 0; j < m; ++j) F1(0, j) += times(ti, phi(j, i));
      for (std::size_t c = 0; c < l; ++c) {
        Polynomial q(S);
        for (std::size_t j = 0; j < m; ++j)
          if (!phi(j, i).isZero() && !R0(j, c).isZero()) q += phi(j, i) * R0(j, c);
        if (q.isZero()) continue;
        auto x = f0Lifter->lift({q});
        if (!x) throw LiftError("tangent vector " + std::to_string(i + 1) + " is not a cocycle");
        for (std::size_t p = 0; p < m; ++p) R1(p, c) -= times(ti, (*x)[p]);
      }
    }
    return s;
  }

  void liftStep(DeformationState& s) const {
    if (s.status != DeformationStatus::InProgress) return;
    const std::size_t N = static_cast<std::size_t>(s.order) + 1;

    // Order-N part of transpose(F R) + C G from the pieces known so far.
    PolyMatrix res(ST, l, 1);
    for (std::size_t a = 1; a < N; ++a) {
      const PolyMatrix& Fa = s.F.piece(a);
      const PolyMatrix& Rb = s.R.piece(N - a);
      if (Fa.isZero() || Rb.isZero()) continue;
      res += (Fa * Rb).transpose();
    }
    for (std::size_t a = 1; a + 2 <= N; ++a) {
      const PolyMatrix& Ca = s.C.piece(a);
      const PolyMatrix& Gb = s.G.piece(N - a);
      if (Ca.isZero() || Gb.isZero()) continue;
      res += Ca * Gb;
    }

    // Rows of G that already carry an equation, with their initial forms.
    std::vector<std::size_t> active, initialOrder;
    std::vector<Polynomial> initialForms;
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t b = 2; b < N; ++b)
        if (!s.G.piece(b)(k, 0).isZero()) {
          active.push_back(k);
          initialOrder.push_back(b);
          initialForms.push_back(toParam(s.G.piece(b)(k, 0)));
          break;
        }
    std::unique_ptr<ModuleLifter> jLifter;
    if (!active.empty()) jLifter = std::make_unique<ModuleLifter>(PolyMatrix::row(P, initialForms));
    auto reduceJ = [&](const Polynomial& p) {
      return jLifter ? jLifter->reduce({p}).remainder[0] : p;
    };

    // Coordinates of the residual in S^l / (im R0^T + I), as polynomials in t.
    std::map<Coord, Polynomial, CoordLess> coords;
    if (l > 0)
      for (auto& [mu, r] : split(res)) {
        auto red = relationLifter->reduce(r);
        Monomial pm = toParam(mu);
        for (std::size_t c = 0; c < l; ++c)
          for (const auto& t : red.remainder[c].terms()) {
            auto it = coords.try_emplace({c, t.mono}, P).first;
            it->second += Polynomial::monomial(P, pm, t.coef);
          }
      }
    for (const auto& nv : nfV)
      for (const auto& [coord, coef] : nv) coords.try_emplace(coord, P);

    // Solve for the new obstruction terms: sum_j nfV_j g_j = -NF_J(coords).
    std::map<Monomial, std::size_t, MonomialDescending> rhsIndex;
    std::vector<std::pair<Coord, Polynomial>> reduced;
    for (const auto& [coord, p] : coords) {
      Polynomial r = reduceJ(p);
      for (const auto& t : r.terms()) rhsIndex.emplace(t.mono, 0);
      reduced.emplace_back(coord, std::move(r));
    }
    std::vector<Monomial> rhsMonomials;
    for (auto& [mono, idx] : rhsIndex) {
      idx = rhsMonomials.size();
      rhsMonomials.push_back(mono);
    }
    std::vector<Polynomial> gNew(d, Polynomial(P));
    if (!rhsMonomials.empty()) {
      ScalarMatrix aug(reduced.size(), d + rhsMonomials.size());
      for (std::size_t row = 0; row < reduced.size(); ++row) {
        const auto& [coord, r] = reduced[row];
        for (std::size_t j = 0; j < d; ++j) {
          auto it = nfV[j].find(coord);
          if (it != nfV[j].end()) aug(row, j) = it->second;
        }
        for (const auto& t : r.terms()) aug(row, d + rhsIndex.at(t.mono)) = -t.coef;
      }
      RowEchelon e = rref(aug);
      for (std::size_t r = 0; r < e.pivotColumns.size(); ++r) {
        std::size_t j = e.pivotColumns[r];
        if (j >= d)
          throw LiftError("obstruction at order " + std::to_string(N) +
                          " is not in the span of the T2 representatives");
        std::vector<Term> terms;
        for (std::size_t q = 0; q < rhsMonomials.size(); ++q)
          if (sgn(e.reduced(r, d + q)) != 0) terms.push_back({rhsMonomials[q], e.reduced(r, d + q)});
        gNew[j] = Polynomial(P, std::move(terms));
      }
    }

    // What remains lies in J coordinatewise; absorb it into C.
    PolyMatrix cNew(ST, l, d);
    for (const auto& [coord, p] : coords) {
      Polynomial rest = p;
      for (std::size_t j = 0; j < d; ++j) {
        auto it = nfV[j].find(coord);
        if (it != nfV[j].end() && !gNew[j].isZero()) rest += gNew[j] * it->second;
      }
      if (rest.isZero()) continue;
      if (!jLifter) throw Error("internal: residual coordinate outside the obstruction span");
      auto red = jLifter->reduce({rest});
      if (!red.remainder[0].isZero())
        throw Error("internal: residual coordinate outside the obstruction span");
      for (std::size_t a = 0; a < active.size(); ++a) {
        if (red.coefficients[a].isZero()) continue;
        Polynomial h = fromParam(red.coefficients[a]);
        cNew(coord.pos, active[a]) -= h.mulTerm(fromX(coord.mono), 1);
      }
    }

    PolyMatrix gCol(ST, d, 1), inCol(ST, d, 1);
    for (std::size_t j = 0; j < d; ++j) gCol(j, 0) = fromParam(gNew[j]);
    for (std::size_t a = 0; a < active.size(); ++a)
      inCol(active[a], 0) = fromParam(initialForms[a]);
    PolyMatrix total = res;
    if (d > 0) {
      total += s.V * gCol;
      total += cNew * inCol;
    }

    // The corrected residual lies in im R0^T + I^l; lift it to F and R.
    PolyMatrix fNew(ST, 1, m), rNew(ST, m, l);
    if (l > 0) {
      PolyMatrix R0T = R0.transpose();
      for (auto& [mu, r] : split(total)) {
        auto red = relationLifter->reduce(r);
        if (!isZero(red.remainder))
          throw Error("internal: corrected residual is not in the relation module");
        const Vector& a = red.coefficients;
        for (std::size_t p = 0; p < m; ++p)
          if (!a[p].isZero()) fNew(0, p) -= times(mu, a[p]);
        for (std::size_t c = 0; c < l; ++c) {
          Polynomial j = r[c];
          for (std::size_t p = 0; p < m; ++p)
            if (!a[p].isZero() && !R0T(c, p).isZero()) j -= R0T(c, p) * a[p];
          if (j.isZero()) continue;
          auto b = f0Lifter->lift({j});
          if (!b) throw Error("internal: relation correction is not in the ideal");
          for (std::size_t p = 0; p < m; ++p)
            if (!(*b)[p].isZero()) rNew(p, c) -= times(mu, (*b)[p]);
        }
      }
    }

    if (!fNew.isZero()) s.F.at(N) = fNew;
    if (!rNew.isZero()) s.R.at(N) = rNew;
    if (!gCol.isZero()) s.G.at(N) = gCol;
    for (std::size_t a = 0; a < active.size(); ++a) {
      std::size_t k = active[a];
      bool any = false;
      for (std::size_t c = 0; c < l; ++c) any = any || !cNew(c, k).isZero();
      if (!any) continue;
      PolyMatrix& piece = s.C.at(N - initialOrder[a]);
      for (std::size_t c = 0; c < l; ++c) piece(c, k) += cNew(c, k);
    }
    s.order = static_cast<int>(N);

    // The truncated series is a solution once the identity holds without
    // truncation; every later correction would then vanish.
    PolyMatrix exact = (s.F.sum() * s.R.sum()).transpose();
    if (d > 0) exact += s.C.sum() * s.G.sum();
    if (exact.isZero()) s.status = DeformationStatus::Polynomial;
  }

  Monomial fromX(const Monomial& x) const {
    std::vector<std::uint16_t> e(ST->numVars(), 0);
    for (std::size_t v = 0; v < S->numX(); ++v) e[v] = x[v];
    return Monomial(std::move(e), S->numX());
  }
};

LiftingEngine::LiftingEngine(const CotangentComplex& complex, const TangentBasis& T1,
                             const TangentBasis& T2)
    : impl_(std::make_unique<Impl>(complex, T1, T2)) {}

LiftingEngine::~LiftingEngine() = default;

const RingPtr& LiftingEngine::ring() const { return impl_->ST; }

DeformationState LiftingEngine::firstOrder() const { return impl_->firstOrder(); }

void LiftingEngine::liftStep(DeformationState& state) const { impl_->liftStep(state); }

DeformationState firstOrder(const CotangentComplex& complex, const TangentBasis& T1,
                            const TangentBasis& T2) {
  return LiftingEngine(complex, T1, T2).firstOrder();
}

DeformationState versalDeformation(const CotangentComplex& complex,
                                   const std::optional<TangentBasis>& T1,
                                   const std::optional<TangentBasis>& T2,
                                   const DeformationOptions& options) {
  if (options.maxOrder < 1) throw PreconditionError("maximal order must be at least 1");
  auto say = [&](int level, const std::string& line) {
    if (options.verbosity >= level && options.log) options.log(line);
  };
  if (!T1 || !T2) say(2, "Calculating first order deformations and obstruction space");
  TangentBasis t1 = T1 ? *T1 : complex.cotangent1();
  TangentBasis t2 = T2 ? *T2 : complex.cotangent2();
  LiftingEngine engine(complex, t1, t2);
  say(2, "Calculating first order relations");
  DeformationState state = engine.firstOrder();
  if (state.status != DeformationStatus::Polynomial) {
    say(2, "Starting lifting");
    while (state.order < options.maxOrder) {
      say(2, "Order " + std::to_string(state.order + 1));
      engine.liftStep(state);
      if (state.status == DeformationStatus::Polynomial) break;
    }
  }
  if (state.status == DeformationStatus::Polynomial) {
    say(1, "Solution is polynomial");
  } else {
    state.status = DeformationStatus::Truncated;
    say(1, "Stopped at order " + std::to_string(state.order) + " without a polynomial solution");
  }
  return state;
}

VerificationReport verifyState(const DeformationState& state) {
  VerificationReport rep{true, state.status == DeformationStatus::Polynomial,
                         PolyMatrix(state.ring, state.R.cols(), 1), {}};
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.failures.push_back(std::move(msg));
  };
  PolyMatrix residual = (state.F.sum() * state.R.sum()).transpose();
  if (state.G.rows() > 0) residual += state.C.sum() * state.G.sum();
  rep.residual = rep.exact ? residual : residual.tTruncate(state.order);
  for (std::size_t c = 0; c < rep.residual.rows(); ++c)
    if (!rep.residual(c, 0).isZero())
      fail("residual entry " + std::to_string(c + 1) + " is " + printExpr(rep.residual(c, 0)));

  const std::pair<const char*, const TOrderSeries*> series[] = {
      {"F", &state.F}, {"R", &state.R}, {"G", &state.G}, {"C", &state.C}};
  for (const auto& [name, s] : series)
    if (!s->orderHomogeneous()) fail(std::string(name) + " has a piece with mixed t-order");
  if (!state.G.piece(0).isZero() || !state.G.piece(1).isZero())
    fail("G has terms of order below 2");

  const PolyMatrix& C0 = state.C.piece(0);
  if (C0.rows() != state.V.rows() || C0.cols() != state.V.cols()) {
    fail("C piece 0 does not match the obstruction basis shape");
  } else {
    for (std::size_t k = 0; k < C0.cols(); ++k) {
      // C0 column k must be a scalar multiple of V column k.
      std::optional<Scalar> ratio;
      bool ok = true;
      for (std::size_t c = 0; c < C0.rows() && ok; ++c) {
        const Polynomial& v = state.V(c, k);
        const Polynomial& x = C0(c, k);
        if (v.isZero()) {
          ok = x.isZero();
          continue;
        }
        Scalar q = x.isZero() ? Scalar(0) : Scalar(x.leadTerm().coef / v.leadTerm().coef);
        if (ratio && *ratio != q) ok = false;
        ratio = q;
        if (!(x == v * q)) ok = false;
      }
      if (!ok) fail("C piece 0 column " + std::to_string(k + 1) + " is not a multiple of V");
    }
  }
  return rep;
}

}  // namespace versal
