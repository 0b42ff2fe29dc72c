#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "versal/cotangent.hpp"
#include "versal/errors.hpp"
#include "versal/input.hpp"

using namespace versal;

namespace {

InputSystem example1() { return loadInput(VERSAL_DATA_DIR "/example1.vdef"); }
InputSystem example2() { return loadInput(VERSAL_DATA_DIR "/example2.vdef"); }

std::vector<std::vector<Polynomial>> relationColumns(const PolyMatrix& R) {
  std::vector<std::vector<Polynomial>> out;
  for (std::size_t c = 0; c < R.cols(); ++c) out.push_back(R.column(c));
  return out;
}

std::vector<Polynomial> rowEntries(const PolyMatrix& F) {
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < F.cols(); ++j) out.push_back(F(0, j));
  return out;
}

PolyMatrix hypersurface(const RingPtr& r, const std::string& f) {
  return PolyMatrix::row(r, {parseExpr(f, r)});
}

}  // namespace

TEST_CASE("example 1: tangent and obstruction spaces") {
  auto sys = example1();
  CotangentComplex cx(sys.generatorRow());
  CHECK(cx.relations().cols() == 8);
  TangentBasis t1 = cx.cotangent1();
  TangentBasis t2 = cx.cotangent2();
  CHECK(t1.dimension() == 4);
  CHECK(t2.dimension() == 3);
  CHECK(t1.mode == TangentMode::LocalTotal);
  CHECK(t1.columns.rows() == 6);
  CHECK(t2.columns.rows() == 8);
  CHECK(t1.columnDegrees.size() == 4);

  // each class phi is a homomorphism I -> S/I: phi * R0 lies in I
  PolyMatrix images = t1.columns.transpose() * cx.relations();
  for (std::size_t i = 0; i < images.rows(); ++i)
    for (std::size_t k = 0; k < images.cols(); ++k)
      CHECK(oracle::inHomogeneousIdeal(images(i, k), sys.generators));
}

TEST_CASE("example 1: T1 classes are independent modulo trivial deformations") {
  auto sys = example1();
  CotangentComplex cx(sys.generatorRow());
  TangentBasis t1 = cx.cotangent1();
  const auto& r = sys.ring;
  const std::size_t m = sys.generators.size();
  PolyMatrix jac = jacobianMatrix(sys.generatorRow());
  std::map<Degree, std::vector<std::size_t>> byDegree;
  for (std::size_t c = 0; c < t1.dimension(); ++c) byDegree[t1.columnDegrees[c]].push_back(c);
  for (const auto& [deg, cols] : byDegree) {
    int d = deg[0];
    auto basis = oracle::monomialsOfTotalDegree(*r, 2 + d);
    // vectors in S_{2+d}^m, flattened generator by generator
    std::vector<std::vector<Polynomial>> vecs;
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& p : oracle::idealPieceSpan(sys.generators, 2 + d)) {
        std::vector<Polynomial> v(m, Polynomial(r));
        v[j] = p;
        vecs.push_back(v);
      }
    for (std::size_t v = 0; v < r->numX(); ++v)
      for (const auto& mono : oracle::monomialsOfTotalDegree(*r, d + 1)) {
        std::vector<Polynomial> vec;
        for (std::size_t j = 0; j < m; ++j) vec.push_back(jac(j, v).mulTerm(mono, 1));
        vecs.push_back(vec);
      }
    auto rankOf = [&](const std::vector<std::vector<Polynomial>>& vs) {
      ScalarMatrix M(m * basis.size(), vs.size());
      for (std::size_t c = 0; c < vs.size(); ++c)
        for (std::size_t j = 0; j < m; ++j) {
          ScalarMatrix part = oracle::coordinateMatrix({vs[c][j]}, basis);
          for (std::size_t i = 0; i < basis.size(); ++i) M(j * basis.size() + i, c) = part(i, 0);
        }
      return oracle::naiveRank(M);
    };
    std::size_t base = rankOf(vecs);
    for (std::size_t c : cols) vecs.push_back(t1.columns.column(c));
    CHECK(rankOf(vecs) == base + cols.size());
  }
}

TEST_CASE("example 1: graded pieces add up to the local spaces") {
  auto sys = example1();
  CotangentComplex cx(sys.generatorRow());
  for (int which : {1, 2}) {
    auto [lo, hi] = cx.localDegreeRange(which);
    CHECK(lo <= hi);
    std::size_t total = 0;
    for (int d = lo; d <= hi; ++d)
      total += which == 1 ? cx.cotangent1(Degree{d}).dimension()
                          : cx.cotangent2(Degree{d}).dimension();
    CHECK(total == (which == 1 ? 4u : 3u));
  }
  // the normal module agrees with the oracle in several degrees
  auto rels = relationColumns(cx.relations());
  for (int d = -2; d <= 1; ++d)
    CHECK(cx.normalMatrix(Degree{d}).dimension() ==
          oracle::normalDimension(sys.generators, rels, Degree{d}));
}

TEST_CASE("example 2: degree zero normal module and obstruction space") {
  auto sys = example2();
  CotangentComplex cx(sys.generatorRow());
  Degree zero{0, 0, 0};
  TangentBasis normal = cx.normalMatrix(zero);
  CHECK(normal.dimension() == 18);
  CHECK(normal.degree == zero);

  // oracle for a monomial ideal: the relations are generated by the
  // pairwise lcm relations
  const auto& r = sys.ring;
  std::vector<std::vector<Polynomial>> pairwise;
  const auto& g = sys.generators;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Monomial a = g[i].leadTerm().mono, b = g[j].leadTerm().mono, l = a.lcm(b);
      std::vector<Polynomial> rel(g.size(), Polynomial(r));
      rel[i] = Polynomial(r, {Term{l / a, Scalar(1)}});
      rel[j] = Polynomial(r, {Term{l / b, Scalar(-1)}});
      pairwise.push_back(rel);
    }
  CHECK(oracle::normalDimension(g, pairwise, zero) == 18);
  CHECK(oracle::normalDimension(g, relationColumns(cx.relations()), zero) == 18);
  CHECK(oracle::normalDimension(g, pairwise, {1, 0, 0}) ==
        cx.normalMatrix({1, 0, 0}).dimension());

  TangentBasis t2 = cx.cotangent2(zero);
  CHECK(t2.dimension() == 8);
  CHECK(t2.columns.rows() == cx.relations().cols());
  CHECK_THROWS_AS(cx.cotangent1(), PreconditionError);
}

TEST_CASE("hypersurfaces are unobstructed") {
  SUBCASE("cone over a plane cubic") {
    auto r = Ring::standard({"x", "y", "z"});
    CotangentComplex cx(hypersurface(r, "x^3 + y^3 + z^3"));
    CHECK(cx.relations().cols() == 0);
    // T1 = S/(x^2, y^2, z^2): squarefree monomials
    CHECK(cx.cotangent1().dimension() == 8);
    CHECK(cx.cotangent2().dimension() == 0);
  }
  SUBCASE("A_k singularities with weights") {
    for (int k = 1; k <= 6; ++k) {
      auto r = Ring::create({"x", "y"}, {{k + 1}, {2}});
      CotangentComplex cx(hypersurface(r, "x^2 + y^" + std::to_string(k + 1)));
      // T1 = QQ[y]/(y^k)
      CHECK(cx.cotangent1().dimension() == static_cast<std::size_t>(k));
      CHECK(cx.cotangent2().dimension() == 0);
    }
  }
}

TEST_CASE("smooth inputs have no tangent space") {
  auto r = Ring::standard({"x", "y", "z"});
  CotangentComplex linear(PolyMatrix::row(r, {parseExpr("x", r), parseExpr("y - z", r)}));
  CHECK(linear.cotangent1().dimension() == 0);
  CHECK(linear.cotangent2().dimension() == 0);
  auto w = Ring::create({"x", "y"}, {{2}, {1}});
  CotangentComplex parabola(hypersurface(w, "x - y^2"));
  CHECK(parabola.cotangent1().dimension() == 0);
}

TEST_CASE("complete intersections have no obstructions") {
  auto r = Ring::standard({"x", "y", "z"});
  CotangentComplex cx(PolyMatrix::row(r, {parseExpr("x*y", r), parseExpr("x^2 + y^2 - z^2", r)}));
  CHECK(cx.relations().cols() == 1);
  CHECK(cx.cotangent2().dimension() == 0);
  CHECK(cx.cotangent1().dimension() > 0);
}

TEST_CASE("preconditions") {
  auto r = Ring::standard({"x", "y"});
  // non-isolated singularity: T1 is infinite dimensional
  CotangentComplex line(hypersurface(r, "x^2"));
  CHECK_THROWS_AS(line.cotangent1(), PreconditionError);
  CHECK_THROWS_AS(line.normalMatrix({0, 0}), DimensionError);
  // graded pieces need a homogeneous ideal
  CotangentComplex inhom(hypersurface(r, "x^2 + y"));
  CHECK_THROWS_AS(inhom.normalMatrix({0}), PreconditionError);
}

TEST_CASE("krull dimension") {
  auto sys = example1();
  CHECK(krullDimension(GroebnerBasis::ofIdeal(sys.generators)) == 2);
  auto sys2 = example2();
  CHECK(krullDimension(GroebnerBasis::ofIdeal(sys2.generators)) == 5);
  auto r = Ring::standard({"x", "y"});
  CHECK(krullDimension(GroebnerBasis::ofIdeal({parseExpr("x^2", r), parseExpr("y^3", r)})) == 0);
}

TEST_CASE("property: normal module pieces match the oracle on random ideals") {
  std::mt19937 rng(2718);
  auto r = Ring::standard({"x", "y", "z"});
  std::uniform_int_distribution<int> deg(1, 2), dd(-1, 1);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) {
      Polynomial p = oracle::randomHomogeneous(r, deg(rng), rng, 3, 3);
      if (!p.isZero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    PolyMatrix F = PolyMatrix::row(r, gens);
    CotangentComplex cx(F);
    Degree d{dd(rng)};
    CHECK(cx.normalMatrix(d).dimension() ==
          oracle::normalDimension(gens, relationColumns(cx.relations()), d));
  }
}
