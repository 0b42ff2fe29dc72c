#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "versal/errors.hpp"
#include "versal/input.hpp"

using namespace versal;

namespace {

RingPtr xyz() { return Ring::standard({"x", "y", "z"}); }

Polynomial P(const std::string& s, const RingPtr& r) { return parseExpr(s, r); }

Monomial mono(const RingPtr& r, std::vector<std::uint16_t> e) {
  e.resize(r->numVars(), 0);
  return Monomial(std::move(e), r->numX());
}

}  // namespace

TEST_CASE("ring construction validates names and degrees") {
  CHECK_THROWS_AS(Ring::create({"x", "x"}, {{1}, {1}}), PreconditionError);
  CHECK_THROWS_AS(Ring::create({"x", "y"}, {{1}}), DimensionError);
  CHECK_THROWS_AS(Ring::create({"x", "y"}, {{1, 0}, {1}}), DimensionError);
  CHECK_THROWS_AS(Ring::create({"x"}, {{1}}, {"x"}), PreconditionError);

  auto r = Ring::create({"a", "b"}, {{1, 0}, {0, 1}}, {"t_1"}, {{-1, 0}});
  CHECK(r->numX() == 2);
  CHECK(r->numT() == 1);
  CHECK(r->gradingRank() == 2);
  CHECK(r->positivelyGraded());
  CHECK(r->indexOf("t_1") == 2u);
  CHECK_FALSE(r->indexOf("c").has_value());
  CHECK_FALSE(Ring::create({"a"}, {{0}})->positivelyGraded());
  CHECK_FALSE(Ring::create({"a"}, {{-1}})->positivelyGraded());
}

TEST_CASE("block order compares x first, then t, each by grevlex") {
  auto r = Ring::standard({"x", "y", "z"})->withParameters({"s", "t"}, {});
  // grevlex: x*z < y^2 since z appears in the smaller one
  CHECK(compareMonomials(mono(r, {0, 2, 0}), mono(r, {1, 0, 1})) > 0);
  CHECK(compareMonomials(mono(r, {2, 0, 0}), mono(r, {0, 2, 0})) > 0);
  CHECK(compareMonomials(mono(r, {0, 0, 2}), mono(r, {1, 0, 0})) > 0);
  // any x-degree difference beats t
  CHECK(compareMonomials(mono(r, {1, 0, 0, 0, 0}), mono(r, {0, 0, 0, 5, 5})) > 0);
  // equal x-part: t-block decides
  CHECK(compareMonomials(mono(r, {1, 0, 0, 1, 0}), mono(r, {1, 0, 0, 0, 1})) > 0);
  CHECK(compareMonomials(mono(r, {1, 0, 0, 1, 0}), mono(r, {1, 0, 0, 1, 0})) == 0);
}

TEST_CASE("monomial arithmetic") {
  auto r = xyz();
  Monomial a = mono(r, {2, 1, 0}), b = mono(r, {1, 3, 1});
  CHECK(a.lcm(b) == mono(r, {2, 3, 1}));
  CHECK((a * b) == mono(r, {3, 4, 1}));
  CHECK(mono(r, {1, 0, 0}).divides(a));
  CHECK_FALSE(b.divides(a));
  CHECK((a / mono(r, {1, 1, 0})) == mono(r, {1, 0, 0}));
  CHECK(mono(r, {1, 0, 0}).coprime(mono(r, {0, 2, 1})));
  CHECK(a.xDegree() == 3);
}

TEST_CASE("polynomial arithmetic and canonical form") {
  auto r = xyz();
  Polynomial p = P("x + y", r), q = P("x - y", r);
  CHECK(p * q == P("x^2 - y^2", r));
  CHECK((p + q) == P("2*x", r));
  CHECK((p - p).isZero());
  CHECK(P("3*x*y - 2*x*y - x*y", r).isZero());
  CHECK(P("(x+y)^3", r).numTerms() == 4);
  CHECK(printExpr(P("y^2 + x*z", r)) == "y^2 + x*z");
  CHECK(printExpr(P("-x + 1/2", r)) == "-x + 1/2");
  CHECK(printExpr(P("0", r)) == "0");
  CHECK(printExpr(P("2*x^2*y - 3/4*z^3 + 1", r)) == "2*x^2*y - 3/4*z^3 + 1");
}

TEST_CASE("derivatives, degrees and homogeneity") {
  auto r = xyz();
  CHECK(P("x^3*y + y*z", r).partialDerivative(0) == P("3*x^2*y", r));
  CHECK(P("x^3*y + y*z", r).partialDerivative(2) == P("y", r));
  CHECK(P("x*y + z^2", r).multiDegree() == Degree{2});
  CHECK_FALSE(P("x*y + z", r).multiDegree().has_value());
  CHECK_FALSE(Polynomial(r).multiDegree().has_value());
  auto m = Ring::create({"a", "b"}, {{1, 0}, {0, 1}});
  CHECK(P("a*b", m).multiDegree() == Degree{1, 1});
  CHECK_FALSE(P("a + b", m).isHomogeneous());
}

TEST_CASE("t-order helpers") {
  auto r = Ring::standard({"x", "y"})->withParameters({"s", "t"}, {});
  Polynomial p = P("x + s*x + t*y + s*t + s^2*t", r);
  CHECK(p.tOrder() == 0);
  CHECK(p.maxTDegree() == 3);
  CHECK(p.tPart(1) == P("s*x + t*y", r));
  CHECK(p.tTruncate(1) == P("x + s*x + t*y", r));
  auto parts = p.splitByT();
  REQUIRE(parts.size() == 5);
  Polynomial rebuilt(r);
  for (const auto& [mu, x] : parts) rebuilt += x.mulTerm(mu, 1);
  CHECK(rebuilt == p);
  CHECK(P("x*y", r).embed(Ring::standard({"x", "y"})) == P("x*y", Ring::standard({"x", "y"})));
  CHECK_THROWS_AS(p.embed(Ring::standard({"x", "y"})), RingMismatchError);
}

TEST_CASE("mixing rings is rejected") {
  auto a = xyz(), b = Ring::standard({"x", "y", "w"});
  CHECK_THROWS_AS(P("x", a) + P("x", b), RingMismatchError);
  // structurally identical rings interoperate
  CHECK(P("x", a) + P("x", xyz()) == P("2*x", a));
}

TEST_CASE("parse errors carry line and column") {
  auto r = xyz();
  auto col = [&](const std::string& text) -> std::size_t {
    try {
      parseExpr(text, r, 7);
    } catch (const ParseError& e) {
      CHECK(e.line() == 7);
      return e.column();
    }
    return 0;
  };
  CHECK(col("x + w") == 5);
  CHECK(col("x + + y") == 5);
  CHECK(col("2 x") == 3);
  CHECK(col("x^-1") == 3);
  CHECK(col("(x + y") == 7);
  CHECK(col("1/0") == 4);
  CHECK(col("") == 1);
  CHECK(col("x $ y") == 3);
}

TEST_CASE("property: print then parse is the identity") {
  std::mt19937 rng(1234);
  auto r = Ring::create({"x", "y", "z"}, {{1}, {1}, {1}}, {"t_1", "t_2"}, {});
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6), exp(0, 3), count(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Term> terms;
    for (int k = count(rng); k > 0; --k) {
      std::vector<std::uint16_t> e(5);
      for (auto& x : e) x = static_cast<std::uint16_t>(exp(rng));
      Scalar c(num(rng), den(rng));
      c.canonicalize();
      terms.push_back({Monomial(e, 3), c});
    }
    Polynomial p(r, terms);
    CHECK(parseExpr(printExpr(p), r) == p);
  }
}

TEST_CASE("property: ring axioms on random polynomials") {
  std::mt19937 rng(99);
  auto r = xyz();
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial a = oracle::randomHomogeneous(r, 2, rng), b = oracle::randomHomogeneous(r, 1, rng),
               c = oracle::randomHomogeneous(r, 3, rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    // Leibniz rule
    for (std::size_t v = 0; v < 3; ++v)
      CHECK((a * b).partialDerivative(v) ==
            a.partialDerivative(v) * b + a * b.partialDerivative(v));
  }
}

TEST_CASE("input files") {
  SUBCASE("example 1") {
    auto sys = loadInput(VERSAL_DATA_DIR "/example1.vdef");
    CHECK(sys.ring->numX() == 5);
    CHECK(sys.generators.size() == 6);
    CHECK_FALSE(sys.declaredDegrees);
  }
  SUBCASE("example 2") {
    auto sys = loadInput(VERSAL_DATA_DIR "/example2.vdef");
    CHECK(sys.ring->numX() == 9);
    CHECK(sys.ring->gradingRank() == 3);
    CHECK(sys.generators.size() == 10);
    CHECK(sys.declaredDegrees);
  }
  SUBCASE("missing file") { CHECK_THROWS_AS(loadInput("/nonexistent/file.vdef"), IoError); }
}

TEST_CASE("input format errors") {
  auto errorAt = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parseInput(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  // mismatched tuple lengths
  CHECK(errorAt("ring: QQ\nvars: a b\ndegrees: (1,0) (1)\ngenerators:\n  a\n") ==
        std::pair<std::size_t, std::size_t>{3, 16});
  // wrong number of degrees
  CHECK(errorAt("ring: QQ\nvars: a b\ndegrees: 1\ngenerators:\n  a\n").first == 3);
  // duplicate variable
  CHECK(errorAt("ring: QQ\nvars: a b a\ngenerators:\n  a\n") ==
        std::pair<std::size_t, std::size_t>{2, 11});
  // unsupported field
  CHECK(errorAt("ring: ZZ\nvars: a\ngenerators:\n  a\n") ==
        std::pair<std::size_t, std::size_t>{1, 7});
  // bad polynomial: column is counted in the file line
  CHECK(errorAt("ring: QQ\nvars: a b\ngenerators:\n  a + c\n") ==
        std::pair<std::size_t, std::size_t>{4, 7});
  // inhomogeneous under declared degrees
  CHECK(errorAt("ring: QQ\nvars: a b\ndegrees: 1 2\ngenerators:\n  a^2 + a*b\n").first == 5);
  // zero generator, missing generators, unknown key
  CHECK(errorAt("ring: QQ\nvars: a\ngenerators:\n  a - a\n").first == 4);
  CHECK(errorAt("ring: QQ\nvars: a\ngenerators:\n").first != 0);
  CHECK(errorAt("ring: QQ\nvars: a\ncolor: red\n").first == 3);
  CHECK(errorAt("ring: QQ\ngenerators:\n  1\n").first != 0);
}

TEST_CASE("input comments and layout") {
  auto sys = parseInput(
      "# leading comment\n"
      "ring: QQ   # only QQ\n"
      "\n"
      "vars: a, b c\n"
      "degrees: 2 1 (1)\n"
      "generators:\n"
      "  a - b^2   # weighted homogeneous\n"
      "\tb*c\n");
  CHECK(sys.ring->numX() == 3);
  CHECK(sys.generators.size() == 2);
  CHECK(sys.generators[0].multiDegree() == Degree{2});
}
