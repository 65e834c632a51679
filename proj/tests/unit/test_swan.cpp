#include <doctest.h>

#include <random>

#include "bianchi/bounds.hpp"
#include "bianchi/swan.hpp"
#include "oracles.hpp"

using namespace bianchi;
namespace oc = bianchi::oracle;
using oc::Dec50;

namespace {

const AlgInt kOne = AlgInt::integer(1);
const AlgInt kZero{};

Mat2 identity() { return {kOne, kZero, kZero, kOne}; }
Mat2 inversion() { return {kZero, -kOne, kOne, kZero}; }
Mat2 shift(AlgInt t) { return {kOne, t, kZero, kOne}; }

Dec50 dec(const Rational& q) { return Dec50(numerator(q).str()) / Dec50(denominator(q).str()); }

SpacePoint random_space_point(const Order& o, std::mt19937_64& rng) {
  std::uniform_int_distribution<i64> t(1, 400);
  return {PlanePoint{oc::random_rational(rng, 3), oc::random_rational(rng, 1)}, Rational(t(rng), 97)};
}

}  // namespace

TEST_CASE("height_transform examples") {
  const Order o(Disc(-23));
  const PlanePoint z{Rational(1, 3), Rational(1, 5)};
  CHECK(height_transform(o, identity(), z, Rational(7, 2)) == Rational(7, 2));
  CHECK(height_transform(o, inversion(), PlanePoint{Rational(0), Rational(0)}, Rational(1)) == 1);
  // Inversion sends height t over 0 to 1/t.
  CHECK(height_transform(o, inversion(), PlanePoint{Rational(0), Rational(0)}, Rational(1, 9)) == 9);
  CHECK(height_transform(o, shift(o.omega()), z, Rational(5)) == Rational(5));
}

TEST_CASE("height_transform agrees with 50-digit evaluation") {
  std::mt19937_64 rng(61);
  for (i64 d : {-3, -4, -20, -23, -132}) {
    const Order o{Disc(d)};
    int tested = 0;
    while (tested < 400) {
      const Mat2 g = {oc::random_alg(rng, o, 6), oc::random_alg(rng, o, 6),
                      oc::random_alg(rng, o, 6), oc::random_alg(rng, o, 6)};
      const SpacePoint p = random_space_point(o, rng);
      ++tested;
      const Rational exact = height_transform(o, g, p.zeta, p.tSq);
      const Dec50 ref = oc::height_transform_decimal(o, g, p.zeta, p.tSq);
      CHECK(abs(dec(exact) - ref) <= Dec50("1e-40") * (1 + abs(ref)));
    }
  }
}

TEST_CASE("act is a group action on random words in T, T_w and S") {
  std::mt19937_64 rng(62);
  for (i64 d : {-4, -7, -23, -52}) {
    const Order o{Disc(d)};
    const std::vector<Mat2> gens = {shift(kOne), shift(o.omega()), inversion(),
                                    shift(-kOne), shift(-o.omega())};
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int i = 0; i < 200; ++i) {
      const SpacePoint p = random_space_point(o, rng);
      SpacePoint step = p;
      Mat2 word = identity();
      for (int k = 0; k < 6; ++k) {
        const Mat2& g = gens[pick(rng)];
        step = act(o, g, step);
        word = o.mat_mul(g, word);
      }
      CHECK(o.det(word) == kOne);
      CHECK(act(o, word, p) == step);
      CHECK(height_transform(o, word, p.zeta, p.tSq) == step.tSq);
    }
  }
}

TEST_CASE("covers") {
  const Order o(Disc(-23));
  const Hemisphere unit = make_hemisphere(o, kZero, kOne);
  const CoverResult self = covers(o, unit, o.make_elem(kZero), Rational(1));
  CHECK(self.covers);
  CHECK(self.boundary);
  CHECK_FALSE(covers(o, unit, o.make_elem(AlgInt::integer(2)), Rational(1, 100)).covers);
  const CoverResult inner = covers(o, unit, o.make_elem(AlgInt{1, 0}), Rational(1, 9));
  CHECK(inner.covers);
  CHECK_FALSE(inner.boundary);
  // Internally tangent: |1/2| + 1/2 = 1.
  const CoverResult tangent = covers(o, unit, o.make_elem(AlgInt{1, 0}), Rational(1, 4));
  CHECK(tangent.covers);
  CHECK(tangent.boundary);
}

TEST_CASE("candidate_hemispheres matches a naive enumeration") {
  struct Case {
    i64 d, cap;
  };
  for (const Case& c : {Case{-3, 4}, Case{-4, 5}, Case{-7, 8}, Case{-23, 16}, Case{-20, 10}}) {
    const Order o{Disc(c.d)};
    INFO("D = " << c.d);
    const std::vector<Hemisphere> got = candidate_hemispheres(o, c.cap);
    CHECK(got.size() == oc::naive_candidate_count(o, c.cap));
    for (const Hemisphere& h : got) {
      CHECK(h.normMu <= c.cap);
      CHECK(oc::coprime(c.d, h.lambda, h.mu));
      CHECK(oc::dist_sq_to_domain(o, h.center) < h.radiusSq);
    }
  }
  const Order o(Disc(-23));
  for (const Hemisphere& h : candidate_hemispheres(o, 1)) CHECK(h.normMu == 1);
  CHECK_THROWS(candidate_hemispheres(o, 0));
}

TEST_CASE("canonical_hemispheres keeps one centre per translation class in F") {
  for (i64 d : {-4, -23, -132}) {
    const Order o{Disc(d)};
    std::set<PlanePoint> seen;
    for (const Hemisphere& h : canonical_hemispheres(o, 40)) {
      const auto [x, y] = o.plane_to_basis(h.center);
      CHECK(x >= Rational(-1, 2));
      CHECK(x < Rational(1, 2));
      CHECK(y >= Rational(-1, 2));
      CHECK(y < Rational(1, 2));
      CHECK(seen.insert(h.center).second);
    }
  }
}

TEST_CASE("Swan numbers of small discriminants") {
  for (i64 d : {-3, -4, -7, -8, -11}) {
    const SwanResult r = swan_number(Disc(d));
    INFO("D = " << d);
    CHECK(r.certified);
    CHECK(r.swanSq == 1);
    CHECK(r.singular.empty());
  }
  const SwanResult r23 = swan_number(Disc(-23));
  CHECK(r23.certified);
  CHECK(r23.swanSq == 16);
  CHECK(r23.singular.size() == 2);
  CHECK(r23.minVertexHeightSq > 0);

  const SwanResult r132 = swan_number(Disc(-132));
  CHECK(r132.certified);
  CHECK(r132.swanSq == 528);
}

TEST_CASE("Swan numbers lie strictly between the bounds") {
  for (i64 d : {-15, -20, -23, -24, -35, -39, -40, -51, -52, -55, -56, -84}) {
    const Order o{Disc(d)};
    JacobsthalSolver s(o);
    const BoundsReport b = bounds_report(s);
    const SwanResult r = swan_number(o.disc());
    INFO("D = " << d);
    REQUIRE(r.certified);
    CHECK(b.lower.compare_square(Rational(r.swanSq)) <= 0);
    CHECK(b.upper.compare_square(Rational(r.swanSq)) > 0);
  }
}

TEST_CASE("swan_number reports an uncertified run honestly") {
  SwanOptions opt;
  opt.capSq = 16;
  opt.maxCapSq = 16;
  const SwanResult r = swan_number(Disc(-132), opt);
  CHECK_FALSE(r.certified);
  CHECK(r.capLimitSq == 16);
  CHECK_THROWS(emit_generators(Order(Disc(-132)), r));
}

TEST_CASE("generators: translations first, every matrix of determinant 1") {
  for (i64 d : {-4, -23, -132}) {
    const Order o{Disc(d)};
    const SwanResult r = swan_number(o.disc());
    REQUIRE(r.certified);
    const std::vector<Generator> gens = emit_generators(o, r);
    REQUIRE(gens.size() >= 3);
    CHECK(gens[0].matrix == shift(kOne));
    CHECK(gens[1].matrix == shift(o.omega()));
    CHECK(gens[0].kind == "translation");
    CHECK(gens[1].kind == "translation");
    for (const Generator& g : gens) CHECK(o.det(g.matrix) == kOne);
    for (std::size_t i = 2; i < gens.size(); ++i) {
      CHECK(gens[i].kind == "face");
      CHECK(o.norm(gens[i].matrix.c) <= r.swanSq);
    }
    const GeneratorAudit a = audit_generators(o, gens, r.swanSq);
    CHECK(a.ok());
    CHECK(a.count == gens.size());
  }
  // The unit hemisphere at 0 gives an inversion [[0, -u^-1], [-u, 0]].
  const Order o(Disc(-4));
  const std::vector<Generator> g4 = emit_generators(o, swan_number(o.disc()));
  bool found = false;
  for (const Generator& g : g4)
    if (g.matrix.a.is_zero() && g.matrix.d.is_zero() && o.norm(g.matrix.c) == 1) found = true;
  CHECK(found);
}

TEST_CASE("audit_generators rejects a tampered list") {
  const Order o(Disc(-23));
  const SwanResult r = swan_number(o.disc());
  std::vector<Generator> gens = emit_generators(o, r);
  gens.back().matrix.b = gens.back().matrix.b + kOne;
  CHECK_FALSE(audit_generators(o, gens, r.swanSq).determinantsOne);
}
