#include <doctest.h>

#include <random>
#include <algorithm>
#include <set>

#include "bianchi/envelope.hpp"
#include "bianchi/swan.hpp"
#include "oracles.hpp"

using namespace bianchi;
namespace oc = bianchi::oracle;

namespace {

PlanePoint random_point_in_domain(const Order& o, std::mt19937_64& rng) {
  std::uniform_int_distribution<i64> k(-500000, 499999);
  return o.basis_to_plane(Rational(k(rng), 1000000), Rational(k(rng), 1000000));
}

}  // namespace

TEST_CASE("two unit hemispheres meet on the line Re z = 1/2") {
  const Order o(Disc(-23));
  const Envelope env = floor_envelope(o, candidate_hemispheres(o, 1), {});
  auto owner_at = [&](const PlanePoint& p) {
    std::vector<PlanePoint> centres;
    for (const Envelope::Hit& h : env.locate(p)) centres.push_back(env.sites()[h.site].center);
    return centres;
  };
  const PlanePoint mid{Rational(1, 2), Rational(0)};
  const auto both = owner_at(mid);
  REQUIRE(both.size() == 2);
  CHECK(std::set<PlanePoint>(both.begin(), both.end()) ==
        std::set<PlanePoint>{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}});
  for (const Envelope::Hit& h : env.locate(mid)) CHECK_FALSE(h.strict);

  const auto left = env.locate(PlanePoint{Rational(49, 100), Rational(0)});
  REQUIRE(left.size() == 1);
  CHECK(left[0].strict);
  CHECK(env.sites()[left[0].site].center == PlanePoint{Rational(0), Rational(0)});
}

TEST_CASE("unit hemispheres alone: one face per lattice point touching F") {
  for (i64 d : {-3, -4, -7}) {
    const Order o{Disc(d)};
    const std::vector<Hemisphere> c = candidate_hemispheres(o, 1);
    for (const Hemisphere& h : c) CHECK(h.normMu == 1);
    const Envelope env = floor_envelope(o, c, {});
    CHECK(!env.faces().empty());
    for (const FloorFace& f : env.faces()) {
      CHECK(f.hemi.normMu == 1);
      CHECK(f.cell.size() >= 3);
    }
  }
}

TEST_CASE("D = -23 at cap 16: the largest face curvature is 4") {
  const Order o(Disc(-23));
  const std::vector<Hemisphere> c = candidate_hemispheres(o, 16);
  const Envelope env = floor_envelope(o, c, {});
  i64 top = 0;
  for (const FloorFace& f : env.faces()) top = std::max(top, f.hemi.normMu);
  CHECK(top == 16);
}

TEST_CASE("cell owners equal the brute-force argmax of power") {
  struct Case {
    i64 d, cap;
  };
  for (const Case& cs : {Case{-3, 12}, Case{-4, 12}, Case{-7, 16}, Case{-23, 16}, Case{-20, 20},
                         Case{-132, 40}}) {
    const Order o{Disc(cs.d)};
    const std::vector<Hemisphere> cands = candidate_hemispheres(o, cs.cap);
    const Envelope env = floor_envelope(o, cands, {});
    const std::vector<Hemisphere> sites = oc::translates_meeting_domain(o, cands);
    std::mt19937_64 rng(static_cast<std::uint64_t>(-cs.d));
    int done = 0, ties = 0;
    INFO("D = " << cs.d);
    while (done < 2000) {
      const PlanePoint p = random_point_in_domain(o, rng);
      const std::vector<int> best = oc::argmax_power(o, sites, p);
      if (best.size() > 1) {
        ++ties;
        continue;  // regenerate
      }
      ++done;
      const auto hits = env.locate(p);
      REQUIRE(hits.size() == 1);
      CHECK(hits[0].strict);
      CHECK(env.sites()[hits[0].site].center == sites[best[0]].center);
      CHECK(env.sites()[hits[0].site].normMu == sites[best[0]].normMu);
    }
    CHECK(ties < 50);
  }
}

TEST_CASE("faces: positive area, positive power inside, vertices on the cell") {
  const Order o(Disc(-132));
  const SwanResult r = swan_number(o.disc(), SwanOptions{});
  REQUIRE(r.certified);
  for (const FloorFace& f : r.faces) {
    REQUIRE(f.cell.size() >= 3);
    // Centroid of the vertices lies in the open cell.
    PlanePoint c{Rational(0), Rational(0)};
    for (const PlanePoint& q : f.cell) {
      c.u += q.u;
      c.v += q.v;
    }
    c.u /= static_cast<i64>(f.cell.size());
    c.v /= static_cast<i64>(f.cell.size());
    const Rational power = f.hemi.radiusSq - o.abs_sq({c.u - f.hemi.center.u, c.v - f.hemi.center.v});
    CHECK(power > 0);
    REQUIRE(f.vertexHeightsSq.size() == f.cell.size());
    for (std::size_t i = 0; i < f.cell.size(); ++i) {
      const PlanePoint& q = f.cell[i];
      CHECK(f.vertexHeightsSq[i] ==
            f.hemi.radiusSq - o.abs_sq({q.u - f.hemi.center.u, q.v - f.hemi.center.v}));
    }
  }
  // Every singular point is a vertex of height 0, and no other vertex is.
  for (const PlanePoint& s : r.singular) {
    bool hit = false;
    for (const EnvelopeVertex& v : r.vertices)
      if (v.point == s) {
        hit = true;
        CHECK(v.heightSq == 0);
        CHECK(v.singular);
      }
    CHECK(hit);
  }
  for (const EnvelopeVertex& v : r.vertices)
    if (!v.singular) CHECK(v.heightSq > 0);
}

TEST_CASE("the envelope does not depend on thread count or candidate order") {
  const Order o(Disc(-132));
  std::vector<Hemisphere> c = candidate_hemispheres(o, 132);
  const Envelope a = floor_envelope(o, c, {}, EnvelopeOptions{1});
  std::reverse(c.begin(), c.end());
  const Envelope b = floor_envelope(o, c, {}, EnvelopeOptions{4});
  REQUIRE(a.faces().size() == b.faces().size());
  for (std::size_t i = 0; i < a.faces().size(); ++i) {
    CHECK(a.faces()[i].hemi.center == b.faces()[i].hemi.center);
    CHECK(a.faces()[i].cell == b.faces()[i].cell);
  }
  REQUIRE(a.vertices().size() == b.vertices().size());
  for (std::size_t i = 0; i < a.vertices().size(); ++i) {
    CHECK(a.vertices()[i].point == b.vertices()[i].point);
    CHECK(a.vertices()[i].heightSq == b.vertices()[i].heightSq);
  }
}

TEST_CASE("disc_meets_domain agrees with exact distance") {
  std::mt19937_64 rng(51);
  for (i64 d : {-3, -4, -23, -132}) {
    const Order o{Disc(d)};
    for (int i = 0; i < 2000; ++i) {
      const AlgInt mu = oc::random_alg(rng, o, 4);
      if (mu.is_zero()) continue;
      const AlgInt lambda = oc::random_alg(rng, o, 12);
      const Hemisphere h = make_hemisphere(o, lambda, mu);
      CHECK(disc_meets_domain(o, h) == (oc::dist_sq_to_domain(o, h.center) < h.radiusSq));
    }
  }
}
