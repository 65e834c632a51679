#include <doctest.h>

#include <random>
#include <sstream>

#include "bianchi/cli/commands.hpp"
#include "bianchi/cli/report.hpp"
#include "bianchi/cli/svg.hpp"
#include "oracles.hpp"

using namespace bianchi;
using namespace bianchi::cli;
namespace oc = bianchi::oracle;

namespace {

std::string run(int (*fn)(i64, Format, std::ostream&), i64 disc, Format f, int* rc = nullptr) {
  std::ostringstream out;
  const int code = fn(disc, f, out);
  if (rc) *rc = code;
  return out.str();
}

}  // namespace

TEST_CASE("rational and surd JSON round-trip") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 500; ++i) {
    const Rational q = oc::random_rational(rng, 1'000'000'000);
    const Json j = rational_json(q);
    CHECK(rational_from_json(Json::parse(j.dump())) == q);
  }
  const Rational huge = Rational(BigInt("123456789012345678901234567890"), 7);
  CHECK(rational_from_json(rational_json(huge)) == huge);

  for (i64 d : {-23, -132, -388, -8}) {
    JacobsthalSolver s{Order(Disc(d))};
    const BoundsReport r = bounds_report(s);
    CHECK(surd_from_json(surd_json(r.lower)) == r.lower);
    CHECK(surd_from_json(surd_json(r.upper)) == r.upper);
  }
  CHECK_THROWS(rational_from_json(Json{{"num", "1"}, {"den", "0"}}));
  CHECK_THROWS(rational_from_json(Json{{"num", "x"}, {"den", "2"}}));
}

TEST_CASE("figure CSV round-trip") {
  std::vector<Fig6Row> rows;
  for (i64 d : fundamental_discriminants(60)) {
    JacobsthalSolver s{Order(Disc(d))};
    BoundsReport r = bounds_report(s);
    if (d == -23) r.swanSq = 16;
    rows.push_back(fig6_row(r));
  }
  std::string text = fig6_header() + "\n";
  for (const Fig6Row& row : rows) text += fig6_line(row) + "\n";
  CHECK(parse_fig6_csv(text) == rows);
  CHECK_THROWS(parse_fig6_csv("not,a,header\n1,2,3\n"));
}

TEST_CASE("figure6 at N = M = 30") {
  Figure6Command c;
  c.maxAbsDisc = 30;
  c.swanUpto = 30;
  std::ostringstream out;
  CHECK(cmd_figure6(c, out) == 0);
  const std::vector<Fig6Row> rows = parse_fig6_csv(out.str());
  std::vector<i64> discs;
  for (const Fig6Row& r : rows) discs.push_back(r.disc);
  CHECK(discs == fundamental_discriminants(30));
  CHECK(rows.size() == 10);
  for (const Fig6Row& r : rows) {
    INFO("D = " << r.disc);
    REQUIRE(r.swanSq);
    const Order o{Disc(r.disc)};
    CHECK(r.classNumber == oc::class_number(r.disc));
    CHECK(r.deltaNormSq == delta_norm_sq(o.disc()));
    JacobsthalSolver s(o);
    const BoundsReport b = bounds_report(s);
    CHECK(b.lower.compare_square(Rational(*r.swanSq)) <= 0);
    CHECK(b.upper.compare_square(Rational(*r.swanSq)) > 0);
    if (r.disc == -23) CHECK(*r.swanSq == 16);
    // Only the Euclidean orders are floored by unit hemispheres alone.
    if (-r.disc <= 11) CHECK(*r.swanSq == 1);
    if (r.disc == -19) CHECK(*r.swanSq > 1);
  }
}

TEST_CASE("figure6 at N = 12 has J = 1 everywhere") {
  Figure6Command c;
  c.maxAbsDisc = 12;
  std::ostringstream out;
  CHECK(cmd_figure6(c, out) == 0);
  const auto rows = parse_fig6_csv(out.str());
  CHECK(rows.size() == 5);
  for (const Fig6Row& r : rows) {
    CHECK(r.J == 1);
    CHECK_FALSE(r.swanSq);
  }
}

TEST_CASE("usage errors") {
  std::ostringstream out;
  CHECK_THROWS_AS(cmd_bounds(-5, Format::kText, out), UsageError);
  CHECK_THROWS_AS(cmd_bounds(5, Format::kText, out), UsageError);
  CHECK_THROWS_AS(parse_format("xml"), UsageError);
  CHECK_THROWS_AS(cmd_jacobsthal_little(-20, "3", Format::kText, out), UsageError);
  CHECK_THROWS_AS(cmd_jacobsthal_little(-20, "a,b", Format::kText, out), UsageError);
  CHECK_THROWS_AS(cmd_jacobsthal_little(-20, "0,0", Format::kText, out), UsageError);
  CHECK_THROWS_AS(cmd_jacobsthal_little(-20, "3,1", Format::kText, out), UsageError);
  CHECK_THROWS_AS(cmd_jacobsthal_big(-20, "-1", Format::kText, out), UsageError);
  CHECK_THROWS_AS(cmd_jacobsthal_big(-20, "1/x", Format::kText, out), UsageError);
  Figure6Command f;
  f.maxAbsDisc = 2;
  CHECK_THROWS_AS(cmd_figure6(f, out), UsageError);
  SwanCommand s;
  s.disc = -23;
  s.svgPath = "/nonexistent-dir/x.svg";
  CHECK_THROWS_AS(cmd_swan(s, out), UsageError);
}

TEST_CASE("jacobsthal commands") {
  std::ostringstream out;
  CHECK(cmd_jacobsthal_little(-20, "10,10", Format::kJson, out) == 0);
  const Json j = Json::parse(out.str());
  CHECK(j["witness"]["value"] == 4);
  CHECK(j["witnessChecked"] == true);

  std::ostringstream big;
  CHECK(cmd_jacobsthal_big(-20, "2001/1000", Format::kJson, big) == 0);
  CHECK(Json::parse(big.str())["value"] == 2);

  int rc = -1;
  const Json fp = Json::parse(run(cmd_jacobsthal_fixedpoint, -23, Format::kJson, &rc));
  CHECK(rc == 0);
  CHECK(fp["J"].get<i64>() >= 3);
  CHECK(Json::parse(run(cmd_jacobsthal_fixedpoint, -163, Format::kJson))["J"] == 1);
}

TEST_CASE("singular command lists the canonical points") {
  const Json j = Json::parse(run(cmd_singular, -132, Format::kJson));
  CHECK(j["points"].size() == Order(Disc(-132)).singular_points().size());
  CHECK(run(cmd_singular, -163, Format::kText).empty());
}

TEST_CASE("swan output is deterministic across thread counts") {
  SwanCommand c;
  c.disc = -132;
  c.format = Format::kJson;
  c.generators = true;
  std::ostringstream one, three;
  c.threads = 1;
  CHECK(cmd_swan(c, one) == 0);
  c.threads = 3;
  CHECK(cmd_swan(c, three) == 0);
  CHECK(one.str() == three.str());
  const Json j = Json::parse(one.str());
  CHECK(j["swanSq"] == 528);
  CHECK(j["certified"] == true);
  CHECK(j["audit"]["determinantsOne"] == true);
}

TEST_CASE("an uncertified swan run exits with 2") {
  SwanCommand c;
  c.disc = -132;
  c.capSq = 4;
  c.budgetSecs = 1e-9;
  std::ostringstream out;
  CHECK(cmd_swan(c, out) == 2);
  CHECK(out.str().find("uncertified") != std::string::npos);
}

TEST_CASE("SVG rendering is deterministic and well formed") {
  const Order o(Disc(-23));
  const SwanResult r = swan_number(o.disc());
  const std::string a = render_swan_svg(o, r), b = render_swan_svg(o, swan_number(o.disc()));
  CHECK(a == b);
  CHECK(a.find("<svg") != std::string::npos);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(a.find("nan") == std::string::npos);
}

TEST_CASE("bounds text and JSON agree") {
  int rc = -1;
  const Json j = Json::parse(run(cmd_bounds, -388, Format::kJson, &rc));
  CHECK(rc == 0);
  CHECK(j["disc"] == -388);
  const std::string t = run(cmd_bounds, -388, Format::kText);
  CHECK(t.find("-388") != std::string::npos);
}
