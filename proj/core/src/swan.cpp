// Copyright 2026 The bianchi-floor Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bianchi/swan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "bianchi/bounds.hpp"
#include "bianchi/jacobsthal.hpp"
#include "envelope_internal.hpp"

namespace bianchi {

namespace {

using detail::SiteData;

PlanePoint point_of(AlgInt x) { return {make_q(x.a, 2), make_q(x.b, 2)}; }

PlanePoint cmul(const PlanePoint& x, const PlanePoint& y, i64 d) {
  return {x.u * y.u + x.v * y.v * d, x.u * y.v + x.v * y.u};
}
PlanePoint cadd(const PlanePoint& x, const PlanePoint& y) { return {x.u + y.u, x.v + y.v}; }
PlanePoint cconj(const PlanePoint& x) { return {x.u, -x.v}; }

using Key = std::tuple<i64, i64, i64>;

Key key_of(const SiteData& s) { return {s.n, s.X, s.Y}; }

// Canonical translate of a hemisphere (centre in F).
Hemisphere canonicalize(const Order& order, const Hemisphere& h) {
  const AlgInt t = order.translation_to_canonical(h.center);
  if (t.is_zero()) return h;
  return make_hemisphere(order, h.lambda - order.mul(h.mu, t), h.mu);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Rational height_transform(const Order& order, const Mat2& g, const PlanePoint& zeta,
                          const Rational& t_sq) {
  const i64 d = order.disc().value();
  const PlanePoint w = cadd(cmul(point_of(g.c), zeta, d), point_of(g.d));
  const Rational den = order.abs_sq(w) + Rational(order.norm(g.c)) * t_sq;
  return t_sq / (den * den);
}

SpacePoint act(const Order& order, const Mat2& g, const SpacePoint& p) {
  const i64 d = order.disc().value();
  const PlanePoint num = cadd(cmul(point_of(g.a), p.zeta, d), point_of(g.b));
  const PlanePoint den = cadd(cmul(point_of(g.c), p.zeta, d), point_of(g.d));
  const Rational scale = order.abs_sq(den) + Rational(order.norm(g.c)) * p.tSq;
  PlanePoint z = cmul(num, cconj(den), d);
  const PlanePoint extra = cmul(point_of(g.a), cconj(point_of(g.c)), d);
  z = {(z.u + extra.u * p.tSq) / scale, (z.v + extra.v * p.tSq) / scale};
  return {z, p.tSq / (scale * scale)};
}

CoverResult covers(const Order& order, const Hemisphere& g, const FieldElem& target,
                   const Rational& target_radius_sq) {
  if (target_radius_sq <= 0) throw std::invalid_argument("covers: radius must be positive");
  const PlanePoint z = order.to_plane(target);
  const Rational dsq = order.abs_sq({z.u - g.center.u, z.v - g.center.v});
  // 1/|mu| >= d + r  <=>  a - d^2 - r^2 >= 0 and (a - d^2 - r^2)^2 >= 4 d^2 r^2.
  const Rational s = g.radiusSq - dsq - target_radius_sq;
  CoverResult out;
  if (s < 0) return out;
  const Rational lhs = s * s, rhs = 4 * dsq * target_radius_sq;
  out.covers = lhs >= rhs;
  out.boundary = lhs == rhs;
  return out;
}

std::vector<Hemisphere> canonical_hemispheres(const Order& order, i64 cap_sq) {
  std::map<Key, Hemisphere> out;
  const int t = order.disc().trace();
  for (AlgInt mu : order.elements_up_to_norm(cap_sq)) {
    const i64 n = order.norm(mu);
    // Columns of multiplication by mu in the basis (1, w).
    const auto [m00, m10] = order.to_basis(mu);
    const auto [m01, m11] = order.to_basis(order.mul(mu, order.omega()));
    if (m00 * m11 - m01 * m10 != n) throw std::logic_error("canonical_hemispheres: bad determinant");
    // lambda = M (x, y) with x, y in [-1/2, 1/2); n x = m11 l0 - m01 l1 and
    // n y = m00 l1 - m10 l0.
    const i64 l1max = (std::abs(m10) + std::abs(m11) + 1) / 2 + 1;
    for (i64 l1 = -l1max; l1 <= l1max; ++l1) {
      i64 lo = INT64_MIN / 4, hi = INT64_MAX / 4;
      auto bound = [&](i64 coef, i64 rest) {
        // -n <= 2 (coef * l0 + rest) < n
        if (coef == 0) {
          if (!(-n <= 2 * rest && 2 * rest < n)) hi = lo - 1;
          return;
        }
        // coef*l0 in [ceil((-n - 2 rest)/2), ...); handle both signs via floor division.
        const i64 a = -n - 2 * rest, b = n - 2 * rest;  // 2 coef l0 in [a, b)
        const i64 c2 = 2 * coef;
        if (c2 > 0) {
          lo = std::max(lo, -floor_div(-a, c2));
          hi = std::min(hi, -floor_div(-b, c2) - 1);
        } else {
          lo = std::max(lo, floor_div(b, c2) + 1);
          hi = std::min(hi, floor_div(a, c2));
        }
      };
      bound(m11, -m01 * l1);
      bound(-m10, m00 * l1);
      for (i64 l0 = lo; l0 <= hi; ++l0) {
        const AlgInt lambda = order.from_basis(l0, l1);
        const Hemisphere h = make_hemisphere(order, lambda, mu);
        const SiteData s = detail::site_data(order, h);
        if (!(-2 * n <= s.X - t * s.Y && s.X - t * s.Y < 2 * n && -n <= s.Y && s.Y < n)) continue;
        if (!order.is_coprime(lambda, mu)) continue;
        out.try_emplace(key_of(s), h);
      }
    }
  }
  std::vector<Hemisphere> v;
  v.reserve(out.size());
  for (auto& [k, h] : out) v.push_back(h);
  return v;
}

std::vector<Hemisphere> candidate_hemispheres(const Order& order, i64 cap_sq) {
  if (cap_sq < 1) throw std::invalid_argument("candidate_hemispheres: cap_sq < 1");
  std::map<Key, Hemisphere> out;
  for (const Hemisphere& c : canonical_hemispheres(order, cap_sq)) {
    for (int x = -2; x <= 2; ++x) {
      for (int y = -2; y <= 2; ++y) {
        const Hemisphere h =
            make_hemisphere(order, c.lambda + order.mul(c.mu, order.from_basis(x, y)), c.mu);
        if (!disc_meets_domain(order, h)) continue;
        out.try_emplace(key_of(detail::site_data(order, h)), h);
      }
    }
  }
  std::vector<Hemisphere> v;
  v.reserve(out.size());
  for (auto& [k, h] : out) v.push_back(h);
  return v;
}

namespace {

class SwanRunner {
 public:
  SwanRunner(const Disc& d, const SwanOptions& opt) : order_(d), opt_(opt) {
    for (const FieldElem& z : order_.singular_points()) singular_.push_back(order_.to_plane(z));
    std::sort(singular_.begin(), singular_.end());
  }

  SwanResult run() {
    const auto t0 = std::chrono::steady_clock::now();
    SwanResult res;
    res.disc = order_.disc().value();
    res.singular = singular_;

    const i64 D = order_.abs_disc();
    i64 J = 1;
    if (opt_.J) {
      J = *opt_.J;
    } else {
      JacobsthalSolver solver(order_);
      J = solver.theorem_J();
    }
    const i64 upper_ceil = upper_bound(order_, J).floor_square() + 1;
    const i64 limit = std::min(opt_.maxCapSq, upper_ceil);
    res.capLimitSq = limit;
    i64 cap = std::min(opt_.capSq.value_or(std::max<i64>(D, 16)), limit);

    for (const Hemisphere& h : canonical_hemispheres(order_, cap)) add(h);

    for (;;) {
      ++res.rounds;
      const Envelope env =
          floor_envelope(order_, candidates(), singular_, EnvelopeOptions{opt_.threads});
      const std::vector<Hemisphere> found = local_search(env, cap);
      std::size_t added = 0;
      for (const Hemisphere& h : found) added += add(h);
      const bool over_budget = opt_.budgetSecs > 0 && seconds_since(t0) > opt_.budgetSecs;
      if (added > 0 && !over_budget) continue;

      collect(env, res);
      res.capUsedSq = cap;
      bool positive = true;
      bool first = true;
      for (const EnvelopeVertex& v : res.vertices) {
        if (v.singular) continue;
        if (v.heightSq <= 0) positive = false;
        if (first || v.heightSq < res.minVertexHeightSq) res.minVertexHeightSq = v.heightSq;
        first = false;
      }
      if (added > 0) {
        res.note = "budget exhausted while the floor was still changing";
        break;
      }
      if (positive && Rational(cap) * res.minVertexHeightSq >= 1) {
        res.certified = true;
        break;
      }
      if (over_budget) {
        res.note = "budget exhausted before certification";
        break;
      }
      const i64 next = std::min(limit, cap * 2);
      if (next <= cap) {
        res.note = positive ? "cap limit reached before certification"
                            : "non-singular vertex of non-positive height at the cap limit";
        break;
      }
      cap = next;
    }
    res.candidates = cands_.size();
    return res;
  }

 private:
  std::size_t add(const Hemisphere& h) {
    const Hemisphere c = canonicalize(order_, h);
    return cands_.try_emplace(key_of(detail::site_data(order_, c)), c).second ? 1 : 0;
  }

  std::vector<Hemisphere> candidates() const {
    std::vector<Hemisphere> v;
    v.reserve(cands_.size());
    for (auto& [k, h] : cands_) v.push_back(h);
    return v;
  }

  void collect(const Envelope& env, SwanResult& res) const {
    res.faces = env.faces();
    res.vertices = env.vertices();
    res.swanSq = 0;
    for (const FloorFace& f : res.faces) res.swanSq = std::max(res.swanSq, f.hemi.normMu);
  }

  // Hemispheres of norm at most cap that are strictly above the floor at
  // some vertex.  A hemisphere that pierces the floor anywhere over F does
  // so at a vertex: above each cell the gap is affine in the lifted
  // coordinates, so its maximum over the cell sits at a corner.
  std::vector<Hemisphere> local_search(const Envelope& env, i64 cap) const {
    const auto& verts = env.vertices();
    const std::vector<AlgInt> mus = order_.elements_up_to_norm(cap);
    std::vector<std::vector<Hemisphere>> found(verts.size());
    const int nt = std::max(1, opt_.threads);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex mtx;
    auto worker = [&] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < verts.size();) search_vertex(env, verts[i], mus, cap, found[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mtx);
        if (!failure) failure = std::current_exception();
        next = verts.size();
      }
    };
    if (nt == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    std::vector<Hemisphere> out;
    for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
    return out;
  }

  void search_vertex(const Envelope& env, const EnvelopeVertex& v, const std::vector<AlgInt>& mus,
                     i64 cap, std::vector<Hemisphere>& out) const {
    if (v.singular && v.heightSq == 0) return;
    i64 nmax = cap;
    if (v.heightSq > 0) {
      nmax = std::min(cap, to_i64(ceil_of(1 / v.heightSq)) - 1);
      if (nmax < 1) return;
    }
    const i64 D = order_.abs_disc();
    const double sqrtD = std::sqrt(static_cast<double>(D));
    const double wu = v.point.u.convert_to<double>(), wv = v.point.v.convert_to<double>();
    const double tsq = v.heightSq.convert_to<double>();
    const SiteData owner = detail::site_data(order_, env.sites()[v.owner]);
    for (AlgInt mu : mus) {
      const i64 n = order_.norm(mu);
      if (n > nmax) break;
      const double rsq = 1.0 - static_cast<double>(n) * tsq;
      if (rsq <= 0) continue;
      const double r = std::sqrt(rsq) * (1 + 1e-9) + 1e-9;
      // mu * w in plane coordinates.
      const double ma = mu.a / 2.0, mb = mu.b / 2.0;
      const double pu = ma * wu - mb * wv * static_cast<double>(D);
      const double pv = ma * wv + mb * wu;
      const i64 qlo = static_cast<i64>(std::ceil(2 * (pv - r / sqrtD)));
      const i64 qhi = static_cast<i64>(std::floor(2 * (pv + r / sqrtD)));
      for (i64 q = qlo; q <= qhi; ++q) {
        const double dv = (pv - q / 2.0) * sqrtD;
        const double rem = r * r - dv * dv;
        if (rem < 0) continue;
        const double s = std::sqrt(rem);
        for (i64 p = static_cast<i64>(std::ceil(2 * (pu - s))); p <= static_cast<i64>(std::floor(2 * (pu + s))); ++p) {
          const AlgInt lambda{p, q};
          if (!order_.is_valid(lambda)) continue;
          const Hemisphere h = make_hemisphere(order_, lambda, mu);
          const SiteData hs = detail::site_data(order_, h);
          if (hs.n == owner.n && hs.X == owner.X && hs.Y == owner.Y) continue;
          if (detail::line_sign(detail::beats_line(owner, hs, D), v.exact) >= 0) continue;
          if (!order_.is_coprime(lambda, mu)) continue;
          out.push_back(h);
        }
      }
    }
  }

  Order order_;
  SwanOptions opt_;
  std::vector<PlanePoint> singular_;
  std::map<Key, Hemisphere> cands_;
};

}  // namespace

SwanResult swan_number(const Disc& d, const SwanOptions& options) {
  return SwanRunner(d, options).run();
}

std::vector<Generator> emit_generators(const Order& order, const SwanResult& result) {
  if (!result.certified) throw std::invalid_argument("emit_generators: result is not certified");
  std::vector<Generator> out;
  out.push_back({{AlgInt::integer(1), AlgInt::integer(1), {}, AlgInt::integer(1)}, "translation"});
  out.push_back({{AlgInt::integer(1), order.omega(), {}, AlgInt::integer(1)}, "translation"});
  std::set<Key> seen;
  for (const FloorFace& f : result.faces) {
    const Hemisphere h = canonicalize(order, f.hemi);
    if (!seen.insert(key_of(detail::site_data(order, h))).second) continue;
    const auto [alpha, beta] = order.bezout_solve(h.lambda, h.mu);
    out.push_back({{beta, -alpha, -h.mu, h.lambda}, "face"});
  }
  return out;
}

GeneratorAudit audit_generators(const Order& order, const std::vector<Generator>& gens,
                                i64 swan_sq) {
  GeneratorAudit a;
  a.count = gens.size();
  for (const Generator& g : gens) {
    if (order.det(g.matrix) != AlgInt::integer(1)) a.determinantsOne = false;
    if (g.kind != "face") continue;
    const AlgInt mu = -g.matrix.c;
    if (order.norm(mu) > swan_sq) a.entriesBounded = false;
    const AlgInt beta = g.matrix.a;
    if (order.reduce_mod(beta, mu) != beta) a.betaReduced = false;
  }
  return a;
}

}  // namespace bianchi
