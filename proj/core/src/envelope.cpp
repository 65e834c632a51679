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

#include "bianchi/envelope.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <thread>

#include "envelope_internal.hpp"

namespace bianchi {

Hemisphere make_hemisphere(const Order& order, AlgInt lambda, AlgInt mu) {
  if (mu.is_zero()) throw std::invalid_argument("make_hemisphere: mu = 0");
  Hemisphere h;
  h.lambda = lambda;
  h.mu = mu;
  h.normMu = order.norm(mu);
  h.center = order.to_plane(order.divide(lambda, mu));
  h.radiusSq = make_q(1, h.normMu);
  return h;
}

namespace detail {

SiteData site_data(const Order& order, const Hemisphere& h) {
  const i128 a1 = h.lambda.a, b1 = h.lambda.b, a2 = h.mu.a, b2 = h.mu.b;
  SiteData s;
  s.n = h.normMu;
  s.X = narrow(a1 * a2 - b1 * b2 * order.disc().value());
  s.Y = narrow(b1 * a2 - a1 * b2);
  s.Nl = order.norm(h.lambda);
  const double sq = std::sqrt(static_cast<double>(order.abs_disc()));
  s.cu = static_cast<double>(s.X) / (4.0 * static_cast<double>(s.n));
  s.cq = static_cast<double>(s.Y) / (4.0 * static_cast<double>(s.n)) * sq;
  s.R = 1.0 / std::sqrt(static_cast<double>(s.n));
  return s;
}

HalfPlane beats_line(const SiteData& g, const SiteData& h, i64 abs_disc) {
  const i128 A = static_cast<i128>(h.n) * g.X - static_cast<i128>(g.n) * h.X;
  const i128 B = abs_disc * (static_cast<i128>(h.n) * g.Y - static_cast<i128>(g.n) * h.Y);
  const i128 C = 2 * (static_cast<i128>(h.n) * (1 - g.Nl) - static_cast<i128>(g.n) * (1 - h.Nl));
  if (A == 0 && B == 0) throw std::logic_error("envelope: concentric sites");
  const i128 g0 = gcd128(gcd128(A, B), C);
  return {Int256(A / g0), Int256(B / g0), Int256(C / g0)};
}

HVertex intersect(const HalfPlane& p, const HalfPlane& q) {
  HVertex v{p.b * q.c - q.b * p.c, q.a * p.c - p.a * q.c, p.a * q.b - q.a * p.b};
  if (v.w == 0) throw std::logic_error("envelope: parallel consecutive edges");
  if (v.w < 0) {
    v.x = -v.x;
    v.y = -v.y;
    v.w = -v.w;
  }
  return v;
}

int line_sign(const HalfPlane& l, const HVertex& v) {
  const Int256 f = l.a * v.x + l.b * v.y + l.c * v.w;
  return f > 0 ? 1 : (f < 0 ? -1 : 0);
}

int power_sign(const SiteData& s, const HVertex& v, i64 abs_disc) {
  const BigInt X(v.x), Y(v.y), W(v.w);
  const BigInt lw = BigInt(s.X) * X + BigInt(abs_disc) * s.Y * Y + BigInt(2 * (1 - s.Nl)) * W;
  const BigInt f = lw * W - BigInt(2 * s.n) * (X * X + BigInt(abs_disc) * Y * Y);
  return f > 0 ? 1 : (f < 0 ? -1 : 0);
}

PlanePoint to_point(const HVertex& v) {
  return {Rational(BigInt(v.x), BigInt(v.w)), Rational(BigInt(v.y), BigInt(v.w))};
}

std::vector<HalfPlane> domain_lines(int t) {
  // bottom, right, top, left: counter-clockwise, inward normals.
  return {{0, 4, 1}, {-2, Int256(2 * t), 1}, {0, -4, 1}, {2, Int256(-2 * t), 1}};
}

Polygon::Polygon(std::vector<HalfPlane> ls) : lines(std::move(ls)) {
  const std::size_t k = lines.size();
  verts.reserve(k);
  for (std::size_t i = 0; i < k; ++i) verts.push_back(intersect(lines[i], lines[(i + 1) % k]));
  refresh_doubles();
}

void Polygon::refresh_doubles() {
  du.resize(verts.size());
  dv.resize(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const double w = verts[i].w.convert_to<double>();
    du[i] = verts[i].x.convert_to<double>() / w;
    dv[i] = verts[i].y.convert_to<double>() / w;
  }
}

bool Polygon::clip(const HalfPlane& h) {
  if (empty) return false;
  const std::size_t k = lines.size();
  // Floating filter: most lines miss the polygon by a wide margin.
  {
    const double a = h.a.convert_to<double>(), b = h.b.convert_to<double>(),
                 c = h.c.convert_to<double>();
    bool clear = true;
    for (std::size_t i = 0; i < k && clear; ++i) {
      const double f = a * du[i] + b * dv[i] + c;
      const double scale = std::abs(a * du[i]) + std::abs(b * dv[i]) + std::abs(c);
      clear = f > 1e-9 * scale;
    }
    if (clear) return false;
  }
  std::vector<int> s(k);
  bool any_neg = false, any_pos = false;
  for (std::size_t i = 0; i < k; ++i) {
    s[i] = line_sign(h, verts[i]);
    any_neg |= s[i] < 0;
    any_pos |= s[i] > 0;
  }
  if (!any_neg) return false;
  if (!any_pos) {
    empty = true;
    return true;
  }
  std::size_t j = 0;
  while (!(s[j] < 0 && s[(j + k - 1) % k] >= 0)) ++j;
  std::size_t e = j, neg = 1;
  while (s[(e + 1) % k] < 0) {
    e = (e + 1) % k;
    ++neg;
  }
  std::size_t total_neg = 0;
  for (int x : s) total_neg += x < 0;
  if (total_neg != neg) throw std::logic_error("envelope: non-convex clip");

  std::vector<HalfPlane> nl;
  std::vector<HVertex> nv;
  const std::size_t kept = (j + k - (e + 1) % k) % k + 1;
  nl.reserve(kept + 1);
  nv.reserve(kept + 1);
  for (std::size_t m = 0, i = (e + 1) % k; m < kept; ++m, i = (i + 1) % k) {
    nl.push_back(lines[i]);
    if (m + 1 < kept) nv.push_back(verts[i]);
  }
  nl.push_back(h);
  nv.push_back(intersect(lines[j], h));
  nv.push_back(intersect(h, lines[(e + 1) % k]));
  lines = std::move(nl);
  verts = std::move(nv);
  refresh_doubles();
  return true;
}

}  // namespace detail

using namespace detail;

namespace {

// Uniform bucket grid over physical coordinates (u, v*sqrt|D|).
class Grid {
 public:
  Grid(const std::vector<SiteData>& sites, double cell) : sites_(sites), cell_(cell) {
    lo_u_ = lo_q_ = 1e300;
    double hi_u = -1e300, hi_q = -1e300;
    for (const SiteData& s : sites) {
      lo_u_ = std::min(lo_u_, s.cu - s.R);
      lo_q_ = std::min(lo_q_, s.cq - s.R);
      hi_u = std::max(hi_u, s.cu + s.R);
      hi_q = std::max(hi_q, s.cq + s.R);
    }
    nu_ = std::max(1, static_cast<int>((hi_u - lo_u_) / cell_) + 1);
    nq_ = std::max(1, static_cast<int>((hi_q - lo_q_) / cell_) + 1);
    buckets_.resize(static_cast<std::size_t>(nu_) * nq_);
    for (std::size_t i = 0; i < sites.size(); ++i) {
      const auto [u0, u1, q0, q1] = range(sites[i].cu, sites[i].cq, sites[i].R);
      for (int x = u0; x <= u1; ++x)
        for (int y = q0; y <= q1; ++y) buckets_[index(x, y)].push_back(static_cast<int>(i));
    }
  }

  struct Scratch {
    std::vector<int> stamp;
    int tag = 0;
  };

  // Sites whose discs may meet the disc of radius r about (u, q).
  void query(double u, double q, double r, std::vector<int>& out, Scratch& sc) const {
    if (sc.stamp.size() != sites_.size()) sc.stamp.assign(sites_.size(), -1);
    const int tag = ++sc.tag;
    std::vector<int>& stamp = sc.stamp;
    const auto [u0, u1, q0, q1] = range(u, q, r);
    for (int x = u0; x <= u1; ++x)
      for (int y = q0; y <= q1; ++y)
        for (int i : buckets_[index(x, y)]) {
          if (stamp[i] == tag) continue;
          stamp[i] = tag;
          const SiteData& s = sites_[i];
          const double du = s.cu - u, dq = s.cq - q, rr = s.R + r;
          if (du * du + dq * dq < rr * rr * (1 + 1e-9) + 1e-12) out.push_back(i);
        }
  }

 private:
  struct Range {
    int u0, u1, q0, q1;
  };
  Range range(double u, double q, double r) const {
    auto clampi = [](int x, int n) { return std::clamp(x, 0, n - 1); };
    return {clampi(static_cast<int>(std::floor((u - r - lo_u_) / cell_)), nu_),
            clampi(static_cast<int>(std::floor((u + r - lo_u_) / cell_)), nu_),
            clampi(static_cast<int>(std::floor((q - r - lo_q_) / cell_)), nq_),
            clampi(static_cast<int>(std::floor((q + r - lo_q_) / cell_)), nq_)};
  }
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * nu_ + x; }

  const std::vector<SiteData>& sites_;
  double cell_;
  double lo_u_, lo_q_;
  int nu_ = 1, nq_ = 1;
  std::vector<std::vector<int>> buckets_;
};

double float_disc_domain_gap(const SiteData& s, int t, double sqrtD) {
  // Coarse: distance from the centre to the bounding box of F, minus R.
  const double qlo = -0.25 * sqrtD, qhi = 0.25 * sqrtD;
  const double ulo = -0.5 - 0.25 * t, uhi = 0.5 + 0.25 * t;
  const double du = std::max({ulo - s.cu, 0.0, s.cu - uhi});
  const double dq = std::max({qlo - s.cq, 0.0, s.cq - qhi});
  return std::sqrt(du * du + dq * dq) - s.R;
}

}  // namespace

class EnvelopeBuilder {
 public:
  EnvelopeBuilder(const Order& order, const std::vector<PlanePoint>& singular)
      : order_(order), abs_disc_(order.abs_disc()), singular_(singular.begin(), singular.end()) {}

  Envelope build(const std::vector<Hemisphere>& candidates, int threads) {
    make_sites(candidates);
    const double smallest_r = data_.empty() ? 1.0 : data_.back().R;
    grid_ = std::make_unique<Grid>(data_, std::clamp(4 * smallest_r, 0.02, 0.25));

    const std::size_t n = data_.size();
    env_.cells_.assign(n, {});
    std::vector<char> nonempty(n, 0);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      Grid::Scratch sc;
      std::vector<int> scratch;
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
          Polygon poly = cell_of(static_cast<int>(i), sc, scratch);
          if (poly.empty) continue;
          nonempty[i] = 1;
          Envelope::Cell& c = env_.cells_[i];
          c.lines = std::move(poly.lines);
          c.verts = std::move(poly.verts);
          c.lo[0] = *std::min_element(poly.du.begin(), poly.du.end());
          c.hi[0] = *std::max_element(poly.du.begin(), poly.du.end());
          c.lo[1] = *std::min_element(poly.dv.begin(), poly.dv.end());
          c.hi[1] = *std::max_element(poly.dv.begin(), poly.dv.end());
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    };
    const int nt = std::max(1, threads);
    if (nt == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::map<PlanePoint, EnvelopeVertex> verts;
    for (std::size_t i = 0; i < n; ++i) {
      if (!nonempty[i]) continue;
      const Envelope::Cell& c = env_.cells_[i];
      FloorFace face;
      face.hemi = env_.sites_[i];
      for (const HVertex& hv : c.verts) {
        PlanePoint p = to_point(hv);
        if (!face.cell.empty() && (face.cell.back() == p || face.cell.front() == p)) continue;
        const Rational hsq = env_.power(static_cast<int>(i), p);
        face.cell.push_back(p);
        face.vertexHeightsSq.push_back(hsq);
        auto [it, inserted] = verts.try_emplace(p);
        if (inserted) {
          it->second.point = p;
          it->second.heightSq = hsq;
          it->second.owner = static_cast<int>(i);
          it->second.exact = hv;
          it->second.singular = singular_.count(order_.canonical_point(p)) > 0;
        }
      }
      env_.faces_.push_back(std::move(face));
      env_.face_sites_.push_back(static_cast<int>(i));
    }
    for (auto& [p, v] : verts) env_.vertices_.push_back(std::move(v));
    return std::move(env_);
  }

 private:
  void make_sites(const std::vector<Hemisphere>& candidates) {
    const int t = order_.disc().trace();
    const double sqrtD = std::sqrt(static_cast<double>(abs_disc_));
    std::map<std::tuple<i64, i64, i64>, Hemisphere> keyed;
    for (const Hemisphere& c : candidates) {
      const AlgInt shift0 = order_.translation_to_canonical(c.center);
      for (int x = -3; x <= 3; ++x) {
        for (int y = -3; y <= 3; ++y) {
          const AlgInt tau = order_.from_basis(x, y) - shift0;
          const AlgInt lambda = c.lambda + order_.mul(c.mu, tau);
          const Hemisphere h = make_hemisphere(order_, lambda, c.mu);
          const SiteData s = site_data(order_, h);
          if (float_disc_domain_gap(s, t, sqrtD) > 1e-9) continue;
          keyed.try_emplace({s.n, s.X, s.Y}, h);
        }
      }
    }
    env_.abs_disc_ = abs_disc_;
    for (auto& [key, h] : keyed) {
      data_.push_back(site_data(order_, h));
      env_.sites_.push_back(h);
    }
  }

  Polygon cell_of(int g, Grid::Scratch& sc, std::vector<int>& scratch) {
    const SiteData& G = data_[g];
    Polygon poly(domain_lines(order_.disc().trace()));
    scratch.clear();
    grid_->query(G.cu, G.cq, G.R, scratch, sc);
    std::sort(scratch.begin(), scratch.end());
    for (int h : scratch) {
      if (h == g) continue;
      poly.clip(beats_line(G, data_[h], abs_disc_));
      if (poly.empty) return poly;
    }
    // The part of the cell outside g's disc may still be beaten by sites
    // whose discs miss g's disc; check every vertex of non-positive power.
    for (bool changed = true; changed && !poly.empty;) {
      changed = false;
      for (std::size_t i = 0; i < poly.verts.size() && !changed; ++i) {
        const HVertex& v = poly.verts[i];
        const int ps = power_sign(G, v, abs_disc_);
        if (ps > 0) continue;
        const double sq = std::sqrt(static_cast<double>(abs_disc_));
        std::vector<int> near;
        grid_->query(poly.du[i], poly.dv[i] * sq, 0.0, near, sc);
        std::sort(near.begin(), near.end());
        for (int h : near) {
          if (h == g) continue;
          HalfPlane l = beats_line(G, data_[h], abs_disc_);
          if (line_sign(l, v) < 0) {
            poly.clip(l);
            changed = true;
            break;
          }
        }
        if (changed || ps == 0) continue;
        for (std::size_t h = 0; h < data_.size(); ++h) {
          if (static_cast<int>(h) == g) continue;
          HalfPlane l = beats_line(G, data_[h], abs_disc_);
          if (line_sign(l, v) < 0) {
            poly.clip(l);
            changed = true;
            break;
          }
        }
      }
    }
    return poly;
  }

  const Order& order_;
  i64 abs_disc_;
  std::set<PlanePoint> singular_;
  std::vector<SiteData> data_;
  std::unique_ptr<Grid> grid_;
  Envelope env_;
};

Envelope floor_envelope(const Order& order, const std::vector<Hemisphere>& candidates,
                        const std::vector<PlanePoint>& singular, const EnvelopeOptions& options) {
  if (candidates.empty()) throw std::invalid_argument("floor_envelope: no candidates");
  EnvelopeBuilder b(order, singular);
  return b.build(candidates, options.threads);
}

Rational Envelope::power(int site, const PlanePoint& p) const {
  const Hemisphere& h = sites_.at(site);
  const Rational du = p.u - h.center.u, dv = p.v - h.center.v;
  return h.radiusSq - du * du - dv * dv * abs_disc_;
}

std::vector<Envelope::Hit> Envelope::locate(const PlanePoint& p) const {
  std::vector<Hit> out;
  const double pu = p.u.convert_to<double>(), pv = p.v.convert_to<double>();
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const Cell& c = cells_[i];
    if (c.lines.empty()) continue;
    if (pu < c.lo[0] - 1e-9 || pu > c.hi[0] + 1e-9 || pv < c.lo[1] - 1e-9 || pv > c.hi[1] + 1e-9)
      continue;
    bool inside = true, strict = true;
    for (const HalfPlane& l : c.lines) {
      const Rational f = Rational(BigInt(l.a)) * p.u + Rational(BigInt(l.b)) * p.v + Rational(BigInt(l.c));
      if (f < 0) {
        inside = false;
        break;
      }
      if (f == 0) strict = false;
    }
    if (inside) out.push_back({static_cast<int>(i), strict});
  }
  return out;
}

bool disc_meets_domain(const Order& order, const Hemisphere& h) {
  const i64 D = order.abs_disc();
  const int t = order.disc().trace();
  auto q = [&](const Rational& du, const Rational& dv) { return du * du + dv * dv * D; };
  auto dot = [&](const PlanePoint& x, const PlanePoint& y) { return x.u * y.u + x.v * y.v * D; };
  // Corners of F in counter-clockwise order.
  const Rational hf = make_q(1, 2);
  const std::vector<PlanePoint> corners = {order.basis_to_plane(-hf, -hf), order.basis_to_plane(hf, -hf),
                                           order.basis_to_plane(hf, hf), order.basis_to_plane(-hf, hf)};
  bool inside = true;
  for (const HalfPlane& l : domain_lines(t)) {
    const Rational f = Rational(BigInt(l.a)) * h.center.u + Rational(BigInt(l.b)) * h.center.v +
                       Rational(BigInt(l.c));
    if (f < 0) inside = false;
  }
  if (inside) return true;
  for (std::size_t i = 0; i < 4; ++i) {
    const PlanePoint& a = corners[i];
    const PlanePoint& b = corners[(i + 1) % 4];
    const PlanePoint ab{b.u - a.u, b.v - a.v}, ac{h.center.u - a.u, h.center.v - a.v};
    Rational s = dot(ac, ab) / dot(ab, ab);
    s = std::clamp(s, Rational(0), Rational(1));
    if (q(ac.u - s * ab.u, ac.v - s * ab.v) < h.radiusSq) return true;
  }
  return false;
}

}  // namespace bianchi
