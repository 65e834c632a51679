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

// Exact predicates shared by the envelope and the Swan driver.

#pragma once

#include <vector>

#include "bianchi/envelope.hpp"

namespace bianchi::detail {

// Integer description of a hemisphere with lambda = (a1 + b1 s)/2 and
// mu = (a2 + b2 s)/2: its centre is (X, Y)/(4n) and the affine function
//   l(u, v) = X u + |D| Y v + 2 (1 - N(lambda))
// satisfies power(u, v) + |z|^2 = l(u, v) / (2n).
struct SiteData {
  i64 n = 1;
  i64 X = 0, Y = 0;
  i64 Nl = 0;
  // Physical centre (u, v*sqrt|D|) and radius, for filtering only.
  double cu = 0, cq = 0, R = 1;
};

SiteData site_data(const Order& order, const Hemisphere& h);

// power_g >= power_h, as a reduced integral half-plane.
HalfPlane beats_line(const SiteData& g, const SiteData& h, i64 abs_disc);
HVertex intersect(const HalfPlane& p, const HalfPlane& q);
int line_sign(const HalfPlane& l, const HVertex& v);
int power_sign(const SiteData& s, const HVertex& v, i64 abs_disc);
PlanePoint to_point(const HVertex& v);
std::vector<HalfPlane> domain_lines(int trace);

// Convex polygon as a cyclic list of edge lines; verts[i] joins lines[i]
// and lines[i + 1].
struct Polygon {
  explicit Polygon(std::vector<HalfPlane> ls);
  // Intersect with l >= 0.  Returns whether anything changed; a result of
  // zero area sets `empty`.
  bool clip(const HalfPlane& l);
  void refresh_doubles();

  std::vector<HalfPlane> lines;
  std::vector<HVertex> verts;
  std::vector<double> du, dv;
  bool empty = false;
};

}  // namespace bianchi::detail
