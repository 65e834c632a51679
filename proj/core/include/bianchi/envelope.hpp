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

// Upper envelope of hemispheres over the fundamental parallelogram F.
//
// A hemisphere with centre c and radius r lies above the point z at height
// sqrt(r^2 - |z - c|^2).  Comparing heights is comparing powers
// r^2 - |z - c|^2, and the difference of two powers is affine in (u, v), so
// the envelope is a power diagram: every cell is a convex polygon cut out of
// F by integral half-planes.  Vertices are kept as exact homogeneous
// intersections of two such lines, never as chained constructions, which
// bounds their size and lets 256-bit arithmetic decide every sign.

#pragma once

#include <vector>

#include "bianchi/qfield.hpp"

namespace bianchi {

struct Hemisphere {
  AlgInt lambda;
  AlgInt mu;
  PlanePoint center;  // lambda / mu
  Rational radiusSq;  // 1 / N(mu)
  i64 normMu = 1;
};

Hemisphere make_hemisphere(const Order& order, AlgInt lambda, AlgInt mu);

// a*u + b*v + c >= 0
struct HalfPlane {
  Int256 a, b, c;
};

// (x/w, y/w) with w > 0
struct HVertex {
  Int256 x, y, w;
};

struct FloorFace {
  Hemisphere hemi;
  std::vector<PlanePoint> cell;
  std::vector<Rational> vertexHeightsSq;
};

struct EnvelopeVertex {
  PlanePoint point;
  Rational heightSq;
  bool singular = false;
  int owner = -1;  // index into Envelope::sites()
  HVertex exact;
};

struct EnvelopeOptions {
  int threads = 1;
};

class Envelope {
 public:
  // Translated copies of the candidates whose discs meet F.
  const std::vector<Hemisphere>& sites() const { return sites_; }
  // One face per site with a cell of positive area, sorted by (N(mu), centre).
  const std::vector<FloorFace>& faces() const { return faces_; }
  // Distinct cell vertices, sorted by position.
  const std::vector<EnvelopeVertex>& vertices() const { return vertices_; }
  // Site index of each face.
  const std::vector<int>& face_sites() const { return face_sites_; }

  // Sites whose closed cell contains p; strict is set for interior points.
  struct Hit {
    int site;
    bool strict;
  };
  std::vector<Hit> locate(const PlanePoint& p) const;

  // Power of site s at p, exactly.
  Rational power(int site, const PlanePoint& p) const;

 private:
  friend class EnvelopeBuilder;
  struct Cell {
    std::vector<HalfPlane> lines;
    std::vector<HVertex> verts;
    double lo[2] = {0, 0}, hi[2] = {0, 0};
  };
  std::vector<Hemisphere> sites_;
  std::vector<Cell> cells_;
  std::vector<FloorFace> faces_;
  std::vector<int> face_sites_;
  std::vector<EnvelopeVertex> vertices_;
  i64 abs_disc_ = 0;
};

// candidates: hemispheres with centres anywhere; every translate meeting F
// is generated internally.  singular: canonical singular points (in F).
Envelope floor_envelope(const Order& order, const std::vector<Hemisphere>& candidates,
                        const std::vector<PlanePoint>& singular,
                        const EnvelopeOptions& options = {});

// Whether the open disc of h meets the closed parallelogram F.
bool disc_meets_domain(const Order& order, const Hemisphere& h);

}  // namespace bianchi
