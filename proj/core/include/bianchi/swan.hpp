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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bianchi/envelope.hpp"
#include "bianchi/qfield.hpp"

namespace bianchi {

// Height of g(P) squared for P = (zeta, t), g = [[a, b], [c, d]] of
// determinant 1:  t(gP) = t / (|c zeta + d|^2 + |c|^2 t^2).
Rational height_transform(const Order& order, const Mat2& g, const PlanePoint& zeta,
                          const Rational& t_sq);

struct SpacePoint {
  PlanePoint zeta;
  Rational tSq;
  friend bool operator==(const SpacePoint&, const SpacePoint&) = default;
};

// The full action on upper half-space (quaternion formula).
SpacePoint act(const Order& order, const Mat2& g, const SpacePoint& p);

struct CoverResult {
  bool covers = false;
  bool boundary = false;  // equality: internally tangent
};

// Whether the closed disc about target of the given radius lies in the
// closed disc of g, i.e. 1/|mu| - |target - lambda/mu| >= r.
CoverResult covers(const Order& order, const Hemisphere& g, const FieldElem& target,
                   const Rational& target_radius_sq);

// Every hemisphere with N(mu) <= cap_sq whose open disc meets F, one per
// centre.
std::vector<Hemisphere> candidate_hemispheres(const Order& order, i64 cap_sq);
// One hemisphere per translation class: N(mu) <= cap_sq, centre in F.
std::vector<Hemisphere> canonical_hemispheres(const Order& order, i64 cap_sq);

struct SwanOptions {
  std::optional<i64> capSq;      // starting cap, default max(|D|, 16)
  i64 maxCapSq = i64{1} << 26;
  double budgetSecs = 0;         // 0: unlimited
  int threads = 1;
  std::optional<i64> J;          // skips the Jacobsthal computation
};

struct SwanResult {
  i64 disc = 0;
  i64 swanSq = 0;
  std::vector<FloorFace> faces;
  std::vector<EnvelopeVertex> vertices;
  std::vector<PlanePoint> singular;  // canonical singular points
  Rational minVertexHeightSq = 0;
  i64 capUsedSq = 0;
  i64 capLimitSq = 0;
  bool certified = false;
  int rounds = 0;
  std::size_t candidates = 0;
  std::string note;
};

SwanResult swan_number(const Disc& d, const SwanOptions& options = {});

struct Generator {
  Mat2 matrix;
  std::string kind;  // "translation", "face"
};

// Translations by 1 and w, then one matrix [[beta, -alpha], [-mu, lambda]]
// per face up to translation.  Throws on an uncertified result.
std::vector<Generator> emit_generators(const Order& order, const SwanResult& result);

struct GeneratorAudit {
  bool determinantsOne = true;
  bool entriesBounded = true;
  bool betaReduced = true;
  std::size_t count = 0;
  bool ok() const { return determinantsOne && entriesBounded && betaReduced; }
};

GeneratorAudit audit_generators(const Order& order, const std::vector<Generator>& gens,
                                i64 swan_sq);

}  // namespace bianchi
