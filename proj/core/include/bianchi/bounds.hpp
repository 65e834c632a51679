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

#include "bianchi/jacobsthal.hpp"
#include "bianchi/qfield.hpp"

namespace bianchi {

// Sign of c + x*sqrt(s) + y*sqrt(t) for rationals c, x, y and s, t >= 0.
int surd_sign(const Rational& c, const Rational& x, i64 s, const Rational& y, i64 t);

// A nonnegative real sqrt(q0 + q1*sqrt(s)), s squarefree.  Every bound in
// this module has this shape; comparisons go through the squares.
class SurdValue {
 public:
  SurdValue() = default;
  // sqrt(q0 + q1*sqrt(s)); throws if the radicand is negative.
  SurdValue(Rational q0, Rational q1, i64 s);

  static SurdValue from_rational(const Rational& r);     // r >= 0
  static SurdValue sqrt_of(const Rational& r);           // sqrt(r)

  const Rational& q0() const { return q0_; }
  const Rational& q1() const { return q1_; }
  i64 s() const { return s_; }

  // Exact three-way comparison.
  int compare(const SurdValue& other) const;
  int compare_square(const Rational& r) const;  // value^2 vs r
  friend bool operator<(const SurdValue& x, const SurdValue& y) { return x.compare(y) < 0; }
  friend bool operator==(const SurdValue& x, const SurdValue& y) { return x.compare(y) == 0; }

  // Smallest integer k with k >= value.
  i64 ceil() const;
  // Largest integer k with k <= value^2.
  i64 floor_square() const;
  double to_double() const;
  // Decimal renderings with `digits` significant digits (display only);
  // log_decimal is the natural logarithm of the value.
  std::string decimal(int digits = 12) const;
  std::string log_decimal(int digits = 12) const;
  std::string exact() const;

 private:
  Rational q0_ = 0, q1_ = 0;
  i64 s_ = 1;
};

struct ProperDivisor {
  AlgInt delta;
  i64 normSq = 0;
};

ProperDivisor max_proper_divisor(const Order& order);

// max(|delta|/8, (sqrt|D| - 2)/sqrt3); round_up gives the integer ceiling.
SurdValue lower_bound(const Order& order, bool round_up = false);
SurdValue upper_bound(const Order& order, i64 J);
SurdValue upper_bound(JacobsthalSolver& solver);
// max(|delta|, J*sqrt|D|) squared, and whether |delta| attains it strictly.
Rational scale_sq(const Order& order, i64 J);
bool delta_dominates(const Order& order, i64 J);

struct LowerWitness {
  FieldElem zeta;
  SurdValue bound;  // |delta|/8
  i64 p = 0;
  AlgInt pi;
  i64 a = 0;
};

// The non-singular point a*p/pi, defined when |delta| > 4 sqrt|D|.
std::optional<LowerWitness> lower_witness(const Order& order);

struct UncoveredCheck {
  bool uncovered = true;
  std::optional<std::pair<AlgInt, AlgInt>> counterexample;  // (lambda, mu)
};

// True when no coprime (lambda, mu) with 0 < N(mu) <= cap_sq has
// N(mu*zeta - lambda) < 1.
UncoveredCheck verify_uncovered(const Order& order, const FieldElem& zeta, i64 cap_sq);

// Checks that zeta6 = exp(i*pi/3) lies in no hemisphere other than those
// centred at 0 and 1 with N(mu) <= cap_sq (inclusive of the boundary).
UncoveredCheck verify_zeta6(const Order& order, i64 cap_sq);
// Integer part of ((sqrt|D| - 2)/sqrt3)^2.
i64 zeta6_cap(const Order& order);

struct BoundsReport {
  i64 disc = 0;
  i64 classNumber = 1;
  i64 deltaNormSq = 0;
  AlgInt delta;
  i64 J = 1;
  SurdValue lower;
  SurdValue upper;
  std::optional<i64> swanSq;

  bool consistent() const;
};

BoundsReport bounds_report(JacobsthalSolver& solver, std::optional<i64> swan_sq = {});

}  // namespace bianchi
