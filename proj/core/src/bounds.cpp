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

#include "bianchi/bounds.hpp"

#include <cmath>
#include <sstream>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace bianchi {

namespace {

using Dec = boost::multiprecision::cpp_dec_float_50;

int sgn(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Sign of p + q*sqrt(r), r >= 0.
int sign2(const Rational& p, const Rational& q, i64 r) {
  const int sp = sgn(p), sq = (r == 0) ? 0 : sgn(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  const Rational lhs = p * p, rhs = q * q * r;
  if (lhs > rhs) return sp;
  if (lhs < rhs) return sq;
  return 0;
}

Dec to_dec(const Rational& q) {
  return Dec(boost::multiprecision::numerator(q)) / Dec(boost::multiprecision::denominator(q));
}

}  // namespace

int surd_sign(const Rational& c, const Rational& x, i64 s, const Rational& y, i64 t) {
  if (s == t) return sign2(c, x + y, s);
  if (x == 0 || s == 0) return sign2(c, y, t);
  if (y == 0 || t == 0) return sign2(c, x, s);
  const int sa = sgn(c);
  int sb;
  {
    const int sx = sgn(x), sy = sgn(y);
    if (sx == sy) {
      sb = sx;
    } else {
      const Rational lx = x * x * s, ly = y * y * t;
      sb = lx > ly ? sx : (lx < ly ? sy : 0);
    }
  }
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // Opposite signs: compare c^2 with (x sqrt s + y sqrt t)^2.
  const int d = sign2(c * c - x * x * s - y * y * t, -2 * x * y, checked_mul(s, t));
  return d > 0 ? sa : (d < 0 ? sb : 0);
}

SurdValue::SurdValue(Rational q0, Rational q1, i64 s) : q0_(std::move(q0)), q1_(std::move(q1)), s_(s) {
  if (s_ < 0) throw std::invalid_argument("SurdValue: negative inner radicand");
  if (s_ == 0) {
    q1_ = 0;
    s_ = 1;
  }
  if (q1_ != 0) {
    auto [k, sf] = square_split(s_);
    q1_ *= k;
    s_ = sf;
  }
  if (s_ == 1) {
    q0_ += q1_;
    q1_ = 0;
  }
  if (q1_ == 0) s_ = 1;
  if (sign2(q0_, q1_, s_) < 0) throw std::invalid_argument("SurdValue: negative radicand");
}

SurdValue SurdValue::from_rational(const Rational& r) {
  if (r < 0) throw std::invalid_argument("SurdValue: negative value");
  return SurdValue(r * r, 0, 1);
}

SurdValue SurdValue::sqrt_of(const Rational& r) { return SurdValue(r, 0, 1); }

int SurdValue::compare(const SurdValue& o) const {
  return surd_sign(q0_ - o.q0_, q1_, s_, -o.q1_, o.s_);
}

int SurdValue::compare_square(const Rational& r) const { return sign2(q0_ - r, q1_, s_); }

i64 SurdValue::ceil() const {
  i64 k = std::max<i64>(0, static_cast<i64>(std::floor(to_double())) - 2);
  while (compare_square(Rational(k) * k) > 0) ++k;
  return k;
}

i64 SurdValue::floor_square() const {
  const double sq = to_double() * to_double();
  i64 k = std::max<i64>(0, static_cast<i64>(std::floor(sq)) - 2);
  while (compare_square(Rational(k + 1)) >= 0) ++k;
  return k;
}

double SurdValue::to_double() const {
  Dec inner = to_dec(q0_) + to_dec(q1_) * boost::multiprecision::sqrt(Dec(s_));
  if (inner < 0) inner = 0;
  return static_cast<double>(boost::multiprecision::sqrt(inner));
}

std::string SurdValue::decimal(int digits) const {
  Dec inner = to_dec(q0_) + to_dec(q1_) * boost::multiprecision::sqrt(Dec(s_));
  if (inner <= 0) return "0";
  return Dec(boost::multiprecision::sqrt(inner)).str(digits);
}

std::string SurdValue::log_decimal(int digits) const {
  Dec inner = to_dec(q0_) + to_dec(q1_) * boost::multiprecision::sqrt(Dec(s_));
  if (inner <= 0) return "";
  return Dec(boost::multiprecision::log(inner) / 2).str(digits);
}

std::string SurdValue::exact() const {
  std::ostringstream out;
  out << "sqrt(" << to_string(q0_);
  if (q1_ != 0) out << (q1_ > 0 ? "+" : "") << to_string(q1_) << "*sqrt(" << s_ << ")";
  out << ")";
  return out.str();
}

ProperDivisor max_proper_divisor(const Order& order) {
  const i64 D = order.abs_disc();
  const i64 pmin = prime_factors(D).front();
  const i64 q = order.disc().value() / pmin;
  ProperDivisor rational{AlgInt::integer(q), checked_mul(q, q)};
  ProperDivisor root{AlgInt{0, 2}, D};
  return rational.normSq >= root.normSq ? rational : root;
}

SurdValue lower_bound(const Order& order, bool round_up) {
  const i64 D = order.abs_disc();
  SurdValue best(Rational(max_proper_divisor(order).normSq) / 64, 0, 1);
  if (D > 4) {
    SurdValue hex(Rational(D + 4) / 3, Rational(-4) / 3, D);
    if (best < hex) best = hex;
  }
  if (round_up) return SurdValue::from_rational(Rational(best.ceil()));
  return best;
}

Rational scale_sq(const Order& order, i64 J) {
  const i64 dsq = max_proper_divisor(order).normSq;
  return Rational(std::max(dsq, checked_mul(checked_mul(J, J), order.abs_disc())));
}

bool delta_dominates(const Order& order, i64 J) {
  return max_proper_divisor(order).normSq > checked_mul(checked_mul(J, J), order.abs_disc());
}

SurdValue upper_bound(const Order& order, i64 J) {
  return SurdValue(Rational(196) * J * J * scale_sq(order, J), 0, 1);
}

SurdValue upper_bound(JacobsthalSolver& solver) {
  return upper_bound(solver.order(), solver.theorem_J());
}

std::optional<LowerWitness> lower_witness(const Order& order) {
  const i64 D = order.abs_disc();
  const ProperDivisor div = max_proper_divisor(order);
  if (div.normSq <= 16 * D) return std::nullopt;
  const i64 p = prime_factors(D).front();
  std::optional<AlgInt> pi;
  for (AlgInt cand : {AlgInt{0, -1}, AlgInt{p, -1}}) {
    if (!order.is_valid(cand)) continue;
    const i64 n = order.norm(cand);
    if (n % p == 0 && n % (p * p) != 0) {
      pi = cand;
      break;
    }
  }
  if (!pi) throw std::logic_error("lower_witness: no admissible pi");
  const i64 m = order.norm(*pi) / p;
  LowerWitness w;
  w.p = p;
  w.pi = *pi;
  w.a = m == 1 ? 0 : inverse_mod(p, m);
  w.zeta = order.make_elem(order.mul(AlgInt::integer(w.a * p), Order::conj(*pi)), order.norm(*pi));
  w.bound = SurdValue(Rational(div.normSq) / 64, 0, 1);
  return w;
}

UncoveredCheck verify_uncovered(const Order& order, const FieldElem& zeta, i64 cap_sq) {
  UncoveredCheck out;
  for (AlgInt mu : order.elements_up_to_norm(cap_sq)) {
    const FieldElem w = order.make_elem(order.mul(mu, zeta.num), zeta.den);
    for (AlgInt lambda : order.nearby(order.to_plane(w), Rational(1))) {
      if (order.is_coprime(lambda, mu)) {
        out.uncovered = false;
        out.counterexample = std::make_pair(lambda, mu);
        return out;
      }
    }
  }
  return out;
}

i64 zeta6_cap(const Order& order) {
  const i64 D = order.abs_disc();
  if (D <= 4) return 0;
  return SurdValue(Rational(D + 4) / 3, Rational(-4) / 3, D).floor_square();
}

UncoveredCheck verify_zeta6(const Order& order, i64 cap_sq) {
  UncoveredCheck out;
  const i64 D = order.abs_disc();
  // zeta6 = 1/2 + (sqrt3/2) i, i.e. v = sqrt(3/D)/2 in plane coordinates.
  const double v6 = std::sqrt(3.0 / static_cast<double>(D)) / 2.0;
  const PlanePoint approx{make_q(1, 2), Rational(static_cast<i64>(std::llround(v6 * 1e15)), i64{1'000'000'000'000'000})};
  for (AlgInt mu : order.elements_up_to_norm(cap_sq)) {
    const PlanePoint w = order.mul_point(mu, approx);
    for (AlgInt lambda : order.nearby(w, Rational(101, 100), true)) {
      // |mu*zeta6 - lambda|^2 = q0 + q1*sqrt(3D) with
      // mu = (a + b sqrt D)/2 and lambda = (c + e sqrt D)/2.
      const Rational a = mu.a, b = mu.b, c = lambda.a, e = lambda.b;
      const Rational re = a / 4 - c / 2, im = b / 4 - e / 2;
      const Rational q0 = re * re + 3 * D * b * b / 16 + 3 * a * a / 16 + D * im * im;
      const Rational q1 = -re * b / 2 + a * im / 2;
      if (sign2(q0 - 1, q1, 3 * D) > 0) continue;
      if (lambda.is_zero() || lambda == mu) continue;
      if (!order.is_coprime(lambda, mu)) continue;
      out.uncovered = false;
      out.counterexample = std::make_pair(lambda, mu);
      return out;
    }
  }
  return out;
}

bool BoundsReport::consistent() const {
  if (!(lower < upper)) return false;
  if (swanSq) {
    if (lower.compare_square(Rational(*swanSq)) >= 0) return false;
    if (upper.compare_square(Rational(*swanSq)) <= 0) return false;
  }
  return true;
}

BoundsReport bounds_report(JacobsthalSolver& solver, std::optional<i64> swan_sq) {
  const Order& order = solver.order();
  BoundsReport r;
  r.disc = order.disc().value();
  r.classNumber = order.class_number();
  const ProperDivisor div = max_proper_divisor(order);
  r.deltaNormSq = div.normSq;
  r.delta = div.delta;
  r.J = solver.theorem_J();
  r.lower = lower_bound(order);
  r.upper = upper_bound(order, r.J);
  r.swanSq = swan_sq;
  return r;
}

}  // namespace bianchi
