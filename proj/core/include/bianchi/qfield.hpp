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

// Arithmetic in the maximal order O of an imaginary quadratic field.
//
// Elements are written (a + b*sqrt(D))/2 with a = b*D (mod 2).  Internally a
// second coordinate system is used for lattice work: x = x0 + x1*w where
// w = (t + sqrt(D))/2 and t = D mod 2, so that O = Z + Z*w.

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bianchi/arith.hpp"

namespace bianchi {

bool is_fundamental(i64 d);
// Closest fundamental negative discriminants to d (below and above).
std::vector<i64> nearest_fundamental(i64 d);
// All fundamental discriminants D with |D| < bound, ordered by |D|.
std::vector<i64> fundamental_discriminants(i64 bound);

class Disc {
 public:
  explicit Disc(i64 d);

  i64 value() const { return d_; }
  i64 abs() const { return -d_; }
  // 0 when D = 0 mod 4, 1 when D = 1 mod 4.
  int trace() const { return static_cast<int>(d_ & 1); }

  friend bool operator==(const Disc&, const Disc&) = default;

 private:
  i64 d_;
};

struct AlgInt {
  i64 a = 0;
  i64 b = 0;

  static AlgInt integer(i64 n) { return {checked_mul(2, n), 0}; }
  bool is_zero() const { return a == 0 && b == 0; }

  friend auto operator<=>(const AlgInt&, const AlgInt&) = default;
  friend AlgInt operator+(AlgInt x, AlgInt y) {
    return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
  }
  friend AlgInt operator-(AlgInt x, AlgInt y) {
    return {checked_add(x.a, -y.a), checked_add(x.b, -y.b)};
  }
  friend AlgInt operator-(AlgInt x) { return {-x.a, -x.b}; }
};

// num/den with den > 0 and no integer > 1 dividing both den and num in O.
struct FieldElem {
  AlgInt num;
  i64 den = 1;
  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

// The primitive ideal Z*a + Z*(b + sqrt(D))/2 with 0 <= b < 2a.
struct Ideal {
  i64 a = 1;
  i64 b = 0;
  friend auto operator<=>(const Ideal&, const Ideal&) = default;
};

// content * Ideal; content is a positive integer for integral ideals.
struct ScaledIdeal {
  Ideal ideal;
  i64 content = 1;
  i64 norm() const { return checked_mul(checked_mul(content, content), ideal.a); }
  friend auto operator<=>(const ScaledIdeal&, const ScaledIdeal&) = default;
};

// u + v*sqrt(|D|)*i.  Note: v is the coefficient of sqrt(D) as well.
struct PlanePoint {
  Rational u;
  Rational v;
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};
bool operator<(const PlanePoint& x, const PlanePoint& y);

enum class Splitting { kSplit, kInert, kRamified };

struct PrimeSplitting {
  i64 p = 0;
  Splitting kind = Splitting::kInert;
  std::vector<Ideal> primes;  // empty when inert
};

struct ReducedForm {
  i64 a = 1, b = 1, c = 1;
  friend auto operator<=>(const ReducedForm&, const ReducedForm&) = default;
};

// [[a, b], [c, d]] with entries in O.
struct Mat2 {
  AlgInt a, b, c, d;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

class Order;

// |delta|^2 for a proper divisor delta of D of maximal norm, taken over the
// divisors Q/p (p a rational prime dividing D) and sqrt(D).
i64 delta_norm_sq(const Disc& d);

class Order {
 public:
  explicit Order(Disc d);

  const Disc& disc() const { return disc_; }
  i64 abs_disc() const { return disc_.abs(); }

  bool is_valid(AlgInt x) const;
  AlgInt mul(AlgInt x, AlgInt y) const;
  i64 norm(AlgInt x) const;
  static AlgInt conj(AlgInt x) { return {x.a, -x.b}; }
  AlgInt omega() const { return {disc_.trace(), 1}; }
  // x / y when the quotient lies in O.
  std::optional<AlgInt> div_exact(AlgInt x, AlgInt y) const;

  std::pair<i64, i64> to_basis(AlgInt x) const;
  AlgInt from_basis(i64 x0, i64 x1) const;

  ScaledIdeal ideal_from_pair(AlgInt lambda, AlgInt mu) const;
  bool is_coprime(AlgInt lambda, AlgInt mu) const;
  bool contains(const ScaledIdeal& ideal, AlgInt x) const;
  std::pair<AlgInt, AlgInt> basis_of(const Ideal& ideal) const;

  AlgInt min_vector(const Ideal& ideal) const;
  // Every element of minimal norm, one per sign class, lexicographic.
  std::vector<AlgInt> min_vectors(const Ideal& ideal) const;
  bool is_principal(const Ideal& ideal) const;
  std::optional<AlgInt> principal_generator(const Ideal& ideal) const;

  int kronecker(i64 p) const;
  PrimeSplitting prime_splitting(i64 p) const;
  // True when some element of O has norm n.
  bool has_element_of_norm(i64 n) const;

  ReducedForm reduced_form(const Ideal& ideal) const;
  std::vector<ReducedForm> class_forms() const;
  i64 class_number() const { return static_cast<i64>(class_forms().size()); }
  std::vector<Ideal> primitive_ideals_of_norm(i64 n) const;

  FieldElem make_elem(AlgInt num, i64 den) const;
  FieldElem make_elem(AlgInt x) const { return make_elem(x, 1); }
  FieldElem divide(AlgInt num, AlgInt den) const;
  PlanePoint to_plane(const FieldElem& z) const;
  // Coordinates (x, y) of a plane point in the basis (1, w).
  std::pair<Rational, Rational> plane_to_basis(const PlanePoint& p) const;
  PlanePoint basis_to_plane(const Rational& x, const Rational& y) const;
  // Representative of p modulo O in F = {x + y*w : x, y in [-1/2, 1/2)}.
  PlanePoint canonical_point(const PlanePoint& p) const;
  // The element t of O with p - t in F.
  AlgInt translation_to_canonical(const PlanePoint& p) const;
  FieldElem canonical(const FieldElem& z) const;
  Rational abs_sq(const PlanePoint& p) const;

  std::vector<FieldElem> singular_points() const;
  bool is_singular(const FieldElem& z) const;

  // beta*lambda - alpha*mu = 1 with beta reduced modulo mu; returns (alpha, beta).
  std::pair<AlgInt, AlgInt> bezout_solve(AlgInt lambda, AlgInt mu) const;
  // x - k*m of minimal norm over k in O, ties broken by lexicographic (a, b).
  AlgInt reduce_mod(AlgInt x, AlgInt m) const;

  // Nonzero elements of norm <= max_norm, one per sign class, ordered by
  // (norm, a, b).  The sign class representative has a > 0, or a = 0, b > 0.
  std::vector<AlgInt> elements_up_to_norm(i64 max_norm) const;
  // All lambda in O with |w - lambda|^2 < radius_sq (or <= when inclusive).
  std::vector<AlgInt> nearby(const PlanePoint& w, const Rational& radius_sq,
                             bool inclusive = false) const;
  PlanePoint mul_point(AlgInt x, const PlanePoint& p) const;

  Mat2 mat_mul(const Mat2& x, const Mat2& y) const;
  AlgInt det(const Mat2& m) const;

 private:
  Disc disc_;
};

std::string to_string(const Disc& d);
// Human-readable "(a+b*sqrt(D))/2" style rendering, reduced where possible.
std::string to_string(const Order& o, AlgInt x);
std::string to_string(const Order& o, const FieldElem& z);
std::string to_string(const Rational& q);

}  // namespace bianchi
