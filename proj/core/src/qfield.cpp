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

#include "bianchi/qfield.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <sstream>

namespace bianchi {

bool is_fundamental(i64 d) {
  if (d >= 0) return false;
  if (mod_floor(d, 4) == 1) return is_squarefree(d);
  if (mod_floor(d, 4) != 0) return false;
  i64 m = d / 4;
  i64 r = mod_floor(m, 4);
  return (r == 2 || r == 3) && is_squarefree(m);
}

std::vector<i64> nearest_fundamental(i64 d) {
  std::vector<i64> out;
  for (i64 e = std::min<i64>(d - 1, -3); e > d - 1000; --e) {
    if (is_fundamental(e)) {
      out.push_back(e);
      break;
    }
  }
  for (i64 e = d + 1; e <= -3; ++e) {
    if (is_fundamental(e)) {
      out.push_back(e);
      break;
    }
  }
  return out;
}

std::vector<i64> fundamental_discriminants(i64 bound) {
  std::vector<i64> out;
  for (i64 n = 3; n < bound; ++n)
    if (is_fundamental(-n)) out.push_back(-n);
  return out;
}

Disc::Disc(i64 d) : d_(d) {
  if (!is_fundamental(d)) {
    std::ostringstream msg;
    msg << d << " is not a fundamental negative discriminant";
    auto near = nearest_fundamental(d);
    if (!near.empty()) {
      msg << " (nearest:";
      for (i64 e : near) msg << ' ' << e;
      msg << ')';
    }
    throw std::invalid_argument(msg.str());
  }
}

i64 delta_norm_sq(const Disc& d) {
  const i64 pmin = prime_factors(d.abs()).front();
  const i64 q = d.abs() / pmin;
  return std::max(checked_mul(q, q), d.abs());
}

bool operator<(const PlanePoint& x, const PlanePoint& y) {
  if (x.u != y.u) return x.u < y.u;
  return x.v < y.v;
}

namespace {

// Column-style Hermite reduction of integer vectors in Z^2, keeping the
// unimodular transform.  The result spans the same lattice as the input
// and reads Z*(A, 0) + Z*(B, C) with A, C > 0 and 0 <= B < A.
struct Hnf {
  i128 A = 0, B = 0, C = 0;
  std::vector<i128> coefA, coefB;
};

struct Column {
  i128 x, y;
  std::vector<i128> coef;
};

void axpy(Column& dst, i128 q, const Column& src) {
  dst.x -= q * src.x;
  dst.y -= q * src.y;
  for (size_t i = 0; i < dst.coef.size(); ++i) dst.coef[i] -= q * src.coef[i];
}

void negate(Column& c) {
  c.x = -c.x;
  c.y = -c.y;
  for (auto& k : c.coef) k = -k;
}

i128 abs128(i128 x) { return x < 0 ? -x : x; }

Hnf hermite(const std::vector<std::pair<i64, i64>>& gens) {
  std::vector<Column> cols;
  for (size_t i = 0; i < gens.size(); ++i) {
    Column c{gens[i].first, gens[i].second, std::vector<i128>(gens.size(), 0)};
    c.coef[i] = 1;
    cols.push_back(std::move(c));
  }
  auto pick = [&](auto key) {
    int best = -1;
    for (size_t i = 0; i < cols.size(); ++i) {
      i128 k = key(cols[i]);
      if (k == 0) continue;
      if (best < 0 || abs128(k) < abs128(key(cols[best]))) best = static_cast<int>(i);
    }
    return best;
  };
  auto gety = [](const Column& c) { return c.y; };
  auto getx = [](const Column& c) { return c.x; };

  int p;
  for (;;) {
    p = pick(gety);
    if (p < 0) throw std::invalid_argument("generators do not span a rank-2 lattice");
    bool done = true;
    for (size_t j = 0; j < cols.size(); ++j) {
      if (static_cast<int>(j) == p || cols[j].y == 0) continue;
      axpy(cols[j], floor_div128(cols[j].y, cols[p].y), cols[p]);
      if (cols[j].y != 0) done = false;
    }
    if (done) break;
  }
  Column second = cols[p];
  if (second.y < 0) negate(second);
  cols.erase(cols.begin() + p);

  int q;
  for (;;) {
    q = pick(getx);
    if (q < 0) throw std::invalid_argument("generators do not span a rank-2 lattice");
    bool done = true;
    for (size_t j = 0; j < cols.size(); ++j) {
      if (static_cast<int>(j) == q || cols[j].x == 0) continue;
      axpy(cols[j], floor_div128(cols[j].x, cols[q].x), cols[q]);
      if (cols[j].x != 0) done = false;
    }
    if (done) break;
  }
  Column first = cols[q];
  if (first.x < 0) negate(first);
  axpy(second, floor_div128(second.x, first.x), first);

  Hnf h;
  h.A = first.x;
  h.B = second.x;
  h.C = second.y;
  h.coefA = first.coef;
  h.coefB = second.coef;
  return h;
}

// Tonelli-Shanks square root of n modulo an odd prime p (n a residue).
i64 sqrt_mod(i64 n, i64 p) {
  n = mod_floor(n, p);
  if (n == 0) return 0;
  i64 q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  i64 z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  i64 m = s, c = pow_mod(z, q, p), t = pow_mod(n, q, p), r = pow_mod(n, (q + 1) / 2, p);
  while (t != 1) {
    i64 i = 0, tt = t;
    while (tt != 1) {
      tt = static_cast<i64>(static_cast<i128>(tt) * tt % p);
      ++i;
    }
    i64 b = c;
    for (i64 j = 0; j < m - i - 1; ++j) b = static_cast<i64>(static_cast<i128>(b) * b % p);
    m = i;
    c = static_cast<i64>(static_cast<i128>(b) * b % p);
    t = static_cast<i64>(static_cast<i128>(t) * c % p);
    r = static_cast<i64>(static_cast<i128>(r) * b % p);
  }
  return r;
}

bool canonical_sign(AlgInt x) { return x.a > 0 || (x.a == 0 && x.b > 0); }
AlgInt with_canonical_sign(AlgInt x) { return canonical_sign(x) ? x : -x; }

}  // namespace

Order::Order(Disc d) : disc_(d) {}

bool Order::is_valid(AlgInt x) const {
  return mod_floor(x.a - x.b * disc_.trace(), 2) == 0;
}

AlgInt Order::mul(AlgInt x, AlgInt y) const {
  i128 A = static_cast<i128>(x.a) * y.a + static_cast<i128>(disc_.value()) * x.b * y.b;
  i128 B = static_cast<i128>(x.a) * y.b + static_cast<i128>(x.b) * y.a;
  return {narrow(A / 2), narrow(B / 2)};
}

i64 Order::norm(AlgInt x) const {
  i128 n = static_cast<i128>(x.a) * x.a -
           static_cast<i128>(disc_.value()) * x.b * x.b;
  return narrow(n / 4);
}

std::optional<AlgInt> Order::div_exact(AlgInt x, AlgInt y) const {
  if (y.is_zero()) throw std::domain_error("division by zero");
  i64 n = norm(y);
  auto [z0, z1] = to_basis(mul(x, conj(y)));
  if (z0 % n != 0 || z1 % n != 0) return std::nullopt;
  return from_basis(z0 / n, z1 / n);
}

std::pair<i64, i64> Order::to_basis(AlgInt x) const {
  return {(x.a - x.b * disc_.trace()) / 2, x.b};
}

AlgInt Order::from_basis(i64 x0, i64 x1) const {
  return {narrow(2 * static_cast<i128>(x0) + x1 * disc_.trace()), x1};
}

ScaledIdeal Order::ideal_from_pair(AlgInt lambda, AlgInt mu) const {
  if (lambda.is_zero() && mu.is_zero())
    throw std::invalid_argument("ideal_from_pair: both generators are zero");
  const AlgInt w = omega();
  std::vector<std::pair<i64, i64>> gens = {to_basis(lambda), to_basis(mul(w, lambda)),
                                           to_basis(mu), to_basis(mul(w, mu))};
  Hnf h = hermite(gens);
  i64 A = narrow(h.A), B = narrow(h.B), C = narrow(h.C);
  ScaledIdeal out;
  out.content = C;
  out.ideal.a = A / C;
  out.ideal.b = mod_floor(2 * (B / C) + disc_.trace(), 2 * out.ideal.a);
  return out;
}

bool Order::is_coprime(AlgInt lambda, AlgInt mu) const {
  return ideal_from_pair(lambda, mu).norm() == 1;
}

bool Order::contains(const ScaledIdeal& I, AlgInt x) const {
  auto [x0, x1] = to_basis(x);
  if (x0 % I.content != 0 || x1 % I.content != 0) return false;
  x0 /= I.content;
  x1 /= I.content;
  i128 rest = static_cast<i128>(x0) - static_cast<i128>(x1) * ((I.ideal.b - disc_.trace()) / 2);
  return rest % I.ideal.a == 0;
}

std::pair<AlgInt, AlgInt> Order::basis_of(const Ideal& I) const {
  return {AlgInt{2 * I.a, 0}, AlgInt{I.b, 1}};
}

std::vector<AlgInt> Order::min_vectors(const Ideal& I) const {
  auto n4 = [&](AlgInt x) {
    return static_cast<i128>(x.a) * x.a - static_cast<i128>(disc_.value()) * x.b * x.b;
  };
  auto b4 = [&](AlgInt x, AlgInt y) {
    return static_cast<i128>(x.a) * y.a - static_cast<i128>(disc_.value()) * x.b * y.b;
  };
  auto [u, w] = basis_of(I);
  for (;;) {
    if (n4(w) < n4(u)) std::swap(u, w);
    i128 nu = n4(u);
    i128 k = floor_div128(2 * b4(u, w) + nu, 2 * nu);
    if (k == 0) break;
    w = {narrow(w.a - k * u.a), narrow(w.b - k * u.b)};
  }
  const i128 m = n4(u);
  std::vector<AlgInt> out;
  for (i64 x = -2; x <= 2; ++x) {
    for (i64 y = -2; y <= 2; ++y) {
      if (x == 0 && y == 0) continue;
      AlgInt v{narrow(static_cast<i128>(x) * u.a + static_cast<i128>(y) * w.a),
               narrow(static_cast<i128>(x) * u.b + static_cast<i128>(y) * w.b)};
      if (n4(v) == m && canonical_sign(v)) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AlgInt Order::min_vector(const Ideal& I) const { return min_vectors(I).front(); }

bool Order::is_principal(const Ideal& I) const { return norm(min_vector(I)) == I.a; }

std::optional<AlgInt> Order::principal_generator(const Ideal& I) const {
  AlgInt m = min_vector(I);
  if (norm(m) != I.a) return std::nullopt;
  return m;
}

int Order::kronecker(i64 p) const {
  const i64 d = disc_.value();
  if (p == 2) {
    if (d % 2 == 0) return 0;
    return mod_floor(d, 8) == 1 ? 1 : -1;
  }
  if (d % p == 0) return 0;
  return pow_mod(d, (p - 1) / 2, p) == 1 ? 1 : -1;
}

PrimeSplitting Order::prime_splitting(i64 p) const {
  if (!is_prime(p)) throw std::invalid_argument("prime_splitting: not a prime");
  PrimeSplitting out;
  out.p = p;
  int k = kronecker(p);
  out.kind = k == 0 ? Splitting::kRamified : (k > 0 ? Splitting::kSplit : Splitting::kInert);
  if (out.kind == Splitting::kInert) return out;
  if (p == 2) {
    out.primes = primitive_ideals_of_norm(2);
    return out;
  }
  // b^2 = D mod 4p with b = D mod 2, from a square root of D mod p.
  i64 r = sqrt_mod(disc_.value(), p);
  std::set<i64> bs;
  for (i64 root : {r, mod_floor(-r, p)}) {
    i64 b = mod_floor(root - disc_.trace(), 2) == 0 ? root : root + p;
    bs.insert(mod_floor(b, 2 * p));
  }
  for (i64 b : bs) out.primes.push_back(Ideal{p, b});
  return out;
}

bool Order::has_element_of_norm(i64 n) const {
  const i64 D = abs_disc();
  const i128 target = 4 * static_cast<i128>(n);
  for (i64 b = 0; static_cast<i128>(D) * b * b <= target; ++b) {
    i64 rest = narrow(target - static_cast<i128>(D) * b * b);
    if (!is_square(rest)) continue;
    i64 a = isqrt(rest);
    if (is_valid(AlgInt{a, b})) return true;
  }
  return false;
}

ReducedForm Order::reduced_form(const Ideal& I) const {
  i64 a = I.a, b = I.b;
  i64 c = narrow((static_cast<i128>(b) * b - disc_.value()) / (4 * static_cast<i128>(a)));
  auto normalize = [&] {
    if (b > -a && b <= a) return;
    i64 k = floor_div(a - b, 2 * a);
    i64 nb = b + 2 * a * k;
    c = narrow((static_cast<i128>(nb) * nb - disc_.value()) / (4 * static_cast<i128>(a)));
    b = nb;
  };
  normalize();
  while (a > c) {
    std::swap(a, c);
    b = -b;
    normalize();
  }
  if (a == c && b < 0) b = -b;
  return {a, b, c};
}

std::vector<ReducedForm> Order::class_forms() const {
  std::vector<ReducedForm> out;
  const i64 D = abs_disc();
  for (i64 a = 1; 3 * a * a <= D; ++a) {
    for (i64 b = -a + 1; b <= a; ++b) {
      if (mod_floor(b - disc_.trace(), 2) != 0) continue;
      i64 num = b * b + D;
      if (num % (4 * a) != 0) continue;
      i64 c = num / (4 * a);
      if (c < a) continue;
      if ((a == c || b == a) && b < 0) continue;
      if (gcd64(gcd64(a, b), c) != 1) continue;
      out.push_back({a, b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ideal> Order::primitive_ideals_of_norm(i64 n) const {
  std::vector<Ideal> out;
  for (i64 b = 0; b < 2 * n; ++b) {
    i128 num = static_cast<i128>(b) * b - disc_.value();
    if (num % (4 * static_cast<i128>(n)) == 0) out.push_back({n, b});
  }
  return out;
}

FieldElem Order::make_elem(AlgInt num, i64 den) const {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  auto [x0, x1] = to_basis(num);
  i64 g = gcd64(gcd64(x0, x1), den);
  if (g > 1) num = from_basis(x0 / g, x1 / g);
  return {num, den / g};
}

FieldElem Order::divide(AlgInt num, AlgInt den) const {
  return make_elem(mul(num, conj(den)), norm(den));
}

PlanePoint Order::to_plane(const FieldElem& z) const {
  return {make_q(z.num.a, 2 * z.den), make_q(z.num.b, 2 * z.den)};
}

std::pair<Rational, Rational> Order::plane_to_basis(const PlanePoint& p) const {
  return {p.u - p.v * disc_.trace(), 2 * p.v};
}

PlanePoint Order::basis_to_plane(const Rational& x, const Rational& y) const {
  return {x + y * disc_.trace() / 2, y / 2};
}

AlgInt Order::translation_to_canonical(const PlanePoint& p) const {
  auto [x, y] = plane_to_basis(p);
  const Rational half = make_q(1, 2);
  return from_basis(to_i64(floor_of(x + half)), to_i64(floor_of(y + half)));
}

PlanePoint Order::canonical_point(const PlanePoint& p) const {
  auto [x, y] = plane_to_basis(p);
  const Rational half = make_q(1, 2);
  x -= Rational(floor_of(x + half));
  y -= Rational(floor_of(y + half));
  return basis_to_plane(x, y);
}

FieldElem Order::canonical(const FieldElem& z) const {
  AlgInt t = translation_to_canonical(to_plane(z));
  AlgInt scaled{checked_mul(t.a, z.den), checked_mul(t.b, z.den)};
  return make_elem(z.num - scaled, z.den);
}

Rational Order::abs_sq(const PlanePoint& p) const {
  return p.u * p.u + p.v * p.v * abs_disc();
}

std::vector<FieldElem> Order::singular_points() const {
  std::set<FieldElem> found, rejected;
  for (const ReducedForm& f : class_forms()) {
    if (f.a == 1) continue;  // principal class
    for (const Ideal& I : primitive_ideals_of_norm(f.a)) {
      if (reduced_form(I) != f) continue;
      const ScaledIdeal target{I, 1};
      auto [e1, e2] = basis_of(I);
      for (AlgInt beta : min_vectors(I)) {
        const i64 K = norm(beta);
        for (i64 x = 0; x < K; ++x) {
          for (i64 y = 0; y < K; ++y) {
            AlgInt alpha{x * e1.a + y * e2.a, x * e1.b + y * e2.b};
            if (alpha.is_zero()) continue;
            FieldElem z = canonical(divide(alpha, beta));
            if (found.count(z) || rejected.count(z)) continue;
            if (ideal_from_pair(alpha, beta) == target)
              found.insert(z);
            else
              rejected.insert(z);
          }
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

bool Order::is_singular(const FieldElem& z) const {
  ScaledIdeal I = ideal_from_pair(z.num, AlgInt::integer(z.den));
  if (is_principal(I.ideal)) return false;
  i128 m = static_cast<i128>(norm(min_vector(I.ideal))) * I.content * I.content;
  return m >= static_cast<i128>(z.den) * z.den;
}

std::pair<AlgInt, AlgInt> Order::bezout_solve(AlgInt lambda, AlgInt mu) const {
  if (mu.is_zero()) throw std::invalid_argument("bezout_solve: mu is zero");
  const AlgInt w = omega();
  std::vector<std::pair<i64, i64>> gens = {to_basis(lambda), to_basis(mul(w, lambda)),
                                           to_basis(-mu), to_basis(-mul(w, mu))};
  Hnf h = hermite(gens);
  if (h.A != 1 || h.C != 1) throw std::invalid_argument("bezout_solve: pair is not coprime");
  AlgInt beta = from_basis(narrow(h.coefA[0]), narrow(h.coefA[1]));
  beta = reduce_mod(beta, mu);
  auto alpha = div_exact(mul(beta, lambda) - AlgInt::integer(1), mu);
  if (!alpha) throw std::logic_error("bezout_solve: inexact division");
  return {*alpha, beta};
}

AlgInt Order::reduce_mod(AlgInt x, AlgInt m) const {
  if (m.is_zero()) throw std::domain_error("reduce_mod by zero");
  PlanePoint q = to_plane(divide(x, m));
  Rational r2 = 1 + make_q(1 + abs_disc(), 4);
  AlgInt best = x;
  i64 best_norm = norm(x);
  bool first = true;
  for (AlgInt k : nearby(q, r2)) {
    AlgInt cand = x - mul(k, m);
    i64 n = norm(cand);
    if (first || n < best_norm || (n == best_norm && cand < best)) {
      best = cand;
      best_norm = n;
      first = false;
    }
  }
  return best;
}

std::vector<AlgInt> Order::elements_up_to_norm(i64 max_norm) const {
  std::vector<std::pair<i64, AlgInt>> tmp;
  const i64 D = abs_disc();
  const i128 four_m = 4 * static_cast<i128>(max_norm);
  const i64 bmax = isqrt(narrow(four_m / D));
  for (i64 b = -bmax; b <= bmax; ++b) {
    i128 rest = four_m - static_cast<i128>(D) * b * b;
    if (rest < 0) continue;
    i64 amax = isqrt(narrow(rest));
    for (i64 a = 0; a <= amax; ++a) {
      AlgInt x{a, b};
      if (!canonical_sign(x) || !is_valid(x)) continue;
      tmp.push_back({norm(x), x});
    }
  }
  std::sort(tmp.begin(), tmp.end());
  std::vector<AlgInt> out;
  out.reserve(tmp.size());
  for (auto& [n, x] : tmp) out.push_back(x);
  return out;
}

std::vector<AlgInt> Order::nearby(const PlanePoint& w, const Rational& radius_sq,
                                  bool inclusive) const {
  std::vector<AlgInt> out;
  const i64 D = abs_disc();
  const double r = std::sqrt(static_cast<double>(radius_sq));
  const double wu = static_cast<double>(w.u), wv = static_cast<double>(w.v);
  const double span_v = 2.0 * r / std::sqrt(static_cast<double>(D));
  const i64 qlo = static_cast<i64>(std::floor(2 * wv - span_v)) - 1;
  const i64 qhi = static_cast<i64>(std::ceil(2 * wv + span_v)) + 1;
  for (i64 q = qlo; q <= qhi; ++q) {
    double dv = wv - q / 2.0;
    double rest = static_cast<double>(radius_sq) - D * dv * dv;
    double span_u = rest > 0 ? 2.0 * std::sqrt(rest) : 0.0;
    i64 plo = static_cast<i64>(std::floor(2 * wu - span_u)) - 1;
    i64 phi = static_cast<i64>(std::ceil(2 * wu + span_u)) + 1;
    for (i64 p = plo; p <= phi; ++p) {
      AlgInt lam{p, q};
      if (!is_valid(lam)) continue;
      Rational du = w.u - make_q(p, 2), ddv = w.v - make_q(q, 2);
      Rational d2 = du * du + ddv * ddv * D;
      if (d2 < radius_sq || (inclusive && d2 == radius_sq)) out.push_back(lam);
    }
  }
  return out;
}

PlanePoint Order::mul_point(AlgInt x, const PlanePoint& p) const {
  Rational xu = make_q(x.a, 2), xv = make_q(x.b, 2);
  return {xu * p.u + xv * p.v * disc_.value(), xu * p.v + xv * p.u};
}

Mat2 Order::mat_mul(const Mat2& x, const Mat2& y) const {
  return {mul(x.a, y.a) + mul(x.b, y.c), mul(x.a, y.b) + mul(x.b, y.d),
          mul(x.c, y.a) + mul(x.d, y.c), mul(x.c, y.b) + mul(x.d, y.d)};
}

AlgInt Order::det(const Mat2& m) const { return mul(m.a, m.d) - mul(m.b, m.c); }

std::string to_string(const Disc& d) { return std::to_string(d.value()); }

std::string to_string(const Rational& q) {
  std::ostringstream s;
  s << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) s << '/' << boost::multiprecision::denominator(q);
  return s.str();
}

namespace {

// Renders (a + b*sqrt(D))/den after cancelling common factors.
std::string render(i64 D, i64 a, i64 b, i64 den) {
  i64 g = gcd64(gcd64(a, b), den);
  if (g > 1) {
    a /= g;
    b /= g;
    den /= g;
  }
  const std::string root = "sqrt(" + std::to_string(D) + ")";
  std::string body;
  if (b == 0) {
    body = std::to_string(a);
  } else {
    std::string surd = (b == 1 ? "" : b == -1 ? "-" : std::to_string(b) + "*") + root;
    if (a == 0) {
      body = surd;
    } else {
      body = std::to_string(a) + (b > 0 ? "+" : "") + surd;
    }
  }
  if (den == 1) return body;
  bool compound = (a != 0 && b != 0) || body.find('*') != std::string::npos;
  return (compound ? "(" + body + ")" : body) + "/" + std::to_string(den);
}

}  // namespace

std::string to_string(const Order& o, AlgInt x) {
  return render(o.disc().value(), x.a, x.b, 2);
}

std::string to_string(const Order& o, const FieldElem& z) {
  return render(o.disc().value(), z.num.a, z.num.b, checked_mul(2, z.den));
}

}  // namespace bianchi
