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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bianchi {

using i64 = std::int64_t;
using i128 = __int128;

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// Fixed width with overflow checks: used by the envelope predicates, where
// every quantity has a provable bit bound and a silent wrap would be fatal.
using Int256 = boost::multiprecision::checked_int256_t;

class ArithmeticOverflow : public std::overflow_error {
 public:
  explicit ArithmeticOverflow(const std::string& what)
      : std::overflow_error(what) {}
};

inline i64 narrow(i128 x) {
  if (x > static_cast<i128>(INT64_MAX) || x < static_cast<i128>(INT64_MIN))
    throw ArithmeticOverflow("value does not fit in 64 bits");
  return static_cast<i64>(x);
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("i64 mul");
  return r;
}

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("i64 add");
  return r;
}

// Floor division and the matching nonnegative remainder.
inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline i64 mod_floor(i64 a, i64 b) { return a - floor_div(a, b) * b; }

inline i128 floor_div128(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 gcd64(i64 a, i64 b);
i128 gcd128(i128 a, i128 b);
i64 isqrt(i64 n);
bool is_square(i64 n);
bool is_prime(i64 n);
// Distinct prime factors in increasing order.
std::vector<i64> prime_factors(i64 n);
bool is_squarefree(i64 n);
// n = k^2 * s with s squarefree; returns {k, s}.
std::pair<i64, i64> square_split(i64 n);
// Modular inverse of a modulo m (m > 1, gcd(a, m) = 1), in [0, m).
i64 inverse_mod(i64 a, i64 m);
i64 pow_mod(i64 base, i64 exp, i64 mod);

BigInt floor_of(const Rational& q);
BigInt ceil_of(const Rational& q);
Rational make_q(i64 num, i64 den = 1);
i64 to_i64(const BigInt& x);

std::string to_string(i128 x);

}  // namespace bianchi
