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

#include "bianchi/arith.hpp"

#include <algorithm>
#include <cmath>

namespace bianchi {

i64 gcd64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 isqrt(i64 n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  i64 r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<i128>(r) * r > n) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(i64 n) {
  if (n < 0) return false;
  i64 r = isqrt(n);
  return r * r == n;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (i64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> out;
  if (n < 0) n = -n;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_squarefree(i64 n) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
    if (n % d == 0) n /= d;
  }
  return true;
}

std::pair<i64, i64> square_split(i64 n) {
  if (n <= 0) throw std::domain_error("square_split needs n > 0");
  i64 k = 1, s = 1;
  for (i64 d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) k *= d;
    if (e % 2) s *= d;
  }
  s *= n;
  return {k, s};
}

i64 inverse_mod(i64 a, i64 m) {
  i64 old_r = mod_floor(a, m), cur_r = m;
  i64 old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    i64 q = old_r / cur_r;
    i64 t = old_r - q * cur_r;
    old_r = cur_r;
    cur_r = t;
    t = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = t;
  }
  if (old_r != 1) throw std::domain_error("not invertible");
  return mod_floor(old_s, m);
}

i64 pow_mod(i64 base, i64 exp, i64 mod) {
  i128 result = 1 % mod, b = mod_floor(base, mod);
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<i64>(result);
}

BigInt floor_of(const Rational& q) {
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  BigInt r = n / d;
  if (n % d != 0 && n < 0) r -= 1;
  return r;
}

BigInt ceil_of(const Rational& q) { return -floor_of(-q); }

Rational make_q(i64 num, i64 den) { return Rational(BigInt(num), BigInt(den)); }

i64 to_i64(const BigInt& x) {
  if (x > INT64_MAX || x < INT64_MIN)
    throw ArithmeticOverflow("big integer does not fit in 64 bits");
  return static_cast<i64>(x);
}

std::string to_string(i128 x) {
  if (x == 0) return "0";
  bool neg = x < 0;
  std::string s;
  while (x != 0) {
    int digit = static_cast<int>(x % 10);
    if (digit < 0) digit = -digit;
    s.push_back(static_cast<char>('0' + digit));
    x /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace bianchi
