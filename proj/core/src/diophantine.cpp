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

#include "bianchi/diophantine.hpp"

#include <cmath>

namespace bianchi {

CFState cf_expand(const Rational& z, int max_steps) {
  if (max_steps < 1) throw std::invalid_argument("cf_expand: max_steps < 1");
  CFState st;
  st.z_ = z;
  st.p_ = {0, 1};
  st.q_ = {1, 0};
  Rational tail = z;
  for (int n = 0; n < max_steps; ++n) {
    st.tails_.push_back(tail);
    BigInt a = floor_of(tail);
    st.quotients_.push_back(a);
    st.p_.push_back(a * st.p_[st.p_.size() - 1] + st.p_[st.p_.size() - 2]);
    st.q_.push_back(a * st.q_[st.q_.size() - 1] + st.q_[st.q_.size() - 2]);
    Rational frac = tail - Rational(a);
    if (frac == 0) {
      st.terminated_ = true;
      break;
    }
    tail = 1 / frac;
  }
  return st;
}

ConvergentHit first_convergent_below(const Rational& z, const Rational& eps) {
  if (eps <= 0 || eps > 1) throw std::invalid_argument("first_convergent_below: need 0 < eps <= 1");
  CFState st = cf_expand(z);
  auto err = [&](int n) {
    Rational e = Rational(st.q(n)) * z - Rational(st.p(n));
    return e < 0 ? Rational(-e) : e;
  };
  for (int n = 1; n <= st.last_index(); ++n) {
    if (err(n) < eps) {
      ConvergentHit hit;
      hit.p = st.p(n);
      hit.q = st.q(n);
      hit.index = n;
      if (n >= 2) {
        const Rational prev = err(n - 1);
        hit.denominatorBound = prev > 0 && Rational(st.q(n)) * prev < 1;
        hit.minimalityBound = prev >= eps;
      }
      return hit;
    }
  }
  throw std::logic_error("first_convergent_below: expansion ended without a hit");
}

std::optional<std::pair<AlgInt, AlgInt>> dirichlet_pair(const Order& order,
                                                        const FieldElem& zeta,
                                                        const Rational& r_sq) {
  if (r_sq <= 0) throw std::invalid_argument("dirichlet_pair: r_sq must be positive");
  const i64 D = order.abs_disc();
  // N(mu*zeta - lambda) < D/(2 r_sq)  <=>  2 r_sq N(mu*num - den*lambda) < D den^2.
  const Rational bound = Rational(D) / (2 * r_sq);
  const i64 max_norm = to_i64(ceil_of(r_sq)) - 1;
  const Rational threshold = bound * Rational(zeta.den) * zeta.den;
  for (AlgInt mu : order.elements_up_to_norm(max_norm)) {
    const AlgInt w = order.mul(mu, zeta.num);
    // Candidate lambda near w/den, found in floating point with slack and
    // then confirmed exactly.
    const double D2 = static_cast<double>(D);
    const double cu = w.a / (2.0 * zeta.den), cv = w.b / (2.0 * zeta.den);
    const double r = std::sqrt(static_cast<double>(bound)) + 1e-9;
    const i64 qlo = static_cast<i64>(std::floor(2 * (cv - r / std::sqrt(D2)))) - 1;
    const i64 qhi = static_cast<i64>(std::ceil(2 * (cv + r / std::sqrt(D2)))) + 1;
    for (i64 q = qlo; q <= qhi; ++q) {
      const i64 plo = static_cast<i64>(std::floor(2 * (cu - r))) - 1;
      const i64 phi = static_cast<i64>(std::ceil(2 * (cu + r))) + 1;
      for (i64 p = plo; p <= phi; ++p) {
        AlgInt lambda{p, q};
        if (!order.is_valid(lambda)) continue;
        AlgInt diff = w - AlgInt{checked_mul(zeta.den, p), checked_mul(zeta.den, q)};
        if (Rational(order.norm(diff)) < threshold) return std::make_pair(lambda, mu);
      }
    }
  }
  return std::nullopt;
}

}  // namespace bianchi
