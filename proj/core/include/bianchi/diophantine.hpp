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
#include <vector>

#include "bianchi/qfield.hpp"

namespace bianchi {

// Regular continued fraction of a rational z, indexed from n = -1:
//   p(-1) = 0, q(-1) = 1, p(0) = 1, q(0) = 0,
//   p(n+1) = floor(z_n) p(n) + p(n-1), likewise for q,
//   z_0 = z, z_{n+1} = 1 / (z_n - floor(z_n)).
class CFState {
 public:
  const std::vector<BigInt>& quotients() const { return quotients_; }
  // Convergent indices run from -1 to last_index().
  int last_index() const { return static_cast<int>(p_.size()) - 2; }
  const BigInt& p(int n) const { return p_.at(n + 1); }
  const BigInt& q(int n) const { return q_.at(n + 1); }
  // Tails z_0 .. z_k; tail(n) exists for n < number of quotients.
  const Rational& tail(int n) const { return tails_.at(n); }
  int tail_count() const { return static_cast<int>(tails_.size()); }
  bool terminated() const { return terminated_; }
  const Rational& value() const { return z_; }

 private:
  friend CFState cf_expand(const Rational& z, int max_steps);
  Rational z_;
  std::vector<BigInt> quotients_;
  std::vector<BigInt> p_, q_;
  std::vector<Rational> tails_;
  bool terminated_ = false;
};

CFState cf_expand(const Rational& z, int max_steps = 1 << 20);

struct ConvergentHit {
  BigInt p, q;
  int index = 0;
  // q_n < 1/|q_{n-1} z - p_{n-1}| (only meaningful for index >= 2).
  bool denominatorBound = false;
  // 1/|q_{n-1} z - p_{n-1}| <= 1/eps (only meaningful for index >= 2).
  bool minimalityBound = false;
};

// First n >= 1 with |q_n z - p_n| < eps, 0 < eps <= 1.
ConvergentHit first_convergent_below(const Rational& z, const Rational& eps);

// (lambda, mu) with 0 < N(mu) < r_sq and N(mu*zeta - lambda) < |D|/(2 r_sq),
// searching mu by increasing norm.
std::optional<std::pair<AlgInt, AlgInt>> dirichlet_pair(const Order& order,
                                                        const FieldElem& zeta,
                                                        const Rational& r_sq);

}  // namespace bianchi
