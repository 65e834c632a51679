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

// Jacobsthal-type functions for ideals of O.
//
// For an ideal a and alpha in O, the shifts j in Z with (a, alpha + j) = O
// avoid one residue class modulo p for every prime ideal above p dividing a.
// Everything therefore depends on a only through its sieve pattern: the list
// of rational primes p below a together with the number m of forbidden
// classes modulo p (m = 2 only for odd split p with both primes dividing a).
// j(a) is one more than the longest run of consecutive forbidden integers an
// adversarial alpha can arrange.

#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "bianchi/qfield.hpp"

namespace bianchi {

struct SieveEntry {
  i64 p = 2;
  int m = 1;
  friend auto operator<=>(const SieveEntry&, const SieveEntry&) = default;
};

struct SievePattern {
  std::vector<SieveEntry> entries;  // sorted by p, primes distinct

  // Product of the primes; saturates at INT64_MAX.
  i64 period() const;
  friend auto operator<=>(const SievePattern&, const SievePattern&) = default;
};

// How the side condition on alpha at the prime 2 is triggered.  Under
// kIdealTwo it applies when the ideal (2) divides a; under kPrimeAboveTwo it
// applies as soon as some prime above 2 divides a.
enum class TwoDivisibility { kIdealTwo, kPrimeAboveTwo };

SievePattern sieve_pattern(const Order& order, const ScaledIdeal& ideal,
                           TwoDivisibility reading = TwoDivisibility::kIdealTwo);

struct JacobsthalWitness {
  i64 value = 1;
  // residues[i] holds the m forbidden classes chosen for entries[i].
  std::vector<std::vector<i64>> residues;
  i64 runStart = 0;
  i64 runLength = 0;
};

JacobsthalWitness little_j(const SievePattern& pattern);
JacobsthalWitness little_j(const Order& order, const ScaledIdeal& ideal,
                           TwoDivisibility reading = TwoDivisibility::kIdealTwo);

// Checks that the claimed run is covered by the claimed classes and is not
// extended on either side.  With full_period set, also scans one whole
// period and confirms no longer run exists for those classes.
bool check_witness(const SievePattern& pattern, const JacobsthalWitness& w,
                   bool full_period);

struct BigJResult {
  i64 value = 1;
  SievePattern pattern;        // an optimal squarefree pattern
  std::vector<Ideal> primes;   // the prime ideals realising it
  JacobsthalWitness witness;
};

// Maximisation of little_j over ideals with only non-principal prime
// divisors and norm below a bound.  Results are cached per bound, so one
// instance should be reused across calls for a fixed order.
class JacobsthalSolver {
 public:
  explicit JacobsthalSolver(Order order);

  const Order& order() const { return order_; }

  // Maximum over ideals of norm < x_sq.
  BigJResult big_J_sq(const Rational& x_sq);
  BigJResult big_J(const Rational& x) { return big_J_sq(x * x); }

  // Least J >= 1 with big_J(2 max(|delta|, J sqrt|D|)) <= J.
  i64 theorem_J(i64 max_j = 100000);

  // Norm-ordered non-principal rational primes up to and including limit.
  std::vector<std::pair<i64, Splitting>> nonprincipal_primes(i64 limit);

 private:
  bool prime_is_nonprincipal(i64 p, Splitting* kind);
  BigJResult solve(i64 norm_cap);

  Order order_;
  std::map<i64, BigJResult> cache_;
  std::map<i64, std::optional<Splitting>> prime_info_;
  std::optional<i64> theorem_j_;
  std::mutex mu_;
};

i64 big_J(const Order& order, const Rational& x);
i64 theorem_J(const Order& order);

}  // namespace bianchi
