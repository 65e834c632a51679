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

#include "bianchi/jacobsthal.hpp"

#include <algorithm>
#include <set>

namespace bianchi {

i64 SievePattern::period() const {
  i64 prod = 1;
  for (const auto& e : entries) {
    if (__builtin_mul_overflow(prod, e.p, &prod)) return INT64_MAX;
  }
  return prod;
}

SievePattern sieve_pattern(const Order& order, const ScaledIdeal& ideal,
                           TwoDivisibility reading) {
  std::set<i64> primes;
  for (i64 p : prime_factors(ideal.content)) primes.insert(p);
  for (i64 p : prime_factors(ideal.ideal.a)) primes.insert(p);
  SievePattern out;
  for (i64 p : primes) {
    const bool whole = ideal.content % p == 0;  // (p) divides the ideal
    int count = 1;
    if (order.kronecker(p) == 1 && whole) count = 2;
    if (p == 2) {
      const bool side_condition =
          reading == TwoDivisibility::kIdealTwo ? whole : true;
      // Two primes above 2 dividing a would forbid both classes mod 2.  The
      // side condition ties alpha to a single class there.
      if (count == 2 && side_condition) count = 1;
      if (count == 2) throw std::logic_error("unconstrained split prime above 2");
    }
    out.entries.push_back({p, count});
  }
  return out;
}

namespace {

// Position-driven branch and bound for the longest covered prefix [0, L).
// Translating a run to start at 0 is free, so only prefixes are searched.
// At each step the first uncovered integer x must be hit by a fresh class,
// which fixes that slot's residue to x mod p.
class RunSearch {
 public:
  explicit RunSearch(const SievePattern& pattern) {
    for (const auto& e : pattern.entries) {
      for (int k = 0; k < e.m; ++k) {
        prime_.push_back(e.p);
        second_.push_back(k == 1);
      }
    }
    res_.assign(prime_.size(), -1);
  }

  void run() { dfs(0); }
  i64 best() const { return best_; }
  const std::vector<i64>& best_residues() const { return best_res_; }

 private:
  bool covered(i64 x) const {
    for (size_t s = 0; s < prime_.size(); ++s)
      if (res_[s] >= 0 && x % prime_[s] == res_[s]) return true;
    return false;
  }

  bool can_beat(i64 x) const {
    const i64 target = best_ + 1;  // must cover every integer in [x, target)
    if (target <= x) return true;
    i64 uncovered = 0;
    for (i64 y = x; y < target; ++y)
      if (!covered(y)) ++uncovered;
    i64 capacity = 0;
    const i64 width = target - x;
    for (size_t s = 0; s < prime_.size(); ++s)
      if (res_[s] < 0) capacity += (width + prime_[s] - 1) / prime_[s];
    return capacity >= uncovered;
  }

  void dfs(i64 x) {
    while (covered(x)) ++x;
    if (x > best_) {
      best_ = x;
      best_res_ = res_;
    }
    if (!can_beat(x)) return;
    for (size_t s = 0; s < prime_.size(); ++s) {
      if (res_[s] >= 0) continue;
      if (second_[s] && res_[s - 1] < 0) continue;
      res_[s] = x % prime_[s];
      dfs(x + 1);
      res_[s] = -1;
    }
  }

  std::vector<i64> prime_;
  std::vector<bool> second_;
  std::vector<i64> res_;
  i64 best_ = -1;
  std::vector<i64> best_res_;
};

std::mutex g_cache_mu;
std::map<SievePattern, JacobsthalWitness> g_cache;

}  // namespace

JacobsthalWitness little_j(const SievePattern& pattern) {
  {
    std::lock_guard<std::mutex> lock(g_cache_mu);
    auto it = g_cache.find(pattern);
    if (it != g_cache.end()) return it->second;
  }
  for (const auto& e : pattern.entries)
    if (e.m < 1 || e.m > 2 || e.m >= e.p) throw std::invalid_argument("bad sieve entry");

  RunSearch search(pattern);
  search.run();
  const i64 g = search.best();
  std::vector<i64> res = search.best_residues();

  JacobsthalWitness w;
  w.value = g + 1;
  w.runStart = 0;
  w.runLength = g;
  size_t s = 0;
  for (const auto& e : pattern.entries) {
    std::vector<i64> classes;
    for (int k = 0; k < e.m; ++k, ++s) {
      i64 r = res[s];
      if (r < 0) {
        // Unused class: anything that leaves g uncovered and stays distinct.
        for (r = 0; r < e.p; ++r) {
          if (r == g % e.p) continue;
          if (std::find(classes.begin(), classes.end(), r) != classes.end()) continue;
          break;
        }
      }
      classes.push_back(r);
    }
    w.residues.push_back(classes);
  }
  std::lock_guard<std::mutex> lock(g_cache_mu);
  g_cache.emplace(pattern, w);
  return w;
}

JacobsthalWitness little_j(const Order& order, const ScaledIdeal& ideal,
                           TwoDivisibility reading) {
  return little_j(sieve_pattern(order, ideal, reading));
}

bool check_witness(const SievePattern& pattern, const JacobsthalWitness& w,
                   bool full_period) {
  if (w.residues.size() != pattern.entries.size()) return false;
  if (w.runLength != w.value - 1) return false;
  auto hit = [&](i64 x) {
    for (size_t i = 0; i < pattern.entries.size(); ++i) {
      const i64 p = pattern.entries[i].p;
      for (i64 r : w.residues[i])
        if (mod_floor(x, p) == r) return true;
    }
    return false;
  };
  for (size_t i = 0; i < pattern.entries.size(); ++i) {
    if (static_cast<int>(w.residues[i].size()) != pattern.entries[i].m) return false;
    std::set<i64> distinct(w.residues[i].begin(), w.residues[i].end());
    if (distinct.size() != w.residues[i].size()) return false;
  }
  for (i64 x = w.runStart; x < w.runStart + w.runLength; ++x)
    if (!hit(x)) return false;
  if (hit(w.runStart - 1) || hit(w.runStart + w.runLength)) return false;
  if (!full_period) return true;
  const i64 P = pattern.period();
  if (P > 50'000'000) return false;
  i64 longest = 0, run = 0;
  for (i64 x = 0; x < 2 * P; ++x) {
    run = hit(x) ? run + 1 : 0;
    longest = std::max(longest, run);
  }
  return longest == w.runLength;
}

JacobsthalSolver::JacobsthalSolver(Order order) : order_(std::move(order)) {}

bool JacobsthalSolver::prime_is_nonprincipal(i64 p, Splitting* kind) {
  auto it = prime_info_.find(p);
  if (it == prime_info_.end()) {
    std::optional<Splitting> info;
    int k = order_.kronecker(p);
    if (k != -1 && !order_.has_element_of_norm(p))
      info = k == 0 ? Splitting::kRamified : Splitting::kSplit;
    it = prime_info_.emplace(p, info).first;
  }
  if (it->second && kind) *kind = *it->second;
  return it->second.has_value();
}

std::vector<std::pair<i64, Splitting>> JacobsthalSolver::nonprincipal_primes(i64 limit) {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<std::pair<i64, Splitting>> out;
  for (i64 p = 2; p <= limit; ++p) {
    Splitting kind;
    if (is_prime(p) && prime_is_nonprincipal(p, &kind)) out.push_back({p, kind});
  }
  return out;
}

namespace {

struct Slot {
  i64 p;
  bool second;  // the conjugate prime of a split p, used after the first
};

// Decides whether [0, T) can be covered by one class per chosen prime ideal
// with product of norms <= cap.  Primes below T are explicit slots; primes
// at or above T hit at most one integer of the window, so only how many of
// them are used matters, and the cheapest ones are always best.
class CoverDecision {
 public:
  CoverDecision(i64 T, i128 cap, std::vector<Slot> small, std::vector<i128> single_cost)
      : T_(T), cap_(cap), small_(std::move(small)), single_(std::move(single_cost)) {
    res_.assign(small_.size(), -1);
  }

  bool solve() { return dfs(0, 1, 0); }
  const std::vector<i64>& residues() const { return res_; }
  const std::vector<i64>& singles() const { return singles_; }

 private:
  bool covered(i64 x) const {
    for (size_t s = 0; s < small_.size(); ++s)
      if (res_[s] >= 0 && x % small_[s].p == res_[s]) return true;
    return false;
  }

  bool affordable(i128 product, size_t k) const {
    return k < single_.size() && product * single_[k] <= cap_;
  }

  bool dfs(i64 x, i128 product, size_t k) {
    while (x < T_ && covered(x)) ++x;
    if (x >= T_) return true;

    i64 uncovered = 0;
    for (i64 y = x; y < T_; ++y)
      if (!covered(y)) ++uncovered;
    i64 capacity = 0;
    const i64 width = T_ - x;
    for (size_t s = 0; s < small_.size(); ++s)
      if (res_[s] < 0 && product * small_[s].p <= cap_)
        capacity += (width + small_[s].p - 1) / small_[s].p;
    size_t extra = 0;
    while (affordable(product, k + extra + 1)) ++extra;
    if (capacity + static_cast<i64>(extra) < uncovered) return false;

    for (size_t s = 0; s < small_.size(); ++s) {
      if (res_[s] >= 0) continue;
      if (small_[s].second && res_[s - 1] < 0) continue;
      const i128 next = product * small_[s].p;
      if (!affordable(next, k)) continue;
      res_[s] = x % small_[s].p;
      if (dfs(x + 1, next, k)) return true;
      res_[s] = -1;
    }
    if (affordable(product, k + 1)) {
      singles_.push_back(x);
      if (dfs(x + 1, product, k + 1)) return true;
      singles_.pop_back();
    }
    return false;
  }

  i64 T_;
  i128 cap_;
  std::vector<Slot> small_;
  std::vector<i128> single_;
  std::vector<i64> res_;
  std::vector<i64> singles_;
};

}  // namespace

BigJResult JacobsthalSolver::solve(i64 norm_cap) {
  BigJResult best;  // the unit ideal: value 1
  best.witness = little_j(SievePattern{});
  if (norm_cap < 2) return best;

  for (i64 T = 1;; ++T) {
    std::vector<Slot> small;
    for (i64 p = 2; p < T && p <= norm_cap; ++p) {
      Splitting kind;
      if (!is_prime(p) || !prime_is_nonprincipal(p, &kind)) continue;
      small.push_back({p, false});
      if (kind == Splitting::kSplit && p != 2) small.push_back({p, true});
    }
    // Costs of the cheapest slots among primes >= T, as prefix products.
    std::vector<i128> single_cost = {1};
    std::vector<i64> single_prime;
    for (i64 p = std::max<i64>(T, 2); single_cost.back() <= norm_cap && p <= norm_cap; ++p) {
      Splitting kind;
      if (!is_prime(p) || !prime_is_nonprincipal(p, &kind)) continue;
      int slots = (kind == Splitting::kSplit && p != 2) ? 2 : 1;
      for (int s = 0; s < slots && single_cost.back() <= norm_cap; ++s) {
        single_cost.push_back(single_cost.back() * p);
        single_prime.push_back(p);
      }
    }
    CoverDecision decision(T, norm_cap, small, single_cost);
    if (!decision.solve()) break;

    // Turn the covering into an explicit squarefree pattern.
    std::map<i64, int> count;
    for (size_t s = 0; s < small.size(); ++s)
      if (decision.residues()[s] >= 0) ++count[small[s].p];
    for (size_t j = 0; j < decision.singles().size(); ++j) ++count[single_prime[j]];
    BigJResult r;
    for (auto [p, m] : count) r.pattern.entries.push_back({p, m});
    r.witness = little_j(r.pattern);
    r.value = r.witness.value;
    if (r.value < T + 1) throw std::logic_error("big_J: covering pattern lost its run");
    for (auto [p, m] : count) {
      auto sp = order_.prime_splitting(p);
      for (int k = 0; k < m; ++k) r.primes.push_back(sp.primes[k]);
    }
    best = std::move(r);
  }
  return best;
}

BigJResult JacobsthalSolver::big_J_sq(const Rational& x_sq) {
  if (x_sq <= 0) throw std::invalid_argument("big_J: x must be positive");
  const i64 cap = to_i64(ceil_of(x_sq)) - 1;  // norms strictly below x^2
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(cap);
  if (it != cache_.end()) return it->second;
  BigJResult r = solve(cap);
  cache_.emplace(cap, r);
  return r;
}

i64 JacobsthalSolver::theorem_J(i64 max_j) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (theorem_j_) return *theorem_j_;
  }
  const i64 dsq = delta_norm_sq(order_.disc());
  const i64 D = order_.abs_disc();
  for (i64 J = 1; J <= max_j; ++J) {
    const i64 x_sq = 4 * std::max(dsq, checked_mul(checked_mul(J, J), D));
    if (big_J_sq(Rational(x_sq)).value <= J) {
      std::lock_guard<std::mutex> lock(mu_);
      theorem_j_ = J;
      return J;
    }
  }
  throw std::runtime_error("theorem_J: search budget exceeded");
}

i64 big_J(const Order& order, const Rational& x) {
  return JacobsthalSolver(order).big_J(x).value;
}

i64 theorem_J(const Order& order) { return JacobsthalSolver(order).theorem_J(); }

}  // namespace bianchi
