// Slow, independent reference implementations used only by the tests.
//
// Nothing here calls into the algorithms under test beyond plain data
// types: each oracle recomputes its answer from definitions, by exhaustive
// search over small boxes.

#pragma once

#include <optional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "bianchi/envelope.hpp"
#include "bianchi/jacobsthal.hpp"
#include "bianchi/qfield.hpp"

namespace bianchi::oracle {

using Dec50 = boost::multiprecision::cpp_dec_float_50;

// ---- Jacobsthal --------------------------------------------------------

// Longest run of consecutive integers an adversary can cover by choosing
// the allowed number of classes modulo each prime.  For each trial length
// L the run is translated to [0, L) and every combination of per-prime
// coverage masks is tried, with a popcount bound on what the remaining
// primes could still cover.
i64 max_covered_run(const SievePattern& pattern);

// Enumerates every residue choice and scans a full period (small periods
// only).  Returns the optimum run length.
i64 exhaustive_run(const SievePattern& pattern);

// Every abstract sieve pattern with period <= max_period: squarefree
// products of primes, with m in {1, 2} at odd primes and m = 1 at 2.
std::vector<SievePattern> all_patterns(i64 max_period);

// ---- Order arithmetic, by brute force ---------------------------------

// Elements are pairs (x0, x1) meaning x0 + x1*w, w = (t + sqrt D)/2.
struct Elt {
  i64 x0 = 0, x1 = 0;
};

i64 norm(i64 d, Elt x);
Elt mul(i64 d, Elt x, Elt y);
AlgInt to_alg(i64 d, Elt x);
Elt from_alg(i64 d, AlgInt x);

// The Z-lattice spanned by a finite set of elements, in Hermite form
// {(h00, h01), (0, h11)} acting on coordinates (x0, x1).
struct Lattice {
  i64 a = 0;  // x0-step of the vector (a, 0)
  i64 c = 0;  // (c, f) is the second basis vector
  i64 f = 0;
  i64 index() const { return a * f; }
  bool contains(Elt x) const;
};
Lattice span(const std::vector<Elt>& gens);
// The O-ideal generated by the given elements.
Lattice ideal_of(i64 d, const std::vector<Elt>& gens);

// All nonzero elements with norm <= bound.
std::vector<Elt> elements_up_to(i64 d, i64 bound);

bool coprime(i64 d, AlgInt lambda, AlgInt mu);
// Minimal norm of a nonzero element of the ideal.
i64 min_norm(i64 d, const Lattice& ideal);
bool principal(i64 d, const Lattice& ideal);
// Definition of a singular point num/den.
bool singular(i64 d, AlgInt num, i64 den);

i64 class_number(i64 d);
int kronecker(i64 d, i64 p);
// |delta|^2 over all proper divisors of D in O.
i64 max_proper_divisor_norm(i64 d);

// ---- Geometry ---------------------------------------------------------

// Exact squared distance from a plane point to the closed parallelogram F.
Rational dist_sq_to_domain(const Order& order, const PlanePoint& p);

// Coprime (lambda, mu) with N(mu) <= cap_sq and open disc meeting F, one per
// centre, found with a plain double loop.
std::size_t naive_candidate_count(const Order& order, i64 cap_sq);

// Indices of the sites of greatest power at p.
std::vector<int> argmax_power(const Order& order, const std::vector<Hemisphere>& sites,
                              const PlanePoint& p);

// Every translate of the candidates by a lattice vector of basis length at
// most reach whose open disc meets F, one per (centre, N(mu)).
std::vector<Hemisphere> translates_meeting_domain(const Order& order,
                                                  const std::vector<Hemisphere>& cands,
                                                  i64 reach = 4);

// A coprime pair (lambda, mu), other than the one defining h, whose
// hemisphere is at least as high as h above p.  Searches every mu with
// N(mu) <= 1/power_h(p), so nullopt proves that h is strictly highest at p
// and therefore contributes a face of the floor.
std::optional<std::pair<AlgInt, AlgInt>> higher_hemisphere(const Order& order,
                                                           const Hemisphere& h,
                                                           const PlanePoint& p);

// Height transform evaluated in 50-digit floating point.
Dec50 height_transform_decimal(const Order& order, const Mat2& g, const PlanePoint& zeta,
                               const Rational& t_sq);

// ---- Random inputs ----------------------------------------------------

Rational random_rational(std::mt19937_64& rng, i64 max_abs);
AlgInt random_alg(std::mt19937_64& rng, const Order& order, i64 box);

}  // namespace bianchi::oracle
