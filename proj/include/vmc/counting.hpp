#pragma once

// Exact enumeration of virtual n-crossing types.  Labeled types are
// fragmented permutations (set partitions with linearly ordered parts,
// OEIS A000262); rotation classes are counted by Burnside's lemma.  All
// exact counts use arbitrary-precision integers.

#include <functional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vmc/crossing.hpp"

namespace vmc {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int default_census_bound = 8;

BigInt factorial_big(int n);
BigInt binomial_big(int n, int k);

// Set partitions of n elements (OEIS A000110), by the Bell triangle.
BigInt bell(int n);

// Fragmented permutations of n elements: sum over k of C(n-1,k-1) * n!/k!.
BigInt fragmented_count(int n);
BigInt fragmented_count_by_parts(int n, int k);

// Labeled types invariant under rotation by d arcs, for d | n:
// sum over k of C(d-1,k-1) * (d!/k!) * (n/d)^(d-k).
BigInt fix_count(int n, int d);

// Types up to rotation: (1/n) * sum over d | n of phi(n/d) * fix_count(n, d).
// The division is exact; a remainder is an internal error.
BigInt vcount(int n);

// For prime p, (F_p - 1)/p + 1: only the all-virtual type has a nontrivial
// rotational symmetry.
BigInt vcount_prime(int p);

// Almost virtual types: n-1 up to rotation, floor(n/2) with reflections.
long long almost_virtual_count(int n, bool up_to_reflection);

// Floating estimate n! * e^(2*sqrt(n)) / (2*sqrt(pi*e) * n^(7/4)), evaluated
// in the log domain; v_estimate overflows to +inf once exp does (n ~ 170).
double v_estimate_log(int n);
double v_estimate(int n);

// Natural log of a positive big integer.
double big_log(const BigInt& x);

// Brute-force routes, independent of the closed formulas above.

// Visits every labeled type (fragmented permutation) of n arcs exactly once.
void for_each_labeled_type(int n, const std::function<void(const CrossingType&)>& fn);

// One canonical representative per orbit, sorted by canonical encoding.
// Throws bound_exceeded when n is above the brute-force bound.
std::vector<CrossingType> enumerate_types(int n, bool include_reflection,
                                          int bound = default_census_bound);

// Labeled types x with rotate_type(x, d) == x.
long long count_fixed_by_rotation(int n, int d);

// Classical/virtual assignments over all 2^C(n,2) pair subsets that pass
// validate_crossing; equals bell(n).
long long count_valid_pair_patterns(int n);

struct CountReport {
  int n = 0;
  BigInt bell;
  BigInt fragmented;
  std::vector<std::pair<int, BigInt>> fix_by_divisor;  // (d, Fix(n,d)), d ascending
  BigInt vcount;
  double estimate = 0.0;
  double estimate_log = 0.0;
  double ratio = 0.0;  // vcount / estimate, computed in the log domain
};

CountReport count_report(int n);

}  // namespace vmc
