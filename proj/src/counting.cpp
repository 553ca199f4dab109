#include "vmc/counting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <set>
#include <stdexcept>

#include "vmc/errors.hpp"

namespace vmc {

namespace {

std::vector<int> divisors(int n) {
  std::vector<int> small, large;
  for (int d = 1; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

long long totient(int n) {
  long long phi = n;
  int m = n;
  for (int p = 2; static_cast<long long>(p) * p <= m; ++p) {
    if (m % p) continue;
    phi -= phi / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) phi -= phi / m;
  return phi;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BigInt pow_big(BigInt base, int exp) {
  BigInt out = 1;
  for (; exp > 0; --exp) out *= base;
  return out;
}

}  // namespace

BigInt factorial_big(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial_big(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;  // exact at every step
  }
  return out;
}

BigInt bell(int n) {
  if (n < 0) throw std::invalid_argument("bell of negative argument");
  // Bell triangle: row starts with the previous row's last entry.
  std::vector<BigInt> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next;
    next.reserve(i + 1);
    next.push_back(row.back());
    for (const BigInt& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

BigInt fragmented_count_by_parts(int n, int k) {
  if (n < 1) throw std::invalid_argument("fragmented_count requires n >= 1");
  if (k < 1 || k > n) throw std::invalid_argument("part count out of range");
  return binomial_big(n - 1, k - 1) * factorial_big(n) / factorial_big(k);
}

BigInt fragmented_count(int n) {
  if (n < 1) throw std::invalid_argument("fragmented_count requires n >= 1");
  BigInt out = 0;
  for (int k = 1; k <= n; ++k) out += fragmented_count_by_parts(n, k);
  return out;
}

BigInt fix_count(int n, int d) {
  if (n < 1 || d < 1 || n % d != 0)
    throw std::invalid_argument("fix_count requires d | n");
  BigInt out = 0;
  for (int k = 1; k <= d; ++k)
    out += binomial_big(d - 1, k - 1) * (factorial_big(d) / factorial_big(k)) *
           pow_big(n / d, d - k);
  return out;
}

BigInt vcount(int n) {
  if (n < 1) throw std::invalid_argument("vcount requires n >= 1");
  if (n == 1) return 1;
  BigInt sum = 0;
  for (int d : divisors(n)) sum += totient(n / d) * fix_count(n, d);
  if (sum % n != 0)
    throw std::logic_error("orbit-count sum not divisible by " + std::to_string(n));
  return sum / n;
}

BigInt vcount_prime(int p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  BigInt f = fragmented_count(p);
  if ((f - 1) % p != 0)
    throw std::logic_error("F_p - 1 not divisible by p");
  return (f - 1) / p + 1;
}

long long almost_virtual_count(int n, bool up_to_reflection) {
  if (n < 2) throw std::invalid_argument("almost virtual crossings require n >= 2");
  return up_to_reflection ? n / 2 : n - 1;
}

double v_estimate_log(int n) {
  if (n < 2) throw std::invalid_argument("estimate requires n >= 2");
  const double pi = std::numbers::pi;
  return std::lgamma(n + 1.0) + 2.0 * std::sqrt(double(n)) -
         (std::log(2.0) + 0.5 * (std::log(pi) + 1.0)) - 1.75 * std::log(double(n));
}

double v_estimate(int n) { return std::exp(v_estimate_log(n)); }

double big_log(const BigInt& x) {
  if (x <= 0) throw std::invalid_argument("log of non-positive value");
  const unsigned bits = boost::multiprecision::msb(x);
  if (bits <= 52) return std::log(x.convert_to<double>());
  const unsigned shift = bits - 52;
  const double mantissa = BigInt(x >> shift).convert_to<double>();
  return std::log(mantissa) + shift * std::numbers::ln2;
}

namespace {

// Product of permutations of each part, odometer style.
void visit_orderings(int n, std::vector<std::vector<int>>& parts, std::size_t idx,
                     const std::function<void(const CrossingType&)>& fn) {
  if (idx == parts.size()) {
    fn(CrossingType(n, parts));
    return;
  }
  auto& part = parts[idx];
  std::sort(part.begin(), part.end());
  do {
    visit_orderings(n, parts, idx + 1, fn);
  } while (std::next_permutation(part.begin(), part.end()));
}

// Set partitions via restricted growth strings.
void visit_partitions(int n, int pos, int blocks, std::vector<int>& rgs,
                      const std::function<void(const CrossingType&)>& fn) {
  if (pos == n) {
    std::vector<std::vector<int>> parts(blocks);
    for (int i = 0; i < n; ++i) parts[rgs[i]].push_back(i + 1);
    visit_orderings(n, parts, 0, fn);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    rgs[pos] = b;
    visit_partitions(n, pos + 1, std::max(blocks, b + 1), rgs, fn);
  }
}

}  // namespace

void for_each_labeled_type(int n, const std::function<void(const CrossingType&)>& fn) {
  if (n < 1) throw std::invalid_argument("census requires n >= 1");
  std::vector<int> rgs(n, 0);
  visit_partitions(n, 0, 0, rgs, fn);
}

std::vector<CrossingType> enumerate_types(int n, bool include_reflection, int bound) {
  if (n < 1) throw std::invalid_argument("census requires n >= 1");
  if (n > bound)
    throw bound_exceeded("census for n=" + std::to_string(n) +
                         " exceeds brute-force bound " + std::to_string(bound));
  std::set<CrossingType> canon;
  for_each_labeled_type(n, [&](const CrossingType& t) {
    canon.insert(canonical_type(t, include_reflection));
  });
  return {canon.begin(), canon.end()};
}

long long count_fixed_by_rotation(int n, int d) {
  long long count = 0;
  for_each_labeled_type(n, [&](const CrossingType& t) {
    if (rotate_type(t, d % n) == t) ++count;
  });
  return count;
}

long long count_valid_pair_patterns(int n) {
  if (n < 2) throw std::invalid_argument("pattern census requires n >= 2");
  std::vector<Pair> all_pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) all_pairs.push_back({a, b});
  std::vector<int> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i + 1;

  long long valid = 0;
  const std::uint64_t limit = 1ull << all_pairs.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::set<Pair> classical;
    for (std::size_t i = 0; i < all_pairs.size(); ++i)
      if (mask & (1ull << i)) classical.insert(all_pairs[i]);
    MulticrossingSpec spec(n, identity, std::move(classical));
    if (validate_crossing(spec).valid) ++valid;
  }
  return valid;
}

CountReport count_report(int n) {
  if (n < 2) throw std::invalid_argument("count report requires n >= 2");
  CountReport report;
  report.n = n;
  report.bell = vmc::bell(n);
  report.fragmented = fragmented_count(n);
  for (int d : divisors(n)) report.fix_by_divisor.emplace_back(d, fix_count(n, d));
  report.vcount = vmc::vcount(n);
  report.estimate_log = v_estimate_log(n);
  report.estimate = std::exp(report.estimate_log);
  report.ratio = std::exp(big_log(report.vcount) - report.estimate_log);
  return report;
}

}  // namespace vmc
