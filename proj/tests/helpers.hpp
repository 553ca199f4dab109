#pragma once

// Test-side oracles and generators, kept independent of the library's own
// derivations: recurrences instead of closed sums, orbit grouping instead of
// canonical forms, floating geometry instead of integer interval tests.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "vmc/counting.hpp"
#include "vmc/gauss.hpp"

namespace testutil {

// A000262 three-term recurrence: F_n = (2n-1) F_{n-1} - (n-1)(n-2) F_{n-2}.
inline vmc::BigInt fragmented_recurrence(int n) {
  vmc::BigInt prev2 = 1, prev = 1;  // F_0, F_1
  if (n == 0) return prev2;
  for (int i = 2; i <= n; ++i) {
    vmc::BigInt cur = (2 * i - 1) * prev - vmc::BigInt(i - 1) * (i - 2) * prev2;
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return prev;
}

// Bell numbers by B_{n+1} = sum_k C(n,k) B_k.
inline vmc::BigInt bell_recurrence(int n) {
  std::vector<vmc::BigInt> b{1};
  for (int i = 0; i < n; ++i) {
    vmc::BigInt next = 0;
    for (int k = 0; k <= i; ++k) next += vmc::binomial_big(i, k) * b[k];
    b.push_back(next);
  }
  return b[n];
}

// Orbit count by explicit orbit closure under rotation (and optionally
// reflection), no canonical forms involved.
inline long long orbit_count(int n, bool include_reflection) {
  std::set<vmc::CrossingType> pending;
  vmc::for_each_labeled_type(n, [&](const vmc::CrossingType& t) { pending.insert(t); });
  long long orbits = 0;
  while (!pending.empty()) {
    ++orbits;
    std::vector<vmc::CrossingType> frontier{*pending.begin()};
    while (!frontier.empty()) {
      const vmc::CrossingType t = frontier.back();
      frontier.pop_back();
      if (pending.erase(t) == 0) continue;
      for (int r = 1; r < n; ++r) frontier.push_back(vmc::rotate_type(t, r));
      if (include_reflection) frontier.push_back(vmc::reflect_type(t));
    }
  }
  return orbits;
}

// Orbits of the almost virtual types only, grouped the same way.
inline long long almost_virtual_orbit_count(int n, bool include_reflection) {
  std::set<vmc::CrossingType> pending;
  vmc::for_each_labeled_type(n, [&](const vmc::CrossingType& t) {
    if (vmc::is_almost_virtual(t)) pending.insert(t);
  });
  long long orbits = 0;
  while (!pending.empty()) {
    ++orbits;
    std::vector<vmc::CrossingType> frontier{*pending.begin()};
    while (!frontier.empty()) {
      const vmc::CrossingType t = frontier.back();
      frontier.pop_back();
      if (pending.erase(t) == 0) continue;
      for (int r = 1; r < n; ++r) frontier.push_back(vmc::rotate_type(t, r));
      if (include_reflection) frontier.push_back(vmc::reflect_type(t));
    }
  }
  return orbits;
}

// Sign from the actual direction vectors: positive when the frame
// (over direction, under direction) turns counterclockwise in math
// coordinates, i.e. the sine of the direction difference is positive.
inline int sign_by_geometry(int over_segment, int under_segment, int m) {
  const double pi = 3.14159265358979323846;
  const auto angle = [&](int k) {
    return static_cast<double>((k - 1LL) * (m + 1) % (2LL * m)) * pi / m;
  };
  const double s = std::sin(angle(under_segment) - angle(over_segment));
  return s > 0 ? +1 : -1;
}

// Every valid canonical signed Gauss code with exactly n crossings: choose a
// perfect matching of the 2n token slots (first free slot pairs with each
// later slot), an O/U orientation and a sign per crossing.  Labels follow
// first appearance, so the codes come out canonical.
inline void each_canonical_code(int n, const std::function<void(const vmc::SignedGaussCode&)>& fn) {
  std::vector<int> label_at(2 * n, 0);

  struct Rec {
    int n;
    std::vector<int>& label_at;
    const std::function<void(const vmc::SignedGaussCode&)>& fn;

    void pair_slots(int next_label) {
      int first = -1;
      for (int i = 0; i < 2 * n; ++i)
        if (label_at[i] == 0) {
          first = i;
          break;
        }
      if (first < 0) {
        emit();
        return;
      }
      for (int j = first + 1; j < 2 * n; ++j) {
        if (label_at[j] != 0) continue;
        label_at[first] = label_at[j] = next_label;
        pair_slots(next_label + 1);
        label_at[first] = label_at[j] = 0;
      }
    }

    void emit() {
      // 2^n orientation choices and 2^n sign choices.
      for (int orient = 0; orient < (1 << n); ++orient) {
        for (int signs = 0; signs < (1 << n); ++signs) {
          vmc::SignedGaussCode code;
          std::vector<bool> seen(n + 1, false);
          for (int i = 0; i < 2 * n; ++i) {
            const int label = label_at[i];
            const bool first_occurrence = !seen[label];
            seen[label] = true;
            const bool first_is_over = (orient >> (label - 1)) & 1;
            code.tokens.push_back({label,
                                   first_occurrence == first_is_over ? vmc::Passage::over
                                                                     : vmc::Passage::under,
                                   ((signs >> (label - 1)) & 1) ? +1 : -1});
          }
          fn(code);
        }
      }
    }
  };

  if (n == 0) {
    fn(vmc::SignedGaussCode{});
    return;
  }
  Rec rec{n, label_at, fn};
  rec.pair_slots(1);
}

// A uniformly shuffled valid code with the given crossing count.
inline vmc::SignedGaussCode random_code(std::mt19937& rng, int n) {
  std::vector<int> slots;
  for (int label = 1; label <= n; ++label) {
    slots.push_back(label);
    slots.push_back(label);
  }
  std::shuffle(slots.begin(), slots.end(), rng);
  vmc::SignedGaussCode code;
  std::vector<int> sign(n + 1, 0);
  std::vector<int> first_passage(n + 1, -1);
  std::vector<bool> seen(n + 1, false);
  for (int label : slots) {
    if (!seen[label]) {
      seen[label] = true;
      sign[label] = rng() % 2 ? +1 : -1;
      first_passage[label] = static_cast<int>(rng() % 2);
      code.tokens.push_back({label,
                             first_passage[label] ? vmc::Passage::over : vmc::Passage::under,
                             sign[label]});
    } else {
      code.tokens.push_back({label,
                             first_passage[label] ? vmc::Passage::under : vmc::Passage::over,
                             sign[label]});
    }
  }
  return vmc::canonicalize_gauss(code);
}

}  // namespace testutil
