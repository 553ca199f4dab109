#pragma once

// Virtual multicrossings: n strands crossing at one point, each pair either
// classical (over/under decided by strand heights) or virtual.  A crossing is
// valid when its classical pairs form disjoint cliques, i.e. no three strands
// carry exactly two classical crossings and one virtual one.

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vmc {

using Pair = std::pair<int, int>;  // unordered position pair, stored a < b

inline Pair ordered_pair(int a, int b) { return a < b ? Pair{a, b} : Pair{b, a}; }

// A concrete virtual n-crossing: strand heights by angular position (clockwise,
// 1-based, rank 1 = topmost) plus the set of classically crossing pairs.
// Validity in the clique sense is not presumed; see validate_crossing.
struct MulticrossingSpec {
  int n = 0;
  std::vector<int> heights;        // heights[i-1] = height rank of position i
  std::set<Pair> classical_pairs;

  // Throws std::invalid_argument on structural violations: n < 2, heights not
  // a permutation of 1..n, pair out of range or degenerate.
  MulticrossingSpec(int n, std::vector<int> heights, std::set<Pair> classical_pairs);

  // The complement pair set, as used in the written notation.
  std::set<Pair> virtual_pairs() const;

  bool operator==(const MulticrossingSpec&) const = default;
};

struct CrossingVerdict {
  bool valid = false;
  std::vector<std::array<int, 3>> forbidden_triples;  // two classical, one virtual
};

// A crossing type: partition of the positions 1..n into parts, each part
// ordered topmost-first.  Heights of strands in different parts carry no
// information.  The part list is kept sorted by smallest member, so equality
// of normalized representations is equality of types.
struct CrossingType {
  int n = 0;
  std::vector<std::vector<int>> parts;

  CrossingType(int n, std::vector<std::vector<int>> parts);

  bool operator==(const CrossingType&) const = default;
  bool operator<(const CrossingType& other) const;
};

struct PairCrossing {
  int a = 0, b = 0;       // a < b
  bool classical = false;
  int over = 0;           // the over position when classical, 0 otherwise

  bool operator==(const PairCrossing&) const = default;
};

enum class TripleType { I, II, III };

// Checks the disjoint-clique condition; reports every offending triple.
CrossingVerdict validate_crossing(const MulticrossingSpec& spec);

// Forget heights across classes: cliques of classical pairs plus singletons,
// each part ordered by ascending height rank.  Rejects invalid specs.
CrossingType to_type(const MulticrossingSpec& spec);

// All C(n,2) constituent 2-crossings, in (a,b) lexicographic order.
std::vector<PairCrossing> resolve(const CrossingType& type);

// Triple crossings resolve into 3 (Type I), 1 (Type II) or 0 (Type III)
// classical 2-crossings.  Requires n == 3.
TripleType classify_triple(const CrossingType& type);

// Exactly one constituent 2-crossing is classical.
bool is_almost_virtual(const CrossingType& type);

// Clockwise distance from the over to the under strand of the one classical
// pair: d in 1..n-1, or min(d, n-d) when counting up to reflection.
int almost_virtual_distance(const CrossingType& type, bool up_to_reflection = false);

// Relabel positions i -> ((i-1+r) mod n)+1; part orders preserved.
CrossingType rotate_type(const CrossingType& type, int r);

// Relabel positions i -> n+1-i; part orders preserved.
CrossingType reflect_type(const CrossingType& type);

// Least normalized representation over all n rotations (and their
// reflections, when requested).  Constant on orbits.
CrossingType canonical_type(const CrossingType& type, bool include_reflection = false);

// A concrete spec with the given type: ranks assigned part by part in part
// list order.
MulticrossingSpec representative_spec(const CrossingType& type);

// Notation "{heights; virtual pairs}", e.g. "{1243; (1,2),(1,3),(2,4),(3,4)}".
// Heights are a digit string for n <= 9, comma-separated otherwise; the listed
// pairs are the virtual ones.  Whitespace between tokens is ignored.
MulticrossingSpec parse_crossing_notation(std::string_view text);
std::string format_crossing_notation(const MulticrossingSpec& spec);

}  // namespace vmc
