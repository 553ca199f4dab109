#pragma once

// Petal diagrams: a single central virtual multicrossing with m non-nested
// outer loops.  The compiler turns any signed Gauss code into such a diagram
// and the extractor reads the code back off it.
//
// Geometry, fixed for the whole module: segments are numbered 1..m in
// clockwise angular order, which for non-nested petals joining angularly
// adjacent strand ends coincides with traversal order.  Segment k is
// traversed in direction u_k = (k-1)(m+1) mod 2m, in units of pi/m; distinct
// segments are never parallel.  Clockwise means clockwise on screen in y-down
// SVG coordinates; the compiler, extractor and renderer all share this
// convention.  Every sign decision reduces to integer arithmetic on the
// direction indices.

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vmc/crossing.hpp"
#include "vmc/gauss.hpp"

namespace vmc {

struct PetalDiagram {
  int petals = 1;                  // m, odd
  std::vector<int> heights;        // heights[s-1] = height rank of segment s
  std::set<Pair> classical_pairs;  // segment pairs crossing classically

  bool operator==(const PetalDiagram&) const = default;
};

// Segment indices per code token: one segment for a label's first occurrence,
// two consecutive segments for its second.  A dummy all-virtual segment is
// appended when the crossing count is even, keeping the total odd.
struct SegmentTable {
  std::vector<std::vector<int>> segments;
  int total = 1;
  bool has_dummy = false;
};

struct PetalVerdict {
  bool valid = false;
  std::vector<std::string> problems;
  std::vector<std::array<int, 3>> forbidden_triples;
};

// Petals needed for an n-crossing code: 3n when n is odd, 3n+1 when even.
int petal_bound(int n);

// Traversal direction of segment k, in [0, 2m).
int direction_index(int k, int m);

// +1 when the (over direction, under direction) frame is positively oriented:
// with t = (u_under - u_over) mod 2m, +1 for 0 < t < m and -1 for m < t < 2m.
int crossing_sign(int over_segment, int under_segment, int m);

SegmentTable segment_table(const SignedGaussCode& code);

// For each crossing, a classical pair between the first-occurrence segment
// and whichever second-occurrence segment matches the token sign; the two
// candidates always carry opposite signs, so the match is unique.  Heights
// are the linear extension listing (over, under) per crossing in first-
// appearance order, then the unpaired segments ascending.
PetalDiagram petal_from_gauss(const SignedGaussCode& code);

// Traverse segments 1..m, emitting one token per classically paired segment;
// over is the segment with the smaller height rank.  Requires every classical
// class to have size <= 2, else throws unsupported_diagram.
SignedGaussCode gauss_from_petal(const PetalDiagram& diagram);

// m odd, heights a permutation, and the induced central multicrossing valid.
PetalVerdict validate_petal(const PetalDiagram& diagram);

// JSON object {"petals": m, "heights": [...], "classical_pairs": [[i,j],...]},
// 1-based segments, pairs sorted ascending.
std::string petal_to_json(const PetalDiagram& diagram);
PetalDiagram petal_from_json(std::string_view text);

}  // namespace vmc
