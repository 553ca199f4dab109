// Acceptance gate: one line per criterion, [PASS] or [FAIL], exit code is the
// number of failures.  Each check recomputes its expectation independently
// where one exists (census oracles, recurrences, geometry) and otherwise pins
// the published values.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "helpers.hpp"
#include "vmc/counting.hpp"
#include "vmc/crossing.hpp"
#include "vmc/errors.hpp"
#include "vmc/gauss.hpp"
#include "vmc/petal.hpp"
#include "vmc/render.hpp"

using namespace vmc;

namespace {

int failures = 0;

void report(int index, const std::string& label, bool ok, const std::string& detail = "") {
  std::printf("[%s] %2d %s%s%s\n", ok ? "PASS" : "FAIL", index, label.c_str(),
              detail.empty() ? "" : ": ", detail.c_str());
  if (!ok) ++failures;
}

bool check(const std::function<bool()>& fn, std::string& detail) {
  try {
    return fn();
  } catch (const std::exception& e) {
    detail = e.what();
    return false;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "";
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string command = std::string(VMC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  return {WEXITSTATUS(pclose(pipe)), output};
}

}  // namespace

int main() {
  std::string detail;

  // 1. The published rotation-class sequence for n = 2..10, within one second.
  detail.clear();
  report(1, "rotation class counts 2..10", check([&] {
           const auto start = std::chrono::steady_clock::now();
           const std::vector<long long> expected{2,     5,      20,     101,    684,
                                                 5377,  49342,  510745, 5894550};
           for (int n = 2; n <= 10; ++n)
             if (vcount(n) != BigInt(expected[n - 2])) return false;
           const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
           return elapsed.count() < 1.0;
         }, detail), detail);

  // 2. Brute-force orbit and fixed-point censuses up to n = 8.
  detail.clear();
  report(2, "census equals closed formulas up to n=8", check([&] {
           for (int n = 1; n <= 8; ++n) {
             if (BigInt(testutil::orbit_count(n, false)) != vcount(n)) return false;
             for (int d = 1; d <= n; ++d) {
               if (n % d != 0) continue;
               if (BigInt(count_fixed_by_rotation(n, d)) != fix_count(n, d)) return false;
             }
           }
           return true;
         }, detail), detail);

  // 3. The prime shortcut against the general formula.
  detail.clear();
  report(3, "prime formula for p in {2,3,5,7,11,13}", check([&] {
           for (int p : {2, 3, 5, 7, 11, 13})
             if (vcount_prime(p) != vcount(p)) return false;
           return true;
         }, detail), detail);

  // 4. Valid pair patterns are counted by Bell numbers.
  detail.clear();
  report(4, "valid pair patterns equal Bell numbers up to n=7", check([&] {
           for (int n = 2; n <= 7; ++n)
             if (BigInt(count_valid_pair_patterns(n)) != bell(n)) return false;
           return true;
         }, detail), detail);

  // 5. Fragmented counts and the sandwich F_n/n <= V_n <= F_n.
  detail.clear();
  report(5, "fragmented values and bounds up to n=40", check([&] {
           if (fragmented_count(2) != 3 || fragmented_count(3) != 13) return false;
           for (int n = 2; n <= 40; ++n) {
             const BigInt f = fragmented_count(n);
             const BigInt v = vcount(n);
             if (f < factorial_big(n)) return false;
             if (v * n < f) return false;
             if (v > f) return false;
             if (f != testutil::fragmented_recurrence(n)) return false;
           }
           return true;
         }, detail), detail);

  // 6. The five triple types with their classification.
  detail.clear();
  report(6, "triple census: 2+2+1 types", check([&] {
           const auto types = enumerate_types(3, false);
           if (types.size() != 5) return false;
           int count1 = 0, count2 = 0, count3 = 0;
           for (const auto& t : types) {
             switch (classify_triple(t)) {
               case TripleType::I: ++count1; break;
               case TripleType::II: ++count2; break;
               case TripleType::III: ++count3; break;
             }
           }
           return count1 == 2 && count2 == 2 && count3 == 1;
         }, detail), detail);

  // 7. Almost virtual classes against the filtered census.
  detail.clear();
  report(7, "almost virtual classes for n=2..8", check([&] {
           for (int n = 2; n <= 8; ++n) {
             if (almost_virtual_count(n, false) != n - 1) return false;
             if (almost_virtual_count(n, true) != n / 2) return false;
             if (n <= 7) {
               if (testutil::almost_virtual_orbit_count(n, false) != n - 1) return false;
               if (testutil::almost_virtual_orbit_count(n, true) != n / 2) return false;
             }
           }
           return true;
         }, detail), detail);

  // 8. Asymptotic band at n=10, tightening by n=30, within one second.
  detail.clear();
  report(8, "estimate ratio in band and tightening", check([&] {
           const auto start = std::chrono::steady_clock::now();
           const auto ratio = [](int n) {
             return std::exp(big_log(vcount(n)) - v_estimate_log(n));
           };
           const double r10 = ratio(10), r30 = ratio(30);
           if (!(r10 > 0.85 && r10 < 1.15)) return false;
           if (!(std::abs(r30 - 1.0) < std::abs(r10 - 1.0))) return false;
           const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
           return elapsed.count() < 1.0;
         }, detail), detail);

  // 9. Petal construction sizes and the quoted segment table.
  detail.clear();
  report(9, "petal construction and segment table", check([&] {
           if (petal_from_gauss(parse_gauss("O1+U2+U1+O2+")).petals != 7) return false;
           const auto code = parse_gauss("O1+U2+U1+O3-O2+U3-");
           if (petal_from_gauss(code).petals != 9) return false;
           const auto table = segment_table(code);
           const std::vector<std::vector<int>> expected{{1}, {2}, {3, 4}, {5}, {6, 7}, {8, 9}};
           if (table.segments != expected || table.total != 9 || table.has_dummy) return false;
           std::mt19937 rng(424242);
           for (int trial = 0; trial < 50; ++trial) {
             const int n = static_cast<int>(rng() % 9);
             const auto random = testutil::random_code(rng, n);
             if (petal_from_gauss(random).petals != petal_bound(n)) return false;
           }
           return true;
         }, detail), detail);

  // 10. Round trip, exhaustive to n=3 plus 500 random codes to n=8.
  detail.clear();
  report(10, "round trip exhaustive n<=3 and 500 random n<=8", check([&] {
           long long seen = 0;
           bool all = true;
           for (int n = 0; n <= 3; ++n)
             testutil::each_canonical_code(n, [&](const SignedGaussCode& code) {
               ++seen;
               if (gauss_from_petal(petal_from_gauss(code)) != code) all = false;
             });
           if (!all || seen != 1 + 4 + 48 + 960) return false;
           std::mt19937 rng(171717);
           for (int trial = 0; trial < 500; ++trial) {
             const int n = 1 + static_cast<int>(rng() % 8);
             const auto code = testutil::random_code(rng, n);
             if (gauss_from_petal(petal_from_gauss(code)) != code) return false;
           }
           return true;
         }, detail), detail);

  // 11. Opposite signs on the two second-occurrence candidates.
  detail.clear();
  report(11, "candidate opposition for odd m <= 101", check([&] {
           for (int m = 3; m <= 101; m += 2)
             for (int b = 1; b < m; ++b)
               for (int a = 1; a <= m; ++a) {
                 if (a == b || a == b + 1) continue;
                 if (crossing_sign(a, b, m) != -crossing_sign(a, b + 1, m)) return false;
                 if (crossing_sign(b, a, m) != -crossing_sign(b + 1, a, m)) return false;
               }
           return true;
         }, detail), detail);

  // 12. Determinism of renders and CLI output, pinned by golden files.
  detail.clear();
  report(12, "byte determinism and golden files", check([&] {
           const auto fig1 = parse_crossing_notation("{1243; (1,2),(1,3),(2,4),(3,4)}");
           const std::string crossing_svg = render_crossing_svg(fig1);
           if (crossing_svg != render_crossing_svg(fig1)) return false;
           const std::string golden_crossing =
               read_file(std::string(VMC_GOLDEN_DIR) + "/fig1_crossing.svg");
           if (crossing_svg != golden_crossing) return false;

           const auto table1 = petal_from_gauss(parse_gauss("O1+U2+U1+O3-O2+U3-"));
           const std::string petal_svg = render_petal_svg(table1);
           if (petal_svg != render_petal_svg(table1)) return false;
           const std::string golden_petal =
               read_file(std::string(VMC_GOLDEN_DIR) + "/table1_petal.svg");
           if (petal_svg != golden_petal) return false;

           for (const std::string& args :
                {std::string("--json count 7"), std::string("--json enumerate 4"),
                 std::string("--json petal O1+U2+U1+O3-O2+U3-"),
                 std::string("--json validate \"{1243; (1,2),(1,3),(2,4),(3,4)}\""),
                 std::string("--json render --crossing \"{12; }\"")}) {
             const auto first = run_cli(args);
             const auto second = run_cli(args);
             if (first.first != 0 || first != second || first.second.empty()) return false;
           }
           return true;
         }, detail), detail);

  std::printf("%d of 12 criteria passed\n", 12 - failures);
  return failures;
}
