#include "vmc/crossing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "vmc/errors.hpp"

namespace vmc {

namespace {

void check_position(int n, int p, const char* what) {
  if (p < 1 || p > n)
    throw std::invalid_argument(std::string(what) + " position " + std::to_string(p) +
                                " out of range 1.." + std::to_string(n));
}

bool is_permutation_1_to_n(const std::vector<int>& v) {
  std::vector<char> seen(v.size(), 0);
  for (int x : v) {
    if (x < 1 || x > static_cast<int>(v.size()) || seen[x - 1]) return false;
    seen[x - 1] = 1;
  }
  return true;
}

std::vector<char> adjacency(const MulticrossingSpec& spec) {
  std::vector<char> adj(static_cast<std::size_t>(spec.n) * spec.n, 0);
  for (const auto& [a, b] : spec.classical_pairs) {
    adj[(a - 1) * spec.n + (b - 1)] = 1;
    adj[(b - 1) * spec.n + (a - 1)] = 1;
  }
  return adj;
}

}  // namespace

MulticrossingSpec::MulticrossingSpec(int n_, std::vector<int> heights_, std::set<Pair> pairs_)
    : n(n_), heights(std::move(heights_)) {
  if (n < 2) throw std::invalid_argument("arc count must be at least 2, got " + std::to_string(n));
  if (static_cast<int>(heights.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " heights, got " +
                                std::to_string(heights.size()));
  if (!is_permutation_1_to_n(heights))
    throw std::invalid_argument("heights are not a permutation of 1.." + std::to_string(n));
  for (const auto& [a, b] : pairs_) {
    check_position(n, a, "pair");
    check_position(n, b, "pair");
    if (a == b) throw std::invalid_argument("degenerate pair (" + std::to_string(a) + "," +
                                            std::to_string(b) + ")");
    classical_pairs.insert(ordered_pair(a, b));
  }
}

std::set<Pair> MulticrossingSpec::virtual_pairs() const {
  std::set<Pair> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (!classical_pairs.count({a, b})) out.insert({a, b});
  return out;
}

CrossingVerdict validate_crossing(const MulticrossingSpec& spec) {
  const auto adj = adjacency(spec);
  auto at = [&](int i, int j) { return adj[(i - 1) * spec.n + (j - 1)] != 0; };
  CrossingVerdict verdict;
  for (int i = 1; i <= spec.n; ++i)
    for (int j = i + 1; j <= spec.n; ++j)
      for (int k = j + 1; k <= spec.n; ++k) {
        int classical = int(at(i, j)) + int(at(i, k)) + int(at(j, k));
        if (classical == 2) verdict.forbidden_triples.push_back({i, j, k});
      }
  verdict.valid = verdict.forbidden_triples.empty();
  return verdict;
}

CrossingType::CrossingType(int n_, std::vector<std::vector<int>> parts_)
    : n(n_), parts(std::move(parts_)) {
  if (n < 1) throw std::invalid_argument("arc count must be positive");
  std::vector<char> seen(n, 0);
  int covered = 0;
  for (const auto& part : parts) {
    if (part.empty()) throw std::invalid_argument("empty part");
    for (int p : part) {
      check_position(n, p, "part");
      if (seen[p - 1]) throw std::invalid_argument("position " + std::to_string(p) + " repeated");
      seen[p - 1] = 1;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("parts do not cover 1.." + std::to_string(n));
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
}

bool CrossingType::operator<(const CrossingType& other) const {
  if (n != other.n) return n < other.n;
  return parts < other.parts;
}

CrossingType to_type(const MulticrossingSpec& spec) {
  const auto verdict = validate_crossing(spec);
  if (!verdict.valid) {
    const auto& t = verdict.forbidden_triples.front();
    throw std::invalid_argument("invalid virtual multicrossing: forbidden triple {" +
                                std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                std::to_string(t[2]) + "}");
  }
  // Classical pairs form disjoint cliques, so connected components are the classes.
  std::vector<int> cls(spec.n, -1);
  int classes = 0;
  const auto adj = adjacency(spec);
  for (int i = 1; i <= spec.n; ++i) {
    if (cls[i - 1] >= 0) continue;
    cls[i - 1] = classes;
    for (int j = i + 1; j <= spec.n; ++j)
      if (adj[(i - 1) * spec.n + (j - 1)]) cls[j - 1] = classes;
    ++classes;
  }
  std::vector<std::vector<int>> parts(classes);
  for (int p = 1; p <= spec.n; ++p) parts[cls[p - 1]].push_back(p);
  for (auto& part : parts)
    std::sort(part.begin(), part.end(),
              [&](int a, int b) { return spec.heights[a - 1] < spec.heights[b - 1]; });
  return CrossingType(spec.n, std::move(parts));
}

std::vector<PairCrossing> resolve(const CrossingType& type) {
  std::vector<int> part_of(type.n, -1), rank_in_part(type.n, 0);
  for (std::size_t pi = 0; pi < type.parts.size(); ++pi)
    for (std::size_t r = 0; r < type.parts[pi].size(); ++r) {
      part_of[type.parts[pi][r] - 1] = static_cast<int>(pi);
      rank_in_part[type.parts[pi][r] - 1] = static_cast<int>(r);
    }
  std::vector<PairCrossing> out;
  out.reserve(static_cast<std::size_t>(type.n) * (type.n - 1) / 2);
  for (int a = 1; a <= type.n; ++a)
    for (int b = a + 1; b <= type.n; ++b) {
      PairCrossing pc;
      pc.a = a;
      pc.b = b;
      pc.classical = part_of[a - 1] == part_of[b - 1];
      pc.over = pc.classical ? (rank_in_part[a - 1] < rank_in_part[b - 1] ? a : b) : 0;
      out.push_back(pc);
    }
  return out;
}

TripleType classify_triple(const CrossingType& type) {
  if (type.n != 3) throw std::invalid_argument("triple classification requires 3 arcs");
  switch (type.parts.size()) {
    case 1: return TripleType::I;
    case 2: return TripleType::II;
    default: return TripleType::III;
  }
}

bool is_almost_virtual(const CrossingType& type) {
  int pairs = 0;
  for (const auto& part : type.parts) {
    if (part.size() == 2)
      ++pairs;
    else if (part.size() != 1)
      return false;
  }
  return pairs == 1;
}

int almost_virtual_distance(const CrossingType& type, bool up_to_reflection) {
  if (!is_almost_virtual(type))
    throw std::invalid_argument("not an almost virtual crossing");
  for (const auto& part : type.parts)
    if (part.size() == 2) {
      int over = part[0], under = part[1];
      int d = ((under - over) % type.n + type.n) % type.n;
      if (up_to_reflection) d = std::min(d, type.n - d);
      return d;
    }
  throw std::logic_error("unreachable");
}

CrossingType rotate_type(const CrossingType& type, int r) {
  if (r < 0) throw std::invalid_argument("rotation must be non-negative");
  r %= type.n;
  auto parts = type.parts;
  for (auto& part : parts)
    for (int& p : part) p = (p - 1 + r) % type.n + 1;
  return CrossingType(type.n, std::move(parts));
}

CrossingType reflect_type(const CrossingType& type) {
  auto parts = type.parts;
  for (auto& part : parts)
    for (int& p : part) p = type.n + 1 - p;
  return CrossingType(type.n, std::move(parts));
}

CrossingType canonical_type(const CrossingType& type, bool include_reflection) {
  CrossingType best = rotate_type(type, 0);
  for (int r = 1; r < type.n; ++r) {
    CrossingType cand = rotate_type(type, r);
    if (cand < best) best = cand;
  }
  if (include_reflection) {
    const CrossingType mirrored = reflect_type(type);
    for (int r = 0; r < type.n; ++r) {
      CrossingType cand = rotate_type(mirrored, r);
      if (cand < best) best = cand;
    }
  }
  return best;
}

MulticrossingSpec representative_spec(const CrossingType& type) {
  std::vector<int> heights(type.n, 0);
  int rank = 1;
  std::set<Pair> classical;
  for (const auto& part : type.parts) {
    for (int p : part) heights[p - 1] = rank++;
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j)
        classical.insert(ordered_pair(part[i], part[j]));
  }
  return MulticrossingSpec(type.n, std::move(heights), std::move(classical));
}

namespace {

class Scanner {
public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw parse_error(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // Returns the integer and its lexeme.
  std::pair<long long, std::string> integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (pos_ == start) throw parse_error("expected an integer", pos_);
    std::string lexeme(text_.substr(start, pos_ - start));
    if (lexeme.size() > 7) throw parse_error("integer too large", start);
    return {std::stoll(lexeme), lexeme};
  }

  std::size_t position() const { return pos_; }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MulticrossingSpec parse_crossing_notation(std::string_view text) {
  Scanner sc(text);
  sc.expect('{');

  std::vector<long long> values;
  std::vector<std::string> lexemes;
  bool saw_comma = false;
  while (sc.peek() != ';') {
    auto [value, lexeme] = sc.integer();
    values.push_back(value);
    lexemes.push_back(lexeme);
    if (sc.peek() == ',') {
      sc.expect(',');
      saw_comma = true;
    } else if (sc.peek() != ';') {
      throw parse_error("expected ',' or ';' after height", sc.position());
    }
  }
  sc.expect(';');

  std::vector<int> heights;
  if (values.empty()) throw parse_error("empty height list", sc.position());
  if (!saw_comma && values.size() == 1 && lexemes[0].size() > 1) {
    for (char c : lexemes[0]) heights.push_back(c - '0');  // digit form, n <= 9
  } else {
    for (long long v : values) heights.push_back(static_cast<int>(v));
  }
  const int n = static_cast<int>(heights.size());

  std::set<Pair> virtual_pairs;
  while (sc.peek() != '}') {
    sc.expect('(');
    long long a = sc.integer().first;
    sc.expect(',');
    long long b = sc.integer().first;
    sc.expect(')');
    if (a < 1 || a > n || b < 1 || b > n)
      throw std::invalid_argument("pair (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") out of range 1.." + std::to_string(n));
    if (a == b)
      throw std::invalid_argument("degenerate pair (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
    Pair p = ordered_pair(static_cast<int>(a), static_cast<int>(b));
    if (!virtual_pairs.insert(p).second)
      throw std::invalid_argument("duplicate pair (" + std::to_string(p.first) + "," +
                                  std::to_string(p.second) + ")");
    if (sc.peek() == ',') sc.expect(',');
    else if (sc.peek() != '}') throw parse_error("expected ',' or '}' after pair", sc.position());
  }
  sc.expect('}');
  if (!sc.at_end()) throw parse_error("trailing input after '}'", sc.position());

  std::set<Pair> classical;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (!virtual_pairs.count({a, b})) classical.insert({a, b});
  return MulticrossingSpec(n, std::move(heights), std::move(classical));
}

std::string format_crossing_notation(const MulticrossingSpec& spec) {
  std::string out = "{";
  if (spec.n <= 9) {
    for (int h : spec.heights) out += static_cast<char>('0' + h);
  } else {
    for (int i = 0; i < spec.n; ++i) {
      if (i) out += ',';
      out += std::to_string(spec.heights[i]);
    }
  }
  out += "; ";
  bool first = true;
  for (const auto& [a, b] : spec.virtual_pairs()) {
    if (!first) out += ',';
    first = false;
    out += '(' + std::to_string(a) + ',' + std::to_string(b) + ')';
  }
  out += '}';
  return out;
}

}  // namespace vmc
