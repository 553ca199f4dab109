#include "vmc/petal.hpp"

#include <map>
#include <stdexcept>

#include <json.hpp>

#include "vmc/errors.hpp"

namespace vmc {

int petal_bound(int n) {
  if (n < 0) throw std::invalid_argument("crossing count must be non-negative");
  return n % 2 != 0 ? 3 * n : 3 * n + 1;
}

int direction_index(int k, int m) {
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("petal count must be odd and positive");
  if (k < 1 || k > m) throw std::invalid_argument("segment index out of range");
  return static_cast<int>(static_cast<long long>(k - 1) * (m + 1) % (2LL * m));
}

int crossing_sign(int over_segment, int under_segment, int m) {
  if (over_segment == under_segment)
    throw std::invalid_argument("a segment cannot cross itself");
  const int t = ((direction_index(under_segment, m) - direction_index(over_segment, m)) % (2 * m) +
                 2 * m) %
                (2 * m);
  // Distinct segments are never parallel or antiparallel.
  if (t % m == 0) throw std::logic_error("parallel petal segments");
  return t < m ? +1 : -1;
}

SegmentTable segment_table(const SignedGaussCode& code) {
  validate_gauss(code);
  SegmentTable table;
  std::map<int, bool> seen;
  int next = 1;
  for (const auto& token : code.tokens) {
    auto [it, inserted] = seen.try_emplace(token.label, true);
    if (inserted) {
      table.segments.push_back({next});
      next += 1;
    } else {
      table.segments.push_back({next, next + 1});
      next += 2;
    }
  }
  const int n = code.crossings();
  table.has_dummy = n % 2 == 0;
  table.total = petal_bound(n);
  return table;
}

PetalDiagram petal_from_gauss(const SignedGaussCode& code) {
  const SignedGaussCode canon = canonicalize_gauss(code);
  const SegmentTable table = segment_table(canon);
  const int m = table.total;
  const int n = canon.crossings();

  std::vector<int> first_segment(n + 1, 0);
  std::vector<Passage> first_passage(n + 1, Passage::over);
  std::vector<Pair> second_segments(n + 1, {0, 0});
  std::vector<int> sign_of(n + 1, 0);
  for (std::size_t i = 0; i < canon.tokens.size(); ++i) {
    const GaussToken& token = canon.tokens[i];
    const auto& segs = table.segments[i];
    if (segs.size() == 1) {
      first_segment[token.label] = segs[0];
      first_passage[token.label] = token.passage;
      sign_of[token.label] = token.sign;
    } else {
      second_segments[token.label] = {segs[0], segs[1]};
    }
  }

  std::set<Pair> pairs;
  std::vector<int> over_of(n + 1, 0), under_of(n + 1, 0);
  for (int c = 1; c <= n; ++c) {
    const int a = first_segment[c];
    int chosen = 0;
    for (int x : {second_segments[c].first, second_segments[c].second}) {
      const int over = first_passage[c] == Passage::over ? a : x;
      const int under = first_passage[c] == Passage::over ? x : a;
      if (crossing_sign(over, under, m) == sign_of[c]) {
        // The two candidates carry opposite signs, so at most one matches.
        if (chosen != 0) throw std::logic_error("ambiguous opposition candidate");
        chosen = x;
        over_of[c] = over;
        under_of[c] = under;
      }
    }
    if (chosen == 0) throw std::logic_error("no opposition candidate matches the sign");
    pairs.insert(ordered_pair(a, chosen));
  }

  std::vector<bool> paired(m + 1, false);
  std::vector<int> listing;
  for (int c = 1; c <= n; ++c) {
    listing.push_back(over_of[c]);
    listing.push_back(under_of[c]);
    paired[over_of[c]] = paired[under_of[c]] = true;
  }
  for (int s = 1; s <= m; ++s)
    if (!paired[s]) listing.push_back(s);

  std::vector<int> heights(m, 0);
  for (int rank = 1; rank <= m; ++rank) heights[listing[rank - 1] - 1] = rank;

  PetalDiagram diagram{m, heights, pairs};
  if (!validate_petal(diagram).valid)
    throw std::logic_error("compiled petal diagram failed validation");
  return diagram;
}

SignedGaussCode gauss_from_petal(const PetalDiagram& diagram) {
  const PetalVerdict verdict = validate_petal(diagram);
  if (!verdict.valid) {
    std::string what = "invalid petal diagram";
    for (const auto& problem : verdict.problems) what += "; " + problem;
    throw std::invalid_argument(what);
  }

  std::map<int, int> partner;
  for (const auto& [a, b] : diagram.classical_pairs) {
    if (partner.count(a) != 0 || partner.count(b) != 0)
      throw unsupported_diagram("a segment carries more than one classical pairing");
    partner[a] = b;
    partner[b] = a;
  }

  SignedGaussCode code;
  std::map<Pair, int> label_of;
  for (int s = 1; s <= diagram.petals; ++s) {
    const auto it = partner.find(s);
    if (it == partner.end()) continue;
    const int t = it->second;
    const auto [lab, inserted] =
        label_of.try_emplace(ordered_pair(s, t), static_cast<int>(label_of.size()) + 1);
    const bool over_here = diagram.heights[s - 1] < diagram.heights[t - 1];
    const int over_segment = over_here ? s : t;
    const int under_segment = over_here ? t : s;
    code.tokens.push_back({lab->second, over_here ? Passage::over : Passage::under,
                           crossing_sign(over_segment, under_segment, diagram.petals)});
    (void)inserted;
  }
  validate_gauss(code);
  return code;
}

PetalVerdict validate_petal(const PetalDiagram& diagram) {
  PetalVerdict verdict;
  const int m = diagram.petals;
  if (m < 1)
    verdict.problems.push_back("petal count must be positive");
  else if (m % 2 == 0)
    verdict.problems.push_back("petal count must be odd");

  bool heights_ok = static_cast<int>(diagram.heights.size()) == m && m >= 1;
  if (!heights_ok) {
    verdict.problems.push_back("expected " + std::to_string(m) + " heights, got " +
                               std::to_string(diagram.heights.size()));
  } else {
    std::vector<bool> seen(m + 1, false);
    for (int h : diagram.heights) {
      if (h < 1 || h > m || seen[h]) {
        heights_ok = false;
        break;
      }
      seen[h] = true;
    }
    if (!heights_ok)
      verdict.problems.push_back("heights are not a permutation of 1.." + std::to_string(m));
  }

  bool pairs_ok = true;
  for (const auto& [a, b] : diagram.classical_pairs) {
    if (a < 1 || b < 1 || a > m || b > m) {
      verdict.problems.push_back("classical pair (" + std::to_string(a) + "," +
                                 std::to_string(b) + ") out of range");
      pairs_ok = false;
    } else if (a >= b) {
      verdict.problems.push_back("malformed classical pair (" + std::to_string(a) + "," +
                                 std::to_string(b) + ")");
      pairs_ok = false;
    }
  }

  if (verdict.problems.empty() && heights_ok && pairs_ok && m >= 2) {
    const MulticrossingSpec spec(m, diagram.heights, diagram.classical_pairs);
    const CrossingVerdict cv = validate_crossing(spec);
    verdict.forbidden_triples = cv.forbidden_triples;
    for (const auto& [i, j, k] : cv.forbidden_triples)
      verdict.problems.push_back("forbidden triple {" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) + "}");
  }

  verdict.valid = verdict.problems.empty();
  return verdict;
}

std::string petal_to_json(const PetalDiagram& diagram) {
  nlohmann::ordered_json j;
  j["petals"] = diagram.petals;
  j["heights"] = diagram.heights;
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& [a, b] : diagram.classical_pairs) pairs.push_back({a, b});
  j["classical_pairs"] = pairs;
  return j.dump(2) + "\n";
}

namespace {

int json_int(const nlohmann::ordered_json& value, const char* where) {
  if (!value.is_number_integer())
    throw std::invalid_argument(std::string(where) + " must be an integer");
  const auto wide = value.get<long long>();
  if (wide < -1000000 || wide > 1000000)
    throw std::invalid_argument(std::string(where) + " is out of range");
  return static_cast<int>(wide);
}

}  // namespace

PetalDiagram petal_from_json(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error("malformed JSON", e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!j.is_object()) throw std::invalid_argument("petal JSON must be an object");
  for (const auto& item : j.items()) {
    if (item.key() != "petals" && item.key() != "heights" && item.key() != "classical_pairs")
      throw std::invalid_argument("unexpected key '" + item.key() + "'");
  }
  if (!j.contains("petals") || !j.contains("heights") || !j.contains("classical_pairs"))
    throw std::invalid_argument("petal JSON needs petals, heights and classical_pairs");

  PetalDiagram diagram;
  diagram.petals = json_int(j["petals"], "'petals'");

  if (!j["heights"].is_array()) throw std::invalid_argument("'heights' must be an array");
  diagram.heights.clear();
  for (const auto& h : j["heights"]) diagram.heights.push_back(json_int(h, "height entry"));

  if (!j["classical_pairs"].is_array())
    throw std::invalid_argument("'classical_pairs' must be an array");
  for (const auto& entry : j["classical_pairs"]) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("classical pair entries must be two-element arrays");
    const int a = json_int(entry[0], "classical pair entry");
    const int b = json_int(entry[1], "classical pair entry");
    if (!diagram.classical_pairs.insert({a, b}).second)
      throw std::invalid_argument("duplicate classical pair (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
  }
  return diagram;
}

}  // namespace vmc
