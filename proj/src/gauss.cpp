#include "vmc/gauss.hpp"

#include <map>

#include "vmc/errors.hpp"

namespace vmc {

SignedGaussCode parse_gauss(std::string_view text) {
  SignedGaussCode code;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
      ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    GaussToken token;
    if (text[pos] == 'O')
      token.passage = Passage::over;
    else if (text[pos] == 'U')
      token.passage = Passage::under;
    else
      throw parse_error("expected 'O' or 'U'", pos);
    ++pos;

    const std::size_t label_start = pos;
    long long label = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      label = label * 10 + (text[pos] - '0');
      if (label > 1000000) throw parse_error("label too large", label_start);
      ++pos;
    }
    if (pos == label_start) throw parse_error("expected a crossing label", pos);
    if (label == 0) throw parse_error("label must be positive", label_start);
    token.label = static_cast<int>(label);

    if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
      throw parse_error("expected '+' or '-'", pos);
    token.sign = text[pos] == '+' ? +1 : -1;
    ++pos;

    code.tokens.push_back(token);
    skip_ws();
  }
  validate_gauss(code);
  return code;
}

void validate_gauss(const SignedGaussCode& code) {
  std::vector<int> order;  // labels by first appearance
  std::map<int, std::vector<const GaussToken*>> by_label;
  for (const auto& token : code.tokens) {
    auto [it, inserted] = by_label.try_emplace(token.label);
    if (inserted) order.push_back(token.label);
    it->second.push_back(&token);
  }
  for (int label : order) {
    const auto& occ = by_label[label];
    if (occ.size() != 2)
      throw gauss_error(GaussViolation::label_count, label,
                        "label " + std::to_string(label) + " appears " +
                            std::to_string(occ.size()) + " times, expected 2");
    if (occ[0]->passage == occ[1]->passage)
      throw gauss_error(GaussViolation::passage, label,
                        "label " + std::to_string(label) +
                            " needs one over and one under passage");
    if (occ[0]->sign != occ[1]->sign)
      throw gauss_error(GaussViolation::sign_mismatch, label,
                        "label " + std::to_string(label) +
                            " carries different signs on its two occurrences");
  }
}

SignedGaussCode canonicalize_gauss(const SignedGaussCode& code) {
  validate_gauss(code);
  std::map<int, int> renumber;
  SignedGaussCode out = code;
  for (auto& token : out.tokens) {
    auto [it, inserted] = renumber.try_emplace(token.label, static_cast<int>(renumber.size()) + 1);
    token.label = it->second;
  }
  return out;
}

std::string format_gauss(const SignedGaussCode& code) {
  std::string out;
  for (const auto& token : code.tokens) {
    out += token.passage == Passage::over ? 'O' : 'U';
    out += std::to_string(token.label);
    out += token.sign > 0 ? '+' : '-';
  }
  return out;
}

}  // namespace vmc
