#pragma once

// Signed Gauss codes of virtual knots: one O and one U token per classical
// crossing, both carrying the crossing sign.  Virtual crossings are not
// recorded.  Single component only; the empty code is the unknot.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vmc {

enum class Passage : unsigned char { over, under };

struct GaussToken {
  int label = 0;      // positive
  Passage passage = Passage::over;
  int sign = +1;      // +1 or -1

  bool operator==(const GaussToken&) const = default;
};

struct SignedGaussCode {
  std::vector<GaussToken> tokens;

  int crossings() const { return static_cast<int>(tokens.size()) / 2; }

  bool operator==(const SignedGaussCode&) const = default;
};

enum class GaussViolation { label_count, passage, sign_mismatch };

class gauss_error : public std::runtime_error {
public:
  gauss_error(GaussViolation kind, int label, const std::string& what)
      : std::runtime_error(what), kind_(kind), label_(label) {}

  GaussViolation kind() const noexcept { return kind_; }
  int label() const noexcept { return label_; }

private:
  GaussViolation kind_;
  int label_;
};

// Tokens "[OU]<integer>[+-]", optional whitespace between them; empty input is
// the unknot.  Syntax problems raise parse_error with a byte offset; pairing
// violations raise gauss_error with the offending label.
SignedGaussCode parse_gauss(std::string_view text);

// Each label twice, once O and once U, same sign on both occurrences.
void validate_gauss(const SignedGaussCode& code);

// Labels renumbered 1,2,... in order of first appearance; token order kept.
SignedGaussCode canonicalize_gauss(const SignedGaussCode& code);

// Concatenated tokens, no whitespace; parse_gauss(format_gauss(c)) == c.
std::string format_gauss(const SignedGaussCode& code);

}  // namespace vmc
