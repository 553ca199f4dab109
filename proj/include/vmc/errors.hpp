#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vmc {

// Input text that could not be tokenized or assembled; carries the byte
// offset where scanning stopped.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

// A brute-force census was requested beyond the configured size bound.
class bound_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A structurally valid petal diagram outside the class the extractor handles.
class unsupported_diagram : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace vmc
