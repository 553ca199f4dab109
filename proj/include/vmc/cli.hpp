#pragma once

// Command implementations behind the vmc executable.  Each returns a
// CliReport; main() only parses arguments, prints the report and exits with
// its code (0 ok, 1 invalid input, 2 internal error).

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "vmc/counting.hpp"

namespace vmc::cli {

enum class Status { ok, invalid_input, internal_error };

struct CliReport {
  std::string command;
  Status status = Status::ok;
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
  std::vector<std::string> diagnostics;

  int exit_code() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

struct GlobalOptions {
  bool json = false;
  bool oracle = false;
  int bound = default_census_bound;
};

// Which count fields to emit; none selected means all of them.
struct CountSelection {
  bool bell = false;
  bool fragmented = false;
  bool types = false;
  bool almost = false;
  bool estimate = false;

  bool any() const { return bell || fragmented || types || almost || estimate; }
};

enum class RenderSubject { crossing, petal };

CliReport cmd_validate(const std::string& notation, const GlobalOptions& opts);
CliReport cmd_count(int n, const CountSelection& sel, const GlobalOptions& opts);
CliReport cmd_enumerate(int n, bool reflect, const GlobalOptions& opts);
CliReport cmd_petal(const std::string& gauss_text, const std::string& out_json_path,
                    const std::string& out_svg_path, const GlobalOptions& opts);
CliReport cmd_recover(const std::string& petal_json_path, const GlobalOptions& opts);
CliReport cmd_roundtrip(const std::string& gauss_text, const GlobalOptions& opts);
CliReport cmd_render(RenderSubject subject, const std::string& input,
                     const std::string& out_svg_path, const GlobalOptions& opts);

// One input per line; per-line reports collected into a single report whose
// order matches the input order.  Supported commands: validate, roundtrip.
CliReport run_batch(const std::string& command, std::istream& lines, const GlobalOptions& opts);

}  // namespace vmc::cli
