#include "vmc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "vmc/errors.hpp"
#include "vmc/petal.hpp"
#include "vmc/render.hpp"

namespace vmc::cli {

namespace {

using nlohmann::ordered_json;

const char* status_name(Status status) {
  switch (status) {
    case Status::ok: return "ok";
    case Status::invalid_input: return "invalid-input";
    case Status::internal_error: return "internal-error";
  }
  return "internal-error";
}

template <typename Fn>
CliReport guarded(const std::string& command, Fn&& fn) {
  CliReport report;
  report.command = command;
  try {
    fn(report);
  } catch (const bound_exceeded& e) {
    report.status = Status::invalid_input;
    report.diagnostics.push_back(e.what());
  } catch (const unsupported_diagram& e) {
    report.status = Status::invalid_input;
    report.diagnostics.push_back(e.what());
  } catch (const gauss_error& e) {
    report.status = Status::invalid_input;
    report.diagnostics.push_back(e.what());
  } catch (const parse_error& e) {
    report.status = Status::invalid_input;
    report.diagnostics.push_back(e.what());
  } catch (const std::invalid_argument& e) {
    report.status = Status::invalid_input;
    report.diagnostics.push_back(e.what());
  } catch (const std::exception& e) {
    report.status = Status::internal_error;
    report.diagnostics.push_back(e.what());
  }
  return report;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
}

ordered_json pair_array(const std::set<Pair>& pairs) {
  auto arr = ordered_json::array();
  for (const auto& [a, b] : pairs) arr.push_back({a, b});
  return arr;
}

ordered_json triple_array(const std::vector<std::array<int, 3>>& triples) {
  auto arr = ordered_json::array();
  for (const auto& [i, j, k] : triples) arr.push_back({i, j, k});
  return arr;
}

const char* triple_name(TripleType t) {
  switch (t) {
    case TripleType::I: return "I";
    case TripleType::II: return "II";
    case TripleType::III: return "III";
  }
  return "?";
}

ordered_json type_entry(const CrossingType& type) {
  ordered_json entry;
  entry["notation"] = format_crossing_notation(representative_spec(type));
  entry["classes"] = type.parts;
  long long classical = 0;
  for (const auto& part : type.parts) {
    const long long size = static_cast<long long>(part.size());
    classical += size * (size - 1) / 2;
  }
  entry["classical_pairs"] = classical;
  if (is_almost_virtual(type)) {
    entry["distance"] = almost_virtual_distance(type);
    entry["reflection_distance"] = almost_virtual_distance(type, true);
  }
  auto tags = ordered_json::array();
  if (type.n == 3) tags.push_back(triple_name(classify_triple(type)));
  if (classical == 0) tags.push_back("all-virtual");
  if (type.parts.size() == 1 && type.n >= 2) tags.push_back("classical");
  if (is_almost_virtual(type)) tags.push_back("almost-virtual");
  entry["tags"] = tags;
  return entry;
}

}  // namespace

int CliReport::exit_code() const {
  switch (status) {
    case Status::ok: return 0;
    case Status::invalid_input: return 1;
    case Status::internal_error: return 2;
  }
  return 2;
}

ordered_json CliReport::to_json() const {
  ordered_json j;
  j["command"] = command;
  j["status"] = status_name(status);
  j["payload"] = payload;
  j["diagnostics"] = diagnostics;
  return j;
}

std::string CliReport::to_text() const {
  std::string out = command + ": " + status_name(status) + "\n";
  if (!payload.empty()) out += payload.dump(2) + "\n";
  for (const auto& d : diagnostics) out += "note: " + d + "\n";
  return out;
}

CliReport cmd_validate(const std::string& notation, const GlobalOptions&) {
  return guarded("validate", [&](CliReport& r) {
    const MulticrossingSpec spec = parse_crossing_notation(notation);
    const CrossingVerdict verdict = validate_crossing(spec);
    r.payload["notation"] = format_crossing_notation(spec);
    r.payload["n"] = spec.n;
    r.payload["valid"] = verdict.valid;
    if (!verdict.valid) {
      r.status = Status::invalid_input;
      r.payload["forbidden_triples"] = triple_array(verdict.forbidden_triples);
      for (const auto& [i, j, k] : verdict.forbidden_triples)
        r.diagnostics.push_back("forbidden triple {" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) + "}");
      return;
    }
    const CrossingType type = to_type(spec);
    r.payload["classes"] = type.parts;
    const long long total = static_cast<long long>(spec.n) * (spec.n - 1) / 2;
    const long long classical = static_cast<long long>(spec.classical_pairs.size());
    r.payload["classical_pairs"] = classical;
    r.payload["virtual_pairs"] = total - classical;
    if (spec.n == 3) r.payload["triple_type"] = triple_name(classify_triple(type));
    r.payload["almost_virtual"] = is_almost_virtual(type);
    if (is_almost_virtual(type)) {
      r.payload["distance"] = almost_virtual_distance(type);
      r.payload["reflection_distance"] = almost_virtual_distance(type, true);
    }
  });
}

CliReport cmd_count(int n, const CountSelection& sel, const GlobalOptions& opts) {
  return guarded("count", [&](CliReport& r) {
    if (n < 2) throw std::invalid_argument("count requires n >= 2");
    CountSelection s = sel;
    if (!s.any()) s = {true, true, true, true, true};
    const CountReport rep = count_report(n);
    r.payload["n"] = n;
    if (s.bell) r.payload["bell"] = rep.bell.str();
    if (s.fragmented) r.payload["fragmented"] = rep.fragmented.str();
    if (s.types) {
      r.payload["vcount"] = rep.vcount.str();
      ordered_json fix;
      for (const auto& [d, f] : rep.fix_by_divisor) fix[std::to_string(d)] = f.str();
      r.payload["fix_by_divisor"] = fix;
    }
    if (s.almost) {
      r.payload["almost_virtual"] = {{"rotation", almost_virtual_count(n, false)},
                                     {"rotation_reflection", almost_virtual_count(n, true)}};
    }
    if (s.estimate) {
      r.payload["estimate_log"] = rep.estimate_log;
      r.payload["estimate"] = rep.estimate;
      r.payload["ratio"] = rep.ratio;
    }
    if (opts.oracle) {
      if (n > opts.bound)
        throw bound_exceeded("oracle census for n=" + std::to_string(n) +
                             " exceeds brute-force bound " + std::to_string(opts.bound));
      const auto census = enumerate_types(n, false, opts.bound);
      if (BigInt(census.size()) != rep.vcount)
        throw std::logic_error("census disagrees with the Burnside count");
      for (const auto& [d, f] : rep.fix_by_divisor)
        if (BigInt(count_fixed_by_rotation(n, d)) != f)
          throw std::logic_error("fixed-point census disagrees at d=" + std::to_string(d));
      ordered_json oracle;
      oracle["vcount"] = "ok";
      oracle["fix"] = "ok";
      if (n <= 7) {
        if (BigInt(count_valid_pair_patterns(n)) != rep.bell)
          throw std::logic_error("pattern census disagrees with the Bell number");
        oracle["bell"] = "ok";
      } else {
        oracle["bell"] = "skipped";
      }
      r.payload["oracle"] = oracle;
    }
  });
}

CliReport cmd_enumerate(int n, bool reflect, const GlobalOptions& opts) {
  return guarded("enumerate", [&](CliReport& r) {
    if (n < 1) throw std::invalid_argument("enumerate requires n >= 1");
    const auto types = enumerate_types(n, reflect, opts.bound);
    if (!reflect && BigInt(types.size()) != vcount(n))
      throw std::logic_error("census disagrees with the Burnside count");
    r.payload["n"] = n;
    r.payload["reflect"] = reflect;
    r.payload["count"] = types.size();
    auto entries = ordered_json::array();
    for (const auto& type : types) entries.push_back(type_entry(type));
    r.payload["types"] = entries;
  });
}

CliReport cmd_petal(const std::string& gauss_text, const std::string& out_json_path,
                    const std::string& out_svg_path, const GlobalOptions&) {
  return guarded("petal", [&](CliReport& r) {
    const SignedGaussCode code = parse_gauss(gauss_text);
    const SignedGaussCode canon = canonicalize_gauss(code);
    const PetalDiagram diagram = petal_from_gauss(canon);
    r.payload["code"] = format_gauss(canon);
    r.payload["crossings"] = canon.crossings();
    r.payload["petals"] = diagram.petals;
    r.payload["heights"] = diagram.heights;
    r.payload["classical_pairs"] = pair_array(diagram.classical_pairs);
    if (!out_json_path.empty()) {
      write_file(out_json_path, petal_to_json(diagram));
      r.payload["json_written"] = out_json_path;
    }
    if (!out_svg_path.empty()) {
      write_file(out_svg_path, render_petal_svg(diagram));
      r.payload["svg_written"] = out_svg_path;
    }
  });
}

CliReport cmd_recover(const std::string& petal_json_path, const GlobalOptions&) {
  return guarded("recover", [&](CliReport& r) {
    const PetalDiagram diagram = petal_from_json(read_file(petal_json_path));
    const PetalVerdict verdict = validate_petal(diagram);
    r.payload["valid"] = verdict.valid;
    if (!verdict.valid) {
      r.status = Status::invalid_input;
      r.diagnostics = verdict.problems;
      return;
    }
    const SignedGaussCode code = gauss_from_petal(diagram);
    r.payload["petals"] = diagram.petals;
    r.payload["code"] = format_gauss(code);
    r.payload["crossings"] = code.crossings();
  });
}

CliReport cmd_roundtrip(const std::string& gauss_text, const GlobalOptions&) {
  return guarded("roundtrip", [&](CliReport& r) {
    const SignedGaussCode canon = canonicalize_gauss(parse_gauss(gauss_text));
    const PetalDiagram diagram = petal_from_gauss(canon);
    const SignedGaussCode back = gauss_from_petal(diagram);
    r.payload["code"] = format_gauss(canon);
    r.payload["petals"] = diagram.petals;
    const bool match = back == canon;
    r.payload["match"] = match;
    if (!match) {
      r.status = Status::internal_error;
      r.payload["recovered"] = format_gauss(back);
      r.diagnostics.push_back("recovered code differs from the input");
    }
  });
}

CliReport cmd_render(RenderSubject subject, const std::string& input,
                     const std::string& out_svg_path, const GlobalOptions&) {
  return guarded("render", [&](CliReport& r) {
    std::string svg;
    if (subject == RenderSubject::crossing) {
      r.payload["subject"] = "crossing";
      svg = render_crossing_svg(parse_crossing_notation(input));
    } else {
      r.payload["subject"] = "petal";
      svg = render_petal_svg(petal_from_json(read_file(input)));
    }
    if (out_svg_path.empty()) {
      r.payload["svg"] = svg;
    } else {
      write_file(out_svg_path, svg);
      r.payload["written"] = out_svg_path;
      r.payload["bytes"] = svg.size();
    }
  });
}

CliReport run_batch(const std::string& command, std::istream& lines, const GlobalOptions& opts) {
  CliReport report;
  report.command = command + "-batch";
  if (command != "validate" && command != "roundtrip") {
    report.status = Status::invalid_input;
    report.diagnostics.push_back("batch mode supports validate and roundtrip");
    return report;
  }
  auto results = ordered_json::array();
  int total = 0, passed = 0, failed = 0;
  Status worst = Status::ok;
  std::string line;
  while (std::getline(lines, line)) {
    ++total;
    const CliReport sub =
        command == "validate" ? cmd_validate(line, opts) : cmd_roundtrip(line, opts);
    ordered_json entry;
    entry["line"] = total;
    entry["input"] = line;
    entry["status"] = status_name(sub.status);
    entry["payload"] = sub.payload;
    if (!sub.diagnostics.empty()) entry["diagnostics"] = sub.diagnostics;
    results.push_back(entry);
    sub.status == Status::ok ? ++passed : ++failed;
    worst = std::max(worst, sub.status);
  }
  report.status = worst;
  report.payload["total"] = total;
  report.payload["ok"] = passed;
  report.payload["failed"] = failed;
  report.payload["results"] = results;
  return report;
}

}  // namespace vmc::cli
