#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "addcollatz/cli.hpp"

namespace addcollatz::testing {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

inline CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

/// Envelope without the timing field, which differs between runs.
inline nlohmann::json stable_envelope(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  j.erase("elapsed_ms");
  return j;
}

inline nlohmann::json load_golden(const std::string& name) {
  std::ifstream in(std::string(ADDCOLLATZ_GOLDEN_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing golden file " + name);
  return nlohmann::json::parse(in);
}

struct GoldenCase {
  std::vector<std::string> args;
  const char* file;
};

inline const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases{
      {{"count", "8", "3", "--method", "all"}, "count_8_3_all.json"},
      {{"bounds", "8"}, "bounds_8.json"},
      {{"classify", "4", "2", "2"}, "classify_4_2_2.json"},
  };
  return cases;
}

/// One invocation of every subcommand that prints an envelope.
inline const std::vector<std::vector<std::string>>& envelope_commands() {
  static const std::vector<std::vector<std::string>> cmds{
      {"traj", "3", "2", "1"},
      {"classify", "3", "2", "1"},
      {"classify", "4", "2", "2"},
      {"subtraj", "3", "2", "5"},
      {"orbits", "8", "3"},
      {"count", "8", "3", "--method", "all"},
      {"bounds", "8"},
      {"pq", "3", "5", "2"},
      {"gen", "1", "2", "3", "1"},
      {"gen", "2", "4", "1", "1"},
      {"gen", "1", "2", "3", "27", "--cap", "10"},
      {"gen-subtraj", "1", "2", "3", "3", "--count", "2"},
      {"gen-reach", "2", "4", "1", "1"},
      {"claims", "--claim", "P4", "--limit", "2"},
  };
  return cmds;
}

}  // namespace addcollatz::testing
