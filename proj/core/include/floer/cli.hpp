#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace floer {

struct CliResult {
  int exit_code = 0;              // 0 clean, 1 violations/failures, 2 parse or usage errors
  std::string text;               // deterministic plain-text report
  nlohmann::json sidecar;         // machine-readable mirror of the report
};

// Runs one command (argv without the program name).  When --out PATH is
// given, the text report is also written to PATH and the sidecar to
// PATH.json.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace floer
