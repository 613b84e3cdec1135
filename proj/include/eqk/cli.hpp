#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqk/json_io.hpp"

namespace eqk {

/// One invocation: a job file (datum, optional subdivision, "args") and a verb.
struct JobSpec {
  Json spec;
  std::string verb;
  std::optional<std::string> out;
  Int box = 2;  // exponent bound for localization -> SR preimages
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 a check failed, 2 invalid input or error
  Json report;
};

const std::vector<std::string>& verbs();

/// Never throws; errors become {"error": {"code", "message"}} with exit code 2.
RunResult run(const JobSpec& job);

}  // namespace eqk
