#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "chiwb/budget.hpp"
#include "chiwb/field.hpp"

namespace chiwb {

struct SessionOptions {
  enum class Format { Text, Json };
  Format format = Format::Text;
  bool has_field_override = false;
  Field field_override = Field::rationals();
  std::uint64_t budget = budget::kDefaultLimit;
  std::uint64_t seed = 12345;
  bool timing = false;
};

struct SessionResult {
  std::string command;  // the statement as written
  std::string status;   // "ok" | "error" | "assertion_failed"
  nlohmann::ordered_json payload;
  double time_ms = 0.0;
};

struct RunOutcome {
  std::vector<SessionResult> results;
  int exit_code = 0;  // 0 ok, 1 input/command error, 2 assertion failure
};

RunOutcome run_session_text(const std::string& text, const SessionOptions& options);
RunOutcome run_session_file(const std::string& path, const SessionOptions& options);

std::string emit_text(const RunOutcome& outcome, const SessionOptions& options);
std::string emit_json(const RunOutcome& outcome, const SessionOptions& options);

}  // namespace chiwb
