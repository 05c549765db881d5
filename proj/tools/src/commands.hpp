#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace superreal::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "superreal-report/1";

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2 };

// Bad flags or inputs that cannot be resolved; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string family = "gl";
  int m = 0;
  std::optional<int> n;
  std::optional<int> t;
  std::string structure = "omega";
  std::string kind = "standard";
  int pairs = 1;
  int max_pairs = 3;
  int samples = 10;
  std::optional<std::uint64_t> seed;
  int sign = 1;
  int jobs = 1;
  bool certificate = false;
  bool bijection = false;
  std::string output;
};

struct CommandResult {
  Json report;
  bool passed = true;
  std::string summary;
};

CommandResult cmd_build(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_group_check(const RunConfig& cfg);

}  // namespace superreal::cli
