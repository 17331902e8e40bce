#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "vinberg/graded_lie.hpp"
#include "vinberg/scalar.hpp"

namespace vinberg::cli {

using Json = nlohmann::ordered_json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 2;
inline constexpr int exit_certification = 3;

/// Parsed command line. Unset optionals fall back to the --in document and
/// then to command defaults.
struct RunConfig {
  std::string command;
  std::optional<std::vector<int>> dims;
  std::optional<int> m;
  std::optional<std::vector<int>> ranks;
  std::optional<std::vector<long>> degrees;
  std::optional<int> genus;
  std::optional<int> phi_plus_rank;
  std::optional<int> phi_minus_rank;
  std::optional<std::string> type;
  std::optional<int> n;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
  std::string format = "json";
  std::optional<std::string> in;
  /// verify only: name of a deliberately broken property.
  std::optional<std::string> inject_fault;
};

struct RunResult {
  int exit_code = exit_ok;
  Json report;
  std::string error;
};

/// Executes one command. Never throws: validation problems map to exit 2,
/// failed certifications to exit 3.
RunResult run(const RunConfig& config);

/// Renders a report as JSON (pretty, trailing newline) or as key: value text.
std::string render(const Json& report, const std::string& format);

/// Exact scalar as a JSON integer when it fits, otherwise "p/q".
Json to_json(const Scalar& s);
Json to_json(const Matrix& a);
/// Accepts integers and "p/q" strings; `field` names the input in errors.
Scalar scalar_from_json(const Json& j, const std::string& field);
Matrix matrix_from_json(const Json& j, const std::string& field);

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // first few only
};

struct VerifyOptions {
  int max_n = 8;
  std::uint64_t seed = 0;
  std::string fault;
};

/// Fault names accepted by run_verify.
std::vector<std::string> known_faults();

/// Runs every property over the profile sweep (n <= max_n, m <= 4).
std::vector<PropertyResult> run_verify(const VerifyOptions& options);

/// Entry point used by the executable.
int main_entry(int argc, char** argv);

}  // namespace vinberg::cli
