#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfcycles::app {

enum class Command { count, enumerate, check, completions, profile, sample, moments, stein, tv };
enum class Format { json, csv, text };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int usage = 2;
inline constexpr int guard = 3;
inline constexpr int consistency = 4;
}  // namespace exit_code

struct RunConfig {
  Command command = Command::count;
  std::optional<int> n;
  std::optional<int> d;
  std::optional<int> k;
  std::optional<std::string> v;    // occupied spots, "2,3"
  std::optional<std::string> seq;  // positional sequence for check/profile
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  std::string method;
  std::optional<Format> format;
  std::optional<std::string> out_path;
  bool force = false;
  bool exact = false;
  std::optional<std::string> c_b_divisor;  // stein: c_k^B = n / (divisor k)
};

struct RunResult {
  int exit_code = exit_code::ok;
  std::string output;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws UsageError when the config violates a command's invariants.
void validate(const RunConfig& config);

/// Dispatches to the owning module. Never throws; failures come back as a
/// JSON error object with a nonzero exit code.
RunResult run(const RunConfig& config);

/// Parses argv-style arguments (without the program name). `env_seed` is the
/// fallback seed, normally from PFCYCLES_SEED. Usage errors and help text
/// come back as a RunResult.
RunResult run_command_line(const std::vector<std::string>& args,
                           std::optional<std::uint64_t> env_seed = std::nullopt);

}  // namespace pfcycles::app
