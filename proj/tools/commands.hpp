// Command-line front end: request parsing, dispatch, and rendering. Kept
// apart from main() so the test suite can drive it in-process.
#ifndef CLOSURES_TOOLS_COMMANDS_HPP
#define CLOSURES_TOOLS_COMMANDS_HPP

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "closures/grammar.hpp"

namespace closures::cli {

/// Exit codes: 0 success, 1 a checked mathematical condition failed (or a
/// bounded membership search came back empty), 2 usage or input errors.
enum ExitCode { kOk = 0, kConditionFails = 1, kUsage = 2 };

struct Request {
  std::string command;
  std::vector<std::string> vars;      // monomial-ideal commands
  std::optional<RingSpec> ring;       // characteristic-p commands
  std::string ideal;                  // canonical text
  std::string element;                // canonical text
  unsigned long e_max = 5;
  unsigned long n_max = 32;
  unsigned long q_max = 24;           // enumeration denominator bound
  long box = -1;                      // -1: derived from the ideal
  unsigned long w = 0;
  unsigned long at_q = 0;             // analytic independence at fixed q; 0 = off
  std::uint64_t seed = 1;
  std::size_t count = 50;             // random instances for the axiom suite
  std::size_t samples = 500;          // sampled subset pairs for axiom 4
  unsigned threads = 1;
  bool json = false;

  bool operator==(const Request&) const = default;
};

struct Response {
  int exit_code = kOk;
  std::string text;
  nlohmann::json payload;
};

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when --help is requested; carries the help text.
class help_requested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses program arguments (no argv[0]) into a canonical Request.
/// Throws usage_error (bad flags) or parse_error (bad grammar).
Request parse(const std::vector<std::string>& args);

/// Canonical argument list; parse(print(r)) == r.
std::vector<std::string> print(const Request& request);

Response execute(const Request& request);

std::string render(const Response& response, const Request& request);

/// Full pipeline with error reporting; returns the process exit code.
int run(const std::vector<std::string>& args);

}  // namespace closures::cli

#endif
