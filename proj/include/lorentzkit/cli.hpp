#ifndef LORENTZKIT_CLI_HPP
#define LORENTZKIT_CLI_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lorentzkit/lattice.hpp"
#include "lorentzkit/lorentz.hpp"

namespace lorentzkit::cli {

/// Exit-code contract of the command-line tool.
enum ExitCode : int {
  kHolds = 0,         // CERTIFIED / property holds / plain computation succeeded
  kRefuted = 1,       // REFUTED / property does not hold
  kInconclusive = 2,  // INCONCLUSIVE
  kInputError = 3,    // unreadable input, schema violation or failed precondition
};

enum class Subcommand {
  CheckAdmissible,
  Signature,
  ConjugateForm,
  Evaluate,
  ClassifyPair,
  Distance,
  Reflect,
  Assemble,
  CertifyQa,
  Integrality,
  TraceProbe,
  Nonsimilar,
  GpsCheck,
};

std::string_view subcommand_name(Subcommand s);
std::optional<Subcommand> parse_subcommand(std::string_view name);
const std::vector<Subcommand>& all_subcommands();

struct CommandRequest {
  Subcommand subcommand = Subcommand::CheckAdmissible;
  /// Raw JSON input document.
  std::string input;
  unsigned precision_bits = kDefaultPrecisionBits;
  std::size_t word_cap = kDefaultWordCap;
};

struct CommandResult {
  int exit_code = kInputError;
  /// One JSON document, keys sorted, newline-terminated.
  std::string document;
};

/// Never throws for bad input: failures become exit code 3 with a
/// diagnostic {"error": {"code", "field", "message"}} document.
CommandResult run(const CommandRequest& request);

/// Diagnostic document for failures detected before dispatch (bad flags,
/// unreadable files).
CommandResult input_error(std::string_view subcommand, std::string_view code,
                          std::string_view field, std::string_view message);

}  // namespace lorentzkit::cli

#endif  // LORENTZKIT_CLI_HPP
