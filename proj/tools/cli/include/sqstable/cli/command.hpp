#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqstable/error.hpp"

namespace sqs::cli {

enum class Verb { Axioms, Describe, Classify, Ideals, Check, Verify, Example41, Search };
enum class Format { Text, Json };

std::string_view to_string(Verb verb);

/// A parsed invocation. Expression fields hold canonical text so that two
/// spellings of the same command compare equal.
struct Command {
  Verb verb = Verb::Describe;
  /// Predicate name for check, theorem selector ("all" or "T33,C34") for verify.
  std::string target;
  std::string ring;
  std::string ideal;
  std::string element;
  std::string corpus;
  /// Ring template such as "Zi(n)" with `param` free.
  std::string family;
  std::string param = "n";
  /// Search parameters or example41 moduli, in the order given.
  std::vector<std::int64_t> values;
  std::string if_predicate;
  std::string unless_predicate;
  std::size_t max_size = 4096;
  std::optional<unsigned> threads;
  Format format = Format::Text;
  bool strict = false;

  friend bool operator==(const Command&, const Command&) = default;
};

/// Bad flags, missing arguments or unknown verbs; the message ends with the
/// relevant usage text.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message) : Error(ErrorCode::InvalidArgument, message) {}
};

/// --help anywhere on the command line.
struct HelpRequested {
  std::string text;
};

/// Arguments exclude the program name.
Command parse_command(const std::vector<std::string>& args);

std::vector<std::string> canonical_args(const Command& command);
/// canonical_args joined by spaces; every argument is free of whitespace.
std::string canonical(const Command& command);

/// Writes the report to `out` and diagnostics to `err`. Returns 0, 1 (only
/// with --strict, on a false predicate or an inconsistent verdict) or 2 on
/// errors.
int run(const Command& command, std::ostream& out, std::ostream& err);

/// parse_command + run with usage and error reporting.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqs::cli
