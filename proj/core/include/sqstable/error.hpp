#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sqs {

enum class ErrorCode {
  InvalidArgument,
  SizeExceeded,
  NotAnIdeal,
  NotIdempotent,
  NotCommutative,
  NotFound,
  PreconditionFailed,
  UnknownElement,
  SyntaxError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the engine carries one of the codes above so the
/// CLI can map it onto an exit status and a short diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  /// what() without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace sqs
