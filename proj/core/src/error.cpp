#include "sqstable/error.hpp"

namespace sqs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SizeExceeded: return "SizeExceeded";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

}  // namespace sqs
