#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sqstable/error.hpp"
#include "sqstable/expr.hpp"

namespace sqs::cli {

/// Error code SyntaxError with the byte offset and the set of tokens that
/// would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, std::string_view found);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Integer-valued names allowed in place of integer literals, e.g. {"n", 5}
/// for family templates such as "Zi(n)".
using Bindings = std::map<std::string, std::int64_t, std::less<>>;

RingExpr parse_ring_expr(std::string_view text, const Bindings& bindings = {});
IdealSpec parse_ideal_spec(std::string_view text);

}  // namespace sqs::cli
