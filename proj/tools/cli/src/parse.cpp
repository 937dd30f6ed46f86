#include "sqstable/cli/parse.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace sqs::cli {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += i + 1 == expected.size() ? " or " : ", ";
    out += '"' + expected[i] + '"';
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Bindings& bindings) : text_(text), bindings_(bindings) {}

  RingExpr whole_expr() {
    RingExpr e = expr();
    finish();
    return e;
  }

  IdealSpec whole_ideal() {
    IdealSpec s = ideal();
    finish();
    return s;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected, std::size_t at) const {
    throw ParseError(at, std::move(expected), at < text_.size() ? text_.substr(at, 1) : std::string_view{});
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail({"end of input"}, pos_);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail({std::string(1, c)}, pos_);
    ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      const std::string name = word();
      if (auto it = bindings_.find(name); it != bindings_.end()) return it->second;
      pos_ = start;
      fail({"integer"}, start);
    }
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{} || end != text_.data() + pos_) {
      pos_ = start;
      fail({"integer"}, start);
    }
    return value;
  }

  /// Balanced text up to the next top-level ',' or ')'.
  std::string element() {
    skip_ws();
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(' || c == '[') {
        ++depth;
      } else if (c == ')' || c == ']') {
        if (depth == 0) break;
        --depth;
      } else if (c == ',' && depth == 0) {
        break;
      }
      ++pos_;
    }
    std::string literal = strip_whitespace(text_.substr(start, pos_ - start));
    if (literal.empty() || depth != 0) fail({"element"}, start);
    return literal;
  }

  IdealSpec ideal() {
    const std::size_t start = (skip_ws(), pos_);
    const std::string w = word();
    if (w == "zero") return IdealSpec::zero();
    if (w == "all") return IdealSpec::all();
    if (w == "jacobson") return IdealSpec::jacobson();
    if (w == "gen") {
      expect('(');
      std::vector<std::string> gens{element()};
      while (accept(',')) gens.push_back(element());
      expect(')');
      return IdealSpec::generated(std::move(gens));
    }
    fail({"zero", "all", "jacobson", "gen("}, start);
  }

  RingExpr expr() {
    const std::size_t start = (skip_ws(), pos_);
    const std::string w = word();
    auto open = [&] { expect('('); };
    if (w == "Z" || w == "Zi") {
      open();
      const std::int64_t n = integer();
      expect(')');
      return w == "Z" ? RingExpr::cyclic(n) : RingExpr::gaussian(n);
    }
    if (w == "M" || w == "T") {
      open();
      const std::int64_t k = integer();
      expect(',');
      RingExpr base = expr();
      expect(')');
      return w == "M" ? RingExpr::matrix(k, std::move(base)) : RingExpr::triangular(k, std::move(base));
    }
    if (w == "prod") {
      open();
      std::vector<RingExpr> factors{expr()};
      while (accept(',')) factors.push_back(expr());
      expect(')');
      return RingExpr::product(std::move(factors));
    }
    if (w == "quot") {
      open();
      RingExpr base = expr();
      expect(',');
      IdealSpec spec = ideal();
      expect(')');
      return RingExpr::quotient(std::move(base), std::move(spec));
    }
    if (w == "corner") {
      open();
      RingExpr base = expr();
      expect(',');
      std::string e = element();
      expect(')');
      return RingExpr::corner(std::move(base), std::move(e));
    }
    fail({"Z(", "Zi(", "M(", "T(", "prod(", "quot(", "corner("}, start);
  }

  std::string_view text_;
  const Bindings& bindings_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, std::string_view found)
    : Error(ErrorCode::SyntaxError,
            "syntax error at offset " + std::to_string(offset) + ": expected " + join_expected(expected) +
                (found.empty() ? std::string(" before end of input") : ", found '" + std::string(found) + "'")),
      offset_(offset),
      expected_(std::move(expected)) {}

RingExpr parse_ring_expr(std::string_view text, const Bindings& bindings) {
  return Parser(text, bindings).whole_expr();
}

IdealSpec parse_ideal_spec(std::string_view text) {
  static const Bindings none;
  return Parser(text, none).whole_ideal();
}

}  // namespace sqs::cli
