#include "sqstable/cli/corpus_file.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sqstable/cli/parse.hpp"
#include "sqstable/error.hpp"

namespace sqs::cli {

namespace {

class Reader {
 public:
  Reader(std::string_view text, std::string_view origin) : text_(text), origin_(origin) {}

  CorpusSpec read() {
    CorpusSpec spec;
    bool seen_rings = false, seen_theorems = false, seen_include = false;
    for (skip(); pos_ < text_.size(); skip()) {
      const std::size_t key_line = line_;
      const std::string key = bare_key();
      skip_inline();
      if (pos_ >= text_.size() || text_[pos_] != '=') error("expected '=' after key '" + key + "'");
      ++pos_;
      const std::vector<std::string> values = value();
      auto once = [&](bool& seen) {
        if (seen) error("duplicate key '" + key + "'", key_line);
        seen = true;
      };
      if (key == "rings") {
        once(seen_rings);
        for (const auto& v : values) {
          try {
            spec.rings.push_back(parse_ring_expr(v));
          } catch (const Error& e) {
            error("ring \"" + v + "\": " + e.message(), key_line);
          }
        }
      } else if (key == "theorems") {
        once(seen_theorems);
        for (const auto& v : values) {
          if (v == "all") {
            auto ids = instance_theorems();
            spec.theorems.insert(spec.theorems.end(), ids.begin(), ids.end());
            continue;
          }
          auto id = theorem_from_string(v);
          if (!id || *id == TheoremId::X41) error("unknown theorem id '" + v + "'", key_line);
          spec.theorems.push_back(*id);
        }
      } else if (key == "include") {
        once(seen_include);
        for (const auto& v : values) {
          if (v != "default") error("only \"default\" can be included", key_line);
          auto base = default_corpus();
          spec.rings.insert(spec.rings.begin(), base.begin(), base.end());
        }
      } else {
        error("unknown key '" + key + "'", key_line);
      }
      skip_inline();
      if (pos_ < text_.size() && text_[pos_] != '\n' && text_[pos_] != '#') error("trailing characters after value");
    }
    return spec;
  }

 private:
  [[noreturn]] void error(const std::string& message, std::size_t line = 0) const {
    throw Error(ErrorCode::SyntaxError, std::string(origin_) + ":" + std::to_string(line ? line : line_) + ": " + message);
  }

  void advance() {
    if (text_[pos_] == '\n') ++line_;
    ++pos_;
  }

  void skip_comment() {
    while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
  }

  /// Whitespace, newlines and comments.
  void skip() {
    while (pos_ < text_.size()) {
      if (text_[pos_] == '#')
        skip_comment();
      else if (std::isspace(static_cast<unsigned char>(text_[pos_])))
        advance();
      else
        break;
    }
  }

  void skip_inline() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }

  std::string bare_key() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '-'))
      ++pos_;
    if (start == pos_) error("expected a key");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string string_literal() {
    if (pos_ >= text_.size() || text_[pos_] != '"') error("expected a quoted string");
    ++pos_;
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\n') error("unterminated string");
      if (text_[pos_] == '\\') error("escape sequences are not supported");
      out += text_[pos_++];
    }
    if (pos_ >= text_.size()) error("unterminated string");
    ++pos_;
    return out;
  }

  std::vector<std::string> value() {
    skip_inline();
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      std::vector<std::string> out;
      for (;;) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == ']') break;
        out.push_back(string_literal());
        skip();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        skip();
        if (pos_ >= text_.size() || text_[pos_] != ']') error("expected ',' or ']' in array");
        break;
      }
      ++pos_;
      return out;
    }
    return {string_literal()};
  }

  std::string_view text_;
  std::string_view origin_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace

CorpusSpec parse_corpus(std::string_view text, std::string_view origin) { return Reader(text, origin).read(); }

CorpusSpec read_corpus_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::NotFound, "cannot open corpus file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus(buffer.str(), path);
}

CorpusSpec load_corpus(const std::string& name) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_regular_file(name, ec)) return read_corpus_file(name);
  if (name == "default" || fs::path(name).filename() == "default.toml") return CorpusSpec{default_corpus(), {}};
  throw Error(ErrorCode::NotFound, "cannot open corpus file '" + name + "'");
}

}  // namespace sqs::cli
