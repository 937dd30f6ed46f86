#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sqstable/expr.hpp"
#include "sqstable/theorems.hpp"

namespace sqs::cli {

/// Rings plus the theorem filter declared by a corpus file.
struct CorpusSpec {
  std::vector<RingExpr> rings;
  /// Empty means every instance theorem.
  std::vector<TheoremId> theorems;
};

/// Accepts a TOML subset:
///
///   # comment
///   include  = "default"            (optional, prepends the built-in corpus)
///   theorems = ["T33", "C34"]       (or "all")
///   rings    = ["Z(4)", "M(2,Z(2))"]
///
/// Values are strings or arrays of strings; arrays may span lines.
CorpusSpec parse_corpus(std::string_view text, std::string_view origin = "<corpus>");
CorpusSpec read_corpus_file(const std::string& path);

/// "default" (or a missing file named default.toml) selects the built-in
/// corpus; anything else is read as a file.
CorpusSpec load_corpus(const std::string& name);

}  // namespace sqs::cli
