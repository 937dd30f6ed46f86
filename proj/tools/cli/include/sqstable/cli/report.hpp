#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sqstable/element.hpp"
#include "sqstable/predicates.hpp"
#include "sqstable/ring.hpp"
#include "sqstable/theorems.hpp"

namespace sqs::cli {

using nlohmann::json;

std::vector<std::string> names_of(const Ring& ring, const std::vector<Element>& elements);

json witness_json(const Ring& ring, const std::vector<Role>& witness);
/// Elapsed time is included only when asked for; it is the one field that
/// differs between otherwise identical runs.
json predicate_json(const Ring& ring, const PredicateResult& result, bool with_elapsed);
json verdict_json(const TheoremVerdict& verdict);
json record_json(const VerdictRecord& record);
json tally_json(const Tally& tally);
json corpus_summary_json(const CorpusReport& report);
json profile_json(const Ring& ring, const ElementProfile& profile);

/// One compact JSON object per line.
void write_line(std::ostream& out, const json& record);

/// Left-aligned columns separated by two spaces.
class Table {
 public:
  explicit Table(std::vector<std::string> header);
  void add(std::vector<std::string> row);
  void write(std::ostream& out) const;

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool value);
std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace sqs::cli
