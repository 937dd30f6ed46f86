#include "sqstable/cli/report.hpp"

#include <algorithm>
#include <ostream>

namespace sqs::cli {

std::vector<std::string> names_of(const Ring& ring, const std::vector<Element>& elements) {
  std::vector<std::string> out;
  out.reserve(elements.size());
  for (Element x : elements) out.push_back(ring.name(x));
  return out;
}

json witness_json(const Ring& ring, const std::vector<Role>& witness) {
  json out = json::array();
  for (const auto& r : witness) out.push_back({{"role", r.role}, {"element", ring.name(r.element)}});
  return out;
}

json predicate_json(const Ring& ring, const PredicateResult& result, bool with_elapsed) {
  json out = {{"predicate", result.predicate},
              {"holds", result.holds},
              {"witness", witness_json(ring, result.witness)},
              {"examined", result.examined},
              {"fault", result.fault}};
  if (with_elapsed) out["elapsed_us"] = result.elapsed.count();
  return out;
}

json verdict_json(const TheoremVerdict& v) {
  return {{"theorem", std::string(to_string(v.id))},
          {"hypotheses_hold", v.hypotheses_hold},
          {"clause_labels", v.clause_labels},
          {"clause_values", v.clause_values},
          {"consistent", v.consistent},
          {"detail", v.detail},
          {"witness", v.witness}};
}

json record_json(const VerdictRecord& r) {
  json out = verdict_json(r.verdict);
  out["kind"] = "verdict";
  out["ring"] = r.ring;
  out["ideal"] = render(r.ideal.spec);
  out["ideal_size"] = r.ideal.size;
  out["members"] = r.member_names;
  return out;
}

json tally_json(const Tally& t) {
  return {{"total", t.total},
          {"vacuous", t.vacuous},
          {"nonvacuous_true", t.nonvacuous_true},
          {"clause_false", t.clause_false},
          {"inconsistent", t.inconsistent}};
}

json corpus_summary_json(const CorpusReport& report) {
  json tallies = json::object();
  for (const auto& [id, t] : report.tallies) tallies[std::string(to_string(id))] = tally_json(t);
  json errors = json::array();
  for (const auto& e : report.errors) errors.push_back({{"ring", e.ring}, {"message", e.message}});
  return {{"kind", "summary"},
          {"rings_checked", report.rings_checked},
          {"records", report.records.size()},
          {"inconsistencies", report.inconsistencies()},
          {"tallies", tallies},
          {"errors", errors}};
}

json profile_json(const Ring& ring, const ElementProfile& p) {
  auto name_or_null = [&](const std::optional<Element>& x) -> json {
    return x ? json(ring.name(*x)) : json(nullptr);
  };
  json strong = nullptr;
  if (p.strong_witness)
    strong = {{"right", ring.name(p.strong_witness->right)}, {"left", ring.name(p.strong_witness->left)}};
  return {{"kind", "element"},
          {"element", ring.name(p.element)},
          {"unit", p.is_unit()},
          {"inverse", name_or_null(p.inverse)},
          {"idempotent", p.idempotent},
          {"nilpotency_index", p.nilpotency_index ? json(*p.nilpotency_index) : json(nullptr)},
          {"regular", p.is_regular()},
          {"regular_witness", name_or_null(p.regular_witness)},
          {"unit_regular", p.is_unit_regular()},
          {"unit_regular_witness", name_or_null(p.unit_regular_witness)},
          {"strongly_regular", p.is_strongly_regular()},
          {"strong_witness", strong}};
}

void write_line(std::ostream& out, const json& record) { out << record.dump() << '\n'; }

Table::Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

void Table::add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

void Table::write(std::ostream& out) const {
  std::vector<std::size_t> width;
  for (const auto& row : rows_) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows_) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace sqs::cli
