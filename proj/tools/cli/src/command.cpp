#include "sqstable/cli/command.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "sqstable/cli/corpus_file.hpp"
#include "sqstable/cli/parse.hpp"
#include "sqstable/cli/report.hpp"
#include "sqstable/predicates.hpp"
#include "sqstable/structure.hpp"
#include "sqstable/theorems.hpp"

namespace sqs::cli {

namespace {

constexpr std::string_view kVerbs[] = {"axioms", "describe", "classify", "ideals",
                                       "check",  "verify",   "example41", "search"};

std::int64_t parse_int(std::string_view text, const std::string& flag) {
  std::int64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size())
    throw UsageError(flag + ": '" + std::string(text) + "' is not an integer");
  return value;
}

std::vector<std::int64_t> parse_list(std::string_view text, const std::string& flag) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_int(strip_whitespace(text.substr(start, comma - start)), flag));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::int64_t> parse_range(std::string_view text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) throw UsageError("--range: expected lo..hi, got '" + std::string(text) + "'");
  const std::int64_t lo = parse_int(strip_whitespace(text.substr(0, dots)), "--range");
  const std::int64_t hi = parse_int(strip_whitespace(text.substr(dots + 2)), "--range");
  if (hi < lo) throw UsageError("--range: empty range " + std::string(text));
  if (hi - lo > 100000) throw UsageError("--range: more than 100000 values");
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::string join_values(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

bool known_predicate(std::string_view name) {
  const auto names = predicate_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::string predicate_list() {
  std::vector<std::string> names;
  for (auto n : predicate_names()) names.emplace_back(n);
  return join(names, ", ");
}

std::vector<TheoremId> theorem_selection(const std::string& target, const std::vector<TheoremId>& from_corpus) {
  if (target == "all") {
    if (!from_corpus.empty()) return from_corpus;
    auto ids = instance_theorems();
    return {ids.begin(), ids.end()};
  }
  std::vector<TheoremId> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = target.find(',', start);
    const std::string id = target.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto parsed = theorem_from_string(id);
    if (!parsed) throw UsageError("unknown theorem id '" + id + "'");
    if (*parsed == TheoremId::X41) throw UsageError("X41 is checked per modulus; use the example41 verb");
    if (std::find(out.begin(), out.end(), *parsed) == out.end()) out.push_back(*parsed);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct Outcome {
  bool strict;
  int status = 0;

  void falsified() {
    if (strict) status = std::max(status, 1);
  }
  void failed() { status = 2; }
};

SizeLimits limits_of(const Command& c) {
  SizeLimits limits;
  limits.max_elements = c.max_size;
  // An explicit cap also lifts the 2x2 dimension guard.
  limits.allow_any_dimension = c.max_size != 4096;
  return limits;
}

unsigned threads_of(const Command& c) {
  return c.threads.value_or(std::max(1u, std::thread::hardware_concurrency()));
}

std::string ideal_text(const Ring& ring, const Ideal& ideal) {
  return render(describe_ideal(ring, ideal)) + " (" + std::to_string(ideal.size()) + " elements)";
}

std::string witness_text(const Ring& ring, const std::vector<Role>& witness) {
  std::vector<std::string> parts;
  for (const auto& r : witness) parts.push_back(r.role + "=" + ring.name(r.element));
  return parts.empty() ? "-" : join(parts, ", ");
}

std::vector<Ring> build_rings(const Command& c, std::vector<CorpusError>& errors, std::vector<TheoremId>* ids) {
  std::vector<RingExpr> exprs;
  if (!c.ring.empty()) {
    exprs.push_back(parse_ring_expr(c.ring));
  } else {
    CorpusSpec spec = load_corpus(c.corpus);
    exprs = std::move(spec.rings);
    if (ids) *ids = std::move(spec.theorems);
  }
  std::vector<Ring> rings;
  for (const auto& e : exprs) {
    try {
      rings.push_back(build(e, limits_of(c)));
    } catch (const Error& err) {
      errors.push_back({render(e), err.what()});
    }
  }
  return rings;
}

void write_errors(const std::vector<CorpusError>& errors, const Command& c, std::ostream& out, std::ostream& err) {
  for (const auto& e : errors) {
    if (c.format == Format::Json) write_line(out, {{"kind", "error"}, {"ring", e.ring}, {"message", e.message}});
    err << "error: " << e.ring << ": " << e.message << '\n';
  }
}

int run_axioms(const Command& c, std::ostream& out, std::ostream& err) {
  Outcome outcome{c.strict};
  std::vector<CorpusError> errors;
  const std::vector<Ring> rings = build_rings(c, errors, nullptr);
  Table table({"RING", "SIZE", "AXIOMS"});
  for (const Ring& ring : rings) {
    const AxiomReport report = verify_axioms(ring);
    std::vector<std::string> violations;
    for (const auto& v : report.violations) violations.push_back(v.describe(ring));
    if (!report.ok()) outcome.falsified();
    if (c.format == Format::Json)
      write_line(out, {{"kind", "axioms"},
                       {"ring", ring.expression()},
                       {"size", ring.size()},
                       {"ok", report.ok()},
                       {"violations", violations}});
    else
      table.add({ring.expression(), std::to_string(ring.size()), report.ok() ? "ok" : join(violations, "; ")});
  }
  if (c.format == Format::Text) table.write(out);
  write_errors(errors, c, out, err);
  if (!errors.empty()) outcome.failed();
  return outcome.status;
}

int run_describe(const Command& c, std::ostream& out) {
  const Ring ring = build(parse_ring_expr(c.ring), limits_of(c));
  const Ideal full = full_ideal(ring);
  const auto profiles = classify_all(ring);
  auto all_of = [&](auto pred) { return std::all_of(profiles.begin(), profiles.end(), pred); };
  const std::vector<Element> idem = idempotents(ring).members();
  const json facts = {
      {"kind", "ring"},
      {"ring", ring.expression()},
      {"size", ring.size()},
      {"commutative", is_commutative(ring)},
      {"units", units(ring).count()},
      {"idempotents", names_of(ring, idem)},
      {"jacobson", names_of(ring, jacobson_radical(ring).elements())},
      {"ideals", all_ideals(ring).size()},
      {"regular", all_of([](const ElementProfile& p) { return p.is_regular(); })},
      {"strongly_regular", all_of([](const ElementProfile& p) { return p.is_strongly_regular(); })},
      {"reduced", is_reduced_ideal(ring, full).holds},
      {"abelian", is_abelian_ring(ring).holds},
      {"dedekind_finite", is_dedekind_finite(ring)},
      {"square_stable_range_one", ring_square_stable_range_one(ring).holds},
      {"stable_range_one", has_stable_range_one(ring, full).holds},
  };
  if (c.format == Format::Json) {
    write_line(out, facts);
    return 0;
  }
  Table table({"ring", ring.expression()});
  table.add({"size", std::to_string(ring.size())});
  table.add({"commutative", yes_no(facts["commutative"])});
  table.add({"units", std::to_string(units(ring).count())});
  table.add({"idempotents", join(names_of(ring, idem), " ")});
  table.add({"jacobson radical", join(names_of(ring, jacobson_radical(ring).elements()), " ")});
  table.add({"ideals", std::to_string(facts["ideals"].get<std::size_t>())});
  for (const char* key : {"regular", "strongly_regular", "reduced", "abelian", "dedekind_finite",
                          "square_stable_range_one", "stable_range_one"}) {
    std::string label = key;
    std::replace(label.begin(), label.end(), '_', ' ');
    table.add({label, yes_no(facts[key])});
  }
  table.write(out);
  return 0;
}

int run_classify(const Command& c, std::ostream& out) {
  const Ring ring = build(parse_ring_expr(c.ring), limits_of(c));
  std::vector<ElementProfile> profiles;
  if (!c.element.empty())
    profiles.push_back(classify(ring, ring.element(c.element)));
  else
    profiles = classify_all(ring);
  Table table({"ELEMENT", "UNIT", "IDEMPOTENT", "NILPOTENT", "REGULAR", "UNIT-REGULAR", "STRONGLY-REGULAR"});
  auto opt = [&](const std::optional<Element>& x) { return x ? ring.name(*x) : std::string("-"); };
  for (const auto& p : profiles) {
    if (c.format == Format::Json) {
      json j = profile_json(ring, p);
      j["ring"] = ring.expression();
      write_line(out, j);
      continue;
    }
    table.add({ring.name(p.element), p.inverse ? "inv " + ring.name(*p.inverse) : "-", yes_no(p.idempotent),
               p.nilpotency_index ? "index " + std::to_string(*p.nilpotency_index) : "-", opt(p.regular_witness),
               opt(p.unit_regular_witness),
               p.strong_witness ? ring.name(p.strong_witness->right) + " / " + ring.name(p.strong_witness->left)
                                : std::string("-")});
  }
  if (c.format == Format::Text) table.write(out);
  return 0;
}

int run_ideals(const Command& c, std::ostream& out) {
  const Ring ring = build(parse_ring_expr(c.ring), limits_of(c));
  const Ideal& radical = jacobson_radical(ring);
  Table table({"IDEAL", "SIZE", "IN J(R)", "MEMBERS"});
  for (const Ideal& ideal : all_ideals(ring)) {
    const std::string label = render(describe_ideal(ring, ideal));
    const auto members = names_of(ring, ideal.elements());
    if (c.format == Format::Json)
      write_line(out, {{"kind", "ideal"},
                       {"ring", ring.expression()},
                       {"ideal", label},
                       {"size", ideal.size()},
                       {"members", members},
                       {"in_jacobson", ideal.is_subset_of(radical)}});
    else
      table.add({label, std::to_string(ideal.size()), yes_no(ideal.is_subset_of(radical)), join(members, " ")});
  }
  if (c.format == Format::Text) table.write(out);
  return 0;
}

int run_check(const Command& c, std::ostream& out) {
  Outcome outcome{c.strict};
  const SizeLimits limits = limits_of(c);
  const Ring ring = build(parse_ring_expr(c.ring), limits);
  const Ideal ideal = resolve_ideal(ring, parse_ideal_spec(c.ideal));
  const PredicateResult r = evaluate_predicate(c.target, ring, ideal, limits);
  if (!r.holds) outcome.falsified();
  if (!r.fault.empty()) outcome.failed();
  if (c.format == Format::Json) {
    json j = predicate_json(ring, r, true);
    j["kind"] = "predicate";
    j["ring"] = ring.expression();
    j["ideal"] = render(describe_ideal(ring, ideal));
    j["ideal_size"] = ideal.size();
    write_line(out, j);
    return outcome.status;
  }
  Table table({"predicate", r.predicate});
  table.add({"ring", ring.expression()});
  table.add({"ideal", ideal_text(ring, ideal)});
  table.add({"holds", yes_no(r.holds)});
  table.add({r.holds ? "witness" : "counterexample", witness_text(ring, r.witness)});
  table.add({"examined", std::to_string(r.examined)});
  table.add({"elapsed", std::to_string(r.elapsed.count()) + " us"});
  if (!r.fault.empty()) table.add({"fault", r.fault});
  table.write(out);
  return outcome.status;
}

void write_verify_text(const CorpusReport& report, std::ostream& out) {
  Table table({"RING", "IDEAL", "SIZE", "THEOREM", "CLAUSES", "VERDICT"});
  for (const auto& r : report.records) {
    std::string clauses;
    for (bool b : r.verdict.clause_values) clauses += b ? 'T' : 'F';
    const std::string verdict = !r.verdict.consistent        ? "INCONSISTENT: " + r.verdict.detail
                                : !r.verdict.hypotheses_hold ? "vacuous"
                                                             : "consistent";
    table.add({r.ring, render(r.ideal.spec), std::to_string(r.ideal.size), std::string(to_string(r.verdict.id)),
               clauses.empty() ? "-" : clauses, verdict});
  }
  table.write(out);
  out << '\n';
  Table tallies({"THEOREM", "TOTAL", "VACUOUS", "TRUE", "FALSE", "INCONSISTENT"});
  for (const auto& [id, t] : report.tallies)
    tallies.add({std::string(to_string(id)), std::to_string(t.total), std::to_string(t.vacuous),
                 std::to_string(t.nonvacuous_true), std::to_string(t.clause_false), std::to_string(t.inconsistent)});
  tallies.write(out);
  out << '\n'
      << report.rings_checked << " rings, " << report.records.size() << " verdicts, " << report.inconsistencies()
      << " inconsistent\n";
}

int run_verify(const Command& c, std::ostream& out, std::ostream& err) {
  Outcome outcome{c.strict};
  CorpusOptions options;
  options.limits = limits_of(c);
  options.threads = threads_of(c);

  std::vector<TheoremId> from_corpus;
  std::vector<CorpusError> build_errors;
  const std::vector<Ring> rings = build_rings(c, build_errors, &from_corpus);
  const std::vector<TheoremId> ids = theorem_selection(c.target, from_corpus);

  CorpusReport report;
  if (!c.ideal.empty()) {
    // A single instance; rings.size() is 0 or 1 here.
    for (const Ring& ring : rings) {
      const RingAnalysis analysis(ring);
      const Ideal ideal = resolve_ideal(ring, parse_ideal_spec(c.ideal));
      const IdealLabel label{describe_ideal(ring, ideal), ideal.size(), ideal.elements()};
      for (TheoremId id : ids) report.tallies[id];
      for (auto& v : verify_all(ids, analysis, ideal)) {
        Tally& t = report.tallies[v.id];
        ++t.total;
        if (!v.hypotheses_hold)
          ++t.vacuous;
        else if (v.clause_values.front())
          ++t.nonvacuous_true;
        else
          ++t.clause_false;
        if (!v.consistent) ++t.inconsistent;
        report.records.push_back({ring.expression(), label, names_of(ring, ideal.elements()), std::move(v)});
      }
      report.rings_checked = 1;
    }
  } else {
    report = run_corpus(rings, ids, options);
  }
  report.errors.insert(report.errors.begin(), build_errors.begin(), build_errors.end());
  std::sort(report.errors.begin(), report.errors.end(),
            [](const CorpusError& a, const CorpusError& b) { return a.ring < b.ring; });

  if (c.format == Format::Json) {
    for (const auto& r : report.records) write_line(out, record_json(r));
    write_line(out, corpus_summary_json(report));
  } else {
    write_verify_text(report, out);
  }
  for (const auto& e : report.errors) err << "error: " << e.ring << ": " << e.message << '\n';
  if (report.inconsistencies() > 0) outcome.falsified();
  if (!report.errors.empty()) outcome.failed();
  return outcome.status;
}

int run_example41(const Command& c, std::ostream& out, std::ostream& err) {
  Outcome outcome{c.strict};
  Table table({"N", "QUALIFIES", "WITNESS", "VERDICT"});
  for (std::int64_t n : c.values) {
    if (n < 1) {
      err << "error: n must be >= 1, got " << n << '\n';
      outcome.failed();
      continue;
    }
    try {
      const TheoremVerdict v = verify_example41(static_cast<std::size_t>(n), limits_of(c));
      if (!v.consistent) outcome.falsified();
      if (c.format == Format::Json) {
        json j = verdict_json(v);
        j["kind"] = "example41";
        j["n"] = n;
        j["found"] = !v.witness.empty();
        write_line(out, j);
      } else {
        table.add({std::to_string(n), yes_no(v.hypotheses_hold), v.witness.empty() ? "none" : v.witness,
                   !v.consistent ? "INCONSISTENT" : v.hypotheses_hold ? "found" : "vacuous"});
      }
    } catch (const Error& e) {
      outcome.failed();
      if (c.format == Format::Json) write_line(out, {{"kind", "error"}, {"n", n}, {"message", e.what()}});
      err << "error: n=" << n << ": " << e.what() << '\n';
    }
  }
  if (c.format == Format::Text) table.write(out);
  return outcome.status;
}

int run_search(const Command& c, std::ostream& out, std::ostream& err) {
  Outcome outcome{c.strict};
  CorpusOptions options;
  options.limits = limits_of(c);
  const std::string family = c.family;
  const std::string param = c.param;
  const SearchReport report = search_counterexamples(
      [&](std::int64_t p) { return parse_ring_expr(family, {{param, p}}); }, c.values, c.if_predicate,
      c.unless_predicate, options);
  if (!report.hits.empty()) outcome.falsified();
  if (!report.errors.empty()) outcome.failed();
  if (c.format == Format::Json) {
    for (const auto& h : report.hits) {
      // Witness names need the ring again; rebuilding is cheap at this scale.
      const Ring ring = build(parse_ring_expr(family, {{param, h.parameter}}), options.limits);
      write_line(out, {{"kind", "hit"},
                       {"parameter", h.parameter},
                       {"ring", h.ring},
                       {"ideal", render(h.ideal.spec)},
                       {"ideal_size", h.ideal.size},
                       {"members", h.member_names},
                       {"satisfied", predicate_json(ring, h.satisfied, false)},
                       {"violated", predicate_json(ring, h.violated, false)}});
    }
    json errors = json::array();
    for (const auto& e : report.errors) errors.push_back({{"ring", e.ring}, {"message", e.message}});
    write_line(out,
               {{"kind", "summary"}, {"instances", report.instances}, {"hits", report.hits.size()}, {"errors", errors}});
  } else {
    Table table({c.param, "RING", "IDEAL", "SIZE", "COUNTEREXAMPLE"});
    for (const auto& h : report.hits) {
      const Ring ring = build(parse_ring_expr(family, {{param, h.parameter}}), options.limits);
      table.add({std::to_string(h.parameter), h.ring, render(h.ideal.spec), std::to_string(h.ideal.size),
                 witness_text(ring, h.violated.witness)});
    }
    table.write(out);
    out << '\n'
        << report.instances << " instances, " << report.hits.size() << " with " << c.if_predicate << " and not "
        << c.unless_predicate << '\n';
  }
  for (const auto& e : report.errors) err << "error: " << e.ring << ": " << e.message << '\n';
  return outcome.status;
}

}  // namespace

std::string_view to_string(Verb verb) { return kVerbs[static_cast<int>(verb)]; }

Command parse_command(const std::vector<std::string>& args) {
  CLI::App app{"Square stable ideals over tabulated finite rings", "sqstable"};
  app.require_subcommand(1);

  struct Raw {
    std::string target, ring, ideal, element, corpus, family, param = "n", range, values, n, if_predicate,
        unless_predicate, format = "text";
    std::size_t max_size = 4096;
    unsigned threads = 0;
    bool strict = false;
  } raw;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--max-size", raw.max_size, "Largest ring to tabulate")->check(CLI::PositiveNumber);
    sub->add_option("--threads", raw.threads, "Worker threads for corpus runs")->check(CLI::PositiveNumber);
    sub->add_option("--format", raw.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--strict", raw.strict, "Exit 1 on false predicates or inconsistent verdicts");
  };

  auto* axioms = app.add_subcommand("axioms", "Check the ring axioms on the tabulated operations");
  axioms->add_option("--ring", raw.ring, "Ring expression");
  axioms->add_option("--corpus", raw.corpus, "Corpus file or 'default'");
  common(axioms);

  auto* describe = app.add_subcommand("describe", "Size, units, idempotents, radical and ring-level predicates");
  describe->add_option("--ring", raw.ring, "Ring expression")->required();
  common(describe);

  auto* classify = app.add_subcommand("classify", "Element classification with witnesses");
  classify->add_option("--ring", raw.ring, "Ring expression")->required();
  classify->add_option("--elem", raw.element, "Single element");
  common(classify);

  auto* ideals = app.add_subcommand("ideals", "All two-sided ideals");
  ideals->add_option("--ring", raw.ring, "Ring expression")->required();
  common(ideals);

  auto* check = app.add_subcommand("check", "Evaluate one predicate on (ring, ideal)");
  check->add_option("predicate", raw.target, "One of: " + predicate_list())->required();
  check->add_option("--ring", raw.ring, "Ring expression")->required();
  check->add_option("--ideal", raw.ideal, "zero | all | jacobson | gen(...)");
  common(check);

  auto* verify = app.add_subcommand("verify", "Check theorem statements on rings and their ideals");
  verify->add_option("theorems", raw.target, "'all' or a comma separated list of ids")->required();
  verify->add_option("--ring", raw.ring, "Ring expression");
  verify->add_option("--ideal", raw.ideal, "Restrict to one ideal of --ring");
  verify->add_option("--corpus", raw.corpus, "Corpus file or 'default'");
  common(verify);

  auto* example41 = app.add_subcommand("example41", "Search Z_n[i] for a nonzero square stable regular ideal");
  example41->add_option("--n", raw.n, "Modulus or comma separated moduli");
  example41->add_option("--range", raw.range, "Moduli lo..hi");
  common(example41);

  auto* search = app.add_subcommand("search", "Ideals of a ring family where one predicate holds and another fails");
  search->add_option("--family", raw.family, "Ring template, e.g. Zi(n)")->required();
  search->add_option("--param", raw.param, "Template variable");
  search->add_option("--range", raw.range, "Parameter values lo..hi");
  search->add_option("--values", raw.values, "Comma separated parameter values");
  search->add_option("--if", raw.if_predicate, "Predicate that must hold")->required();
  search->add_option("--unless", raw.unless_predicate, "Predicate that must fail")->required();
  common(search);

  if (!args.empty() && !args.front().starts_with("-") &&
      std::find(std::begin(kVerbs), std::end(kVerbs), args.front()) == std::end(kVerbs))
    throw UsageError("unknown verb '" + args.front() + "'\n\n" + app.help());

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  CLI::App* chosen = nullptr;
  try {
    app.parse(reversed);
    for (auto* sub : app.get_subcommands()) chosen = sub;
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    throw HelpRequested{subs.empty() ? app.help() : subs.front()->help()};
  } catch (const CLI::ParseError& e) {
    const auto subs = app.get_subcommands();
    throw UsageError(std::string(e.what()) + "\n\n" + (subs.empty() ? app.help() : subs.front()->help()));
  }

  auto usage = [&](const std::string& message) { return UsageError(message + "\n\n" + chosen->help()); };

  Command c;
  const std::string name = chosen->get_name();
  c.verb = static_cast<Verb>(std::find(std::begin(kVerbs), std::end(kVerbs), name) - std::begin(kVerbs));
  c.max_size = raw.max_size;
  if (raw.threads > 0) c.threads = raw.threads;
  c.format = raw.format == "json" ? Format::Json : Format::Text;
  c.strict = raw.strict;

  if (!raw.ring.empty()) c.ring = render(parse_ring_expr(raw.ring));
  if (!raw.ideal.empty()) c.ideal = render(parse_ideal_spec(raw.ideal));
  c.element = strip_whitespace(raw.element);

  switch (c.verb) {
    case Verb::Axioms:
    case Verb::Verify:
      if (raw.ring.empty() == raw.corpus.empty()) throw usage("exactly one of --ring and --corpus is required");
      if (!raw.ideal.empty() && raw.ring.empty()) throw usage("--ideal needs --ring");
      c.corpus = raw.corpus;
      if (c.verb == Verb::Verify) {
        c.target = strip_whitespace(raw.target);
        theorem_selection(c.target, {});
      }
      break;
    case Verb::Check:
      if (!known_predicate(raw.target))
        throw usage("unknown predicate '" + raw.target + "'; expected one of " + predicate_list());
      c.target = raw.target;
      if (c.ideal.empty()) c.ideal = "all";
      break;
    case Verb::Example41:
      if (raw.n.empty() == raw.range.empty()) throw usage("exactly one of --n and --range is required");
      c.values = raw.n.empty() ? parse_range(raw.range) : parse_list(raw.n, "--n");
      break;
    case Verb::Search:
      if (raw.range.empty() == raw.values.empty()) throw usage("exactly one of --range and --values is required");
      c.values = raw.range.empty() ? parse_list(raw.values, "--values") : parse_range(raw.range);
      c.param = raw.param;
      if (c.param.empty() || !std::all_of(c.param.begin(), c.param.end(), [](char ch) { return std::isalpha(ch); }))
        throw usage("--param must be a name made of letters");
      c.family = strip_whitespace(raw.family);
      parse_ring_expr(c.family, {{c.param, 1}});
      for (const auto* p : {&raw.if_predicate, &raw.unless_predicate})
        if (!known_predicate(*p)) throw usage("unknown predicate '" + *p + "'; expected one of " + predicate_list());
      c.if_predicate = raw.if_predicate;
      c.unless_predicate = raw.unless_predicate;
      break;
    default:
      break;
  }
  return c;
}

std::vector<std::string> canonical_args(const Command& c) {
  std::vector<std::string> out{std::string(to_string(c.verb))};
  if (!c.target.empty()) out.push_back(c.target);
  auto flag = [&](const char* name, const std::string& value) {
    if (value.empty()) return;
    out.push_back(name);
    out.push_back(value);
  };
  flag("--ring", c.ring);
  flag("--ideal", c.ideal);
  flag("--elem", c.element);
  flag("--corpus", c.corpus);
  if (c.verb == Verb::Search) {
    flag("--family", c.family);
    flag("--param", c.param);
    flag("--values", join_values(c.values));
    flag("--if", c.if_predicate);
    flag("--unless", c.unless_predicate);
  }
  if (c.verb == Verb::Example41) flag("--n", join_values(c.values));
  if (c.max_size != 4096) flag("--max-size", std::to_string(c.max_size));
  if (c.threads) flag("--threads", std::to_string(*c.threads));
  if (c.format == Format::Json) flag("--format", "json");
  if (c.strict) out.push_back("--strict");
  return out;
}

std::string canonical(const Command& command) { return join(canonical_args(command), " "); }

int run(const Command& c, std::ostream& out, std::ostream& err) {
  try {
    switch (c.verb) {
      case Verb::Axioms: return run_axioms(c, out, err);
      case Verb::Describe: return run_describe(c, out);
      case Verb::Classify: return run_classify(c, out);
      case Verb::Ideals: return run_ideals(c, out);
      case Verb::Check: return run_check(c, out);
      case Verb::Verify: return run_verify(c, out, err);
      case Verb::Example41: return run_example41(c, out, err);
      case Verb::Search: return run_search(c, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command command;
  try {
    command = parse_command(args);
  } catch (const HelpRequested& help) {
    out << help.text;
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return run(command, out, err);
}

}  // namespace sqs::cli
