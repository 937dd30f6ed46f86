#include "sqstable/theorems.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <sstream>
#include <thread>

#include "sqstable/error.hpp"

namespace sqs {

namespace {

constexpr std::array<TheoremId, 12> kInstanceTheorems{
    TheoremId::L31, TheoremId::L32, TheoremId::T33, TheoremId::C34, TheoremId::T35,   TheoremId::C36,
    TheoremId::T37, TheoremId::T42, TheoremId::C43, TheoremId::C44sr, TheoremId::T44, TheoremId::C45};

std::string describe_witness(const Ring& ring, const std::vector<Role>& witness) {
  std::string out;
  for (const auto& r : witness) {
    if (!out.empty()) out += ", ";
    out += r.role + "=" + ring.name(r.element);
  }
  return out;
}

struct Clause {
  std::string label;
  bool value = true;
  /// First failing instance when value is false.
  std::string note;
};

bool all_strongly_regular(const Ring& ring) {
  for (Element a = 0; a < ring.size(); ++a)
    if (!is_strongly_regular(ring, a)) return false;
  return true;
}

/// One (ring, ideal) instance with lazily computed ideal-level facts shared
/// across theorems.
class Instance {
 public:
  Instance(const RingAnalysis& analysis, const Ideal& ideal)
      : analysis_(analysis), ring_(analysis.ring()), ideal_(ideal) {}

  const Ring& ring() const { return ring_; }
  const Ideal& ideal() const { return ideal_; }
  const RingAnalysis& analysis() const { return analysis_; }

  const PredicateResult& square_stable() {
    if (!square_stable_) square_stable_ = is_square_stable_fast(ring_, ideal_);
    return *square_stable_;
  }

  const ExchangeResult& exchange() {
    if (!exchange_) exchange_ = is_exchange_ideal(ring_, ideal_);
    return *exchange_;
  }

  const PredicateResult& regular() {
    if (!regular_) regular_ = is_regular_ideal(ring_, ideal_);
    return *regular_;
  }

  Clause square_stable_clause() {
    const auto& r = square_stable();
    return {"I square stable", r.holds, describe_witness(ring_, r.witness)};
  }

  template <class Pred>
  Clause for_all_in_ideal(std::string label, Pred pred) {
    for (Element a : ideal_.elements())
      if (!pred(a)) return {std::move(label), false, "a=" + ring_.name(a)};
    return {std::move(label), true, {}};
  }

  template <class Pred>
  Clause for_all_in_one_plus(std::string label, Pred pred) {
    for (Element a : one_plus(ring_, ideal_).members())
      if (!pred(a)) return {std::move(label), false, "a=" + ring_.name(a)};
    return {std::move(label), true, {}};
  }

  Clause radical_square_clause() {
    const Ideal& radical = analysis_.radical();
    return for_all_in_ideal("a^2 in J(R) implies a in J(R) for a in I", [&](Element a) {
      return !radical.contains(ring_.square(a)) || radical.contains(a);
    });
  }

  Clause commutator_clause() {
    const Ideal& radical = analysis_.radical();
    const auto& idem = analysis_.idempotent_list();
    for (Element a : ideal_.elements())
      for (Element e : idem)
        if (!radical.contains(ring_.sub(ring_.mul(a, e), ring_.mul(e, a))))
          return {"ae - ea in J(R) for a in I, e idempotent", false,
                  "a=" + ring_.name(a) + ", e=" + ring_.name(e)};
    return {"ae - ea in J(R) for a in I, e idempotent", true, {}};
  }

  Clause regular_image_clause(std::string label) {
    const auto& profiles = analysis_.profiles();
    const auto& quotient_profiles = analysis_.radical_quotient_profiles();
    const auto& projection = analysis_.modulo_radical().projection;
    return for_all_in_ideal(std::move(label), [&](Element a) {
      return !profiles[a].is_regular() || quotient_profiles[projection[a]].is_strongly_regular();
    });
  }

  Clause regular_square_corner_clause() {
    const auto& profiles = analysis_.profiles();
    return for_all_in_ideal("regular a in I: a in a^2R and aR Dedekind-finite", [&](Element a) {
      const auto& p = profiles[a];
      if (!p.is_regular()) return true;
      if (!right_square_witness(ring_, a)) return false;
      return analysis_.corner_dedekind_finite(ring_.mul(a, *p.regular_witness));
    });
  }

  Clause regular_strongly_regular_clause() {
    const auto& profiles = analysis_.profiles();
    return for_all_in_ideal("every regular element of I strongly regular", [&](Element a) {
      return !profiles[a].is_regular() || profiles[a].is_strongly_regular();
    });
  }

  Clause corner_clause() {
    for (Element e : analysis_.idempotent_list())
      if (ideal_.contains(e) && !analysis_.corner_strongly_regular(e))
        return {"eRe strongly regular for idempotents e in I", false, "e=" + ring_.name(e)};
    return {"eRe strongly regular for idempotents e in I", true, {}};
  }

  Clause reduced_clause() {
    const auto r = is_reduced_ideal(ring_, ideal_);
    return {"I reduced", r.holds, describe_witness(ring_, r.witness)};
  }

  Clause unit_regular_ideal_clause() {
    const auto& profiles = analysis_.profiles();
    return for_all_in_ideal("every element of I unit-regular",
                            [&](Element a) { return profiles[a].is_unit_regular(); });
  }

  Clause completion_clause() {
    static const char* label = "a*x + b = 1, a in I unit-regular admits y with a + b*y in U(R)";
    const auto& profiles = analysis_.profiles();
    const auto& u = units(ring_);
    for (Element a : ideal_.elements()) {
      if (!profiles[a].is_unit_regular()) continue;
      // b = 1 - a*x only depends on a*x.
      ElementSet seen(ring_.size());
      for (Element x = 0; x < ring_.size(); ++x) {
        const Element b = ring_.sub(ring_.one(), ring_.mul(a, x));
        if (!seen.insert(b)) continue;
        bool found = false;
        for (Element y = 0; y < ring_.size() && !found; ++y) found = u.contains(ring_.add(a, ring_.mul(b, y)));
        if (!found) return {label, false, "a=" + ring_.name(a) + ", x=" + ring_.name(x) + ", b=" + ring_.name(b)};
      }
    }
    return {label, true, {}};
  }

  Clause one_plus_square_clause() {
    const auto& u = units(ring_);
    if (!comaximality_) comaximality_.emplace(ring_);
    for (Element a : one_plus(ring_, ideal_).members()) {
      const Element sq = ring_.square(a);
      for (Element b = 0; b < ring_.size(); ++b) {
        if (!comaximality_->comaximal(a, b)) continue;
        bool found = false;
        for (Element y = 0; y < ring_.size() && !found; ++y) found = u.contains(ring_.add(sq, ring_.mul(b, y)));
        if (!found)
          return {"aR + bR = R, a in 1+I admits y with a^2 + b*y in U(R)", false,
                  "a=" + ring_.name(a) + ", b=" + ring_.name(b)};
      }
    }
    return {"aR + bR = R, a in 1+I admits y with a^2 + b*y in U(R)", true, {}};
  }

  Clause strongly_regular_ideal_clause() {
    const auto& profiles = analysis_.profiles();
    return for_all_in_ideal("every element of I strongly regular",
                            [&](Element a) { return profiles[a].is_strongly_regular(); });
  }

  Clause strongly_regular_coset_clause() {
    const auto& profiles = analysis_.profiles();
    return for_all_in_one_plus("every element of 1+I strongly regular",
                               [&](Element a) { return profiles[a].is_strongly_regular(); });
  }

 private:
  const RingAnalysis& analysis_;
  const Ring& ring_;
  const Ideal& ideal_;
  std::optional<PredicateResult> square_stable_;
  std::optional<ExchangeResult> exchange_;
  std::optional<PredicateResult> regular_;
  std::optional<ComaximalityTable> comaximality_;
};

TheoremVerdict verify_instance(TheoremId id, Instance& inst) {
  TheoremVerdict v;
  v.id = id;
  const Ring& ring = inst.ring();

  // Returns false when the hypothesis fails; records exchange faults.
  auto exchange_hypothesis = [&]() {
    const auto& ex = inst.exchange();
    if (!ex.combined.fault.empty()) {
      v.consistent = false;
      v.detail = ex.combined.fault + " (" + describe_witness(ring, ex.combined.witness) + ")";
    }
    return ex.combined.holds;
  };

  std::vector<std::function<Clause()>> clauses;
  bool hypotheses = true;
  switch (id) {
    case TheoremId::L31:
      clauses = {[&] { return inst.square_stable_clause(); }, [&] { return inst.radical_square_clause(); }};
      break;
    case TheoremId::L32:
      clauses = {[&] { return inst.unit_regular_ideal_clause(); }, [&] { return inst.completion_clause(); }};
      break;
    case TheoremId::T33:
      hypotheses = exchange_hypothesis();
      clauses = {[&] { return inst.square_stable_clause(); }, [&] { return inst.radical_square_clause(); }};
      break;
    case TheoremId::C34:
      hypotheses = exchange_hypothesis();
      clauses = {[&] { return inst.square_stable_clause(); }, [&] { return inst.commutator_clause(); }};
      break;
    case TheoremId::T35:
      hypotheses = exchange_hypothesis();
      clauses = {[&] { return inst.square_stable_clause(); },
                 [&] { return inst.regular_image_clause("regular a in I has strongly regular image in R/J(R)"); }};
      break;
    case TheoremId::C36:
      hypotheses = inst.ideal().is_full() && exchange_hypothesis();
      clauses = {[&] {
                   const auto r = ring_square_stable_range_one(ring);
                   return Clause{"R has square stable range one", r.holds, describe_witness(ring, r.witness)};
                 },
                 [&] { return inst.regular_image_clause("regular a in R has strongly regular image in R/J(R)"); }};
      break;
    case TheoremId::T37:
      hypotheses = exchange_hypothesis();
      clauses = {[&] { return inst.square_stable_clause(); }, [&] { return inst.regular_square_corner_clause(); },
                 [&] { return inst.regular_strongly_regular_clause(); }};
      break;
    case TheoremId::T42:
      hypotheses = inst.regular().holds;
      clauses = {[&] { return inst.square_stable_clause(); }, [&] { return inst.corner_clause(); }};
      break;
    case TheoremId::C43:
      hypotheses = inst.regular().holds;
      clauses = {[&] { return inst.square_stable_clause(); }, [&] { return inst.reduced_clause(); }};
      break;
    case TheoremId::C44sr:
      hypotheses = inst.analysis().ring_regular();
      clauses = {[&] { return Clause{"R strongly regular", inst.analysis().ring_strongly_regular(), {}}; },
                 [&] { return inst.square_stable_clause(); },
                 [&] {
                   const auto q = make_quotient(ring, inst.ideal());
                   return Clause{"R/I strongly regular", all_strongly_regular(q.ring), {}};
                 },
                 [&] {
                   const auto q = make_quotient(ring, inst.ideal());
                   const auto lift = units_lift(ring, q);
                   return Clause{"units of R/I lift to units of R", lift.holds,
                                 lift.non_liftable ? "unit " + q.ring.name(*lift.non_liftable) : std::string{}};
                 }};
      break;
    case TheoremId::T44:
      hypotheses = inst.regular().holds;
      clauses = {[&] { return inst.square_stable_clause(); }, [&] { return inst.one_plus_square_clause(); }};
      break;
    case TheoremId::C45:
      hypotheses = inst.regular().holds;
      clauses = {[&] { return inst.square_stable_clause(); }, [&] { return inst.strongly_regular_ideal_clause(); },
                 [&] { return inst.strongly_regular_coset_clause(); }};
      break;
    case TheoremId::X41:
      throw Error(ErrorCode::InvalidArgument, "X41 is verified per modulus with verify_example41");
  }

  v.hypotheses_hold = hypotheses;
  std::vector<Clause> evaluated;
  if (hypotheses)
    for (auto& c : clauses) evaluated.push_back(c());

  for (const auto& c : evaluated) {
    v.clause_labels.push_back(c.label);
    v.clause_values.push_back(c.value);
  }
  if (v.consistent) v.consistent = evaluate_relation(relation_of(id), v.clause_values);
  if (!v.consistent && v.detail.empty()) {
    std::ostringstream os;
    for (std::size_t i = 0; i < evaluated.size(); ++i) {
      if (i) os << "; ";
      os << "(" << i + 1 << ") " << (evaluated[i].value ? "true" : "false");
      if (!evaluated[i].note.empty()) os << " at " << evaluated[i].note;
    }
    v.detail = os.str();
  }
  return v;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  const unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  for (unsigned t = 0; t < spawn; ++t)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  for (auto& w : workers) w.join();
}

IdealLabel label_of(const Ring& ring, const Ideal& ideal) {
  return IdealLabel{describe_ideal(ring, ideal), ideal.size(), ideal.elements()};
}

std::vector<std::string> member_names(const Ring& ring, const Ideal& ideal) {
  std::vector<std::string> out;
  for (Element x : ideal.elements()) out.push_back(ring.name(x));
  return out;
}

bool record_less(const VerdictRecord& a, const VerdictRecord& b) {
  if (a.ring != b.ring) return a.ring < b.ring;
  if (a.ideal.size != b.ideal.size) return a.ideal.size < b.ideal.size;
  if (a.ideal.members != b.ideal.members) return a.ideal.members < b.ideal.members;
  return a.verdict.id < b.verdict.id;
}

}  // namespace

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::L31: return "L31";
    case TheoremId::L32: return "L32";
    case TheoremId::T33: return "T33";
    case TheoremId::C34: return "C34";
    case TheoremId::T35: return "T35";
    case TheoremId::C36: return "C36";
    case TheoremId::T37: return "T37";
    case TheoremId::T42: return "T42";
    case TheoremId::C43: return "C43";
    case TheoremId::C44sr: return "C44sr";
    case TheoremId::T44: return "T44";
    case TheoremId::C45: return "C45";
    case TheoremId::X41: return "X41";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_string(std::string_view text) {
  for (TheoremId id : kInstanceTheorems)
    if (to_string(id) == text) return id;
  if (text == "X41") return TheoremId::X41;
  return std::nullopt;
}

std::span<const TheoremId> instance_theorems() { return kInstanceTheorems; }

Relation relation_of(TheoremId id) {
  switch (id) {
    case TheoremId::L31: return Relation::Implies;
    case TheoremId::L32: return Relation::Holds;
    case TheoremId::C44sr: return Relation::EquivalentToConjunction;
    case TheoremId::X41: return Relation::Implies;
    default: return Relation::Equivalent;
  }
}

bool evaluate_relation(Relation relation, const std::vector<bool>& c) {
  if (c.empty()) return true;
  switch (relation) {
    case Relation::Implies: return c.size() < 2 || !c[0] || c[1];
    case Relation::Equivalent: return std::all_of(c.begin(), c.end(), [&](bool b) { return b == c[0]; });
    case Relation::Holds: return c.back();
    case Relation::EquivalentToConjunction:
      return c[0] == std::all_of(c.begin() + 1, c.end(), [](bool b) { return b; });
  }
  return false;
}

RingAnalysis::RingAnalysis(Ring ring)
    : ring_(std::move(ring)),
      radical_(jacobson_radical(ring_)),
      modulo_radical_(make_quotient(ring_, radical_, IdealSpec::jacobson())),
      profiles_(classify_all(ring_)),
      quotient_profiles_(classify_all(modulo_radical_.ring)),
      idempotents_(idempotents(ring_).members()) {
  for (Element e : idempotents_) {
    const CornerRing corner = make_corner(ring_, e);
    corners_.emplace(e, CornerFacts{all_strongly_regular(corner.ring), is_dedekind_finite(corner.ring)});
  }
  ring_regular_ = std::all_of(profiles_.begin(), profiles_.end(), [](const auto& p) { return p.is_regular(); });
  ring_strongly_regular_ =
      std::all_of(profiles_.begin(), profiles_.end(), [](const auto& p) { return p.is_strongly_regular(); });
}

bool RingAnalysis::corner_strongly_regular(Element e) const {
  auto it = corners_.find(e);
  if (it == corners_.end()) throw Error(ErrorCode::NotIdempotent, ring_.name(e) + " is not idempotent");
  return it->second.strongly_regular;
}

bool RingAnalysis::corner_dedekind_finite(Element e) const {
  auto it = corners_.find(e);
  if (it == corners_.end()) throw Error(ErrorCode::NotIdempotent, ring_.name(e) + " is not idempotent");
  return it->second.dedekind_finite;
}

TheoremVerdict verify(TheoremId id, const RingAnalysis& analysis, const Ideal& ideal) {
  if (ideal.members().universe() != analysis.ring().size())
    throw Error(ErrorCode::NotAnIdeal, "ideal belongs to a ring of a different size");
  Instance inst(analysis, ideal);
  return verify_instance(id, inst);
}

TheoremVerdict verify(TheoremId id, const Ring& ring, const Ideal& ideal) {
  const RingAnalysis analysis(ring);
  return verify(id, analysis, ideal);
}

std::vector<TheoremVerdict> verify_all(std::span<const TheoremId> ids, const RingAnalysis& analysis,
                                       const Ideal& ideal) {
  if (ideal.members().universe() != analysis.ring().size())
    throw Error(ErrorCode::NotAnIdeal, "ideal belongs to a ring of a different size");
  Instance inst(analysis, ideal);
  std::vector<TheoremVerdict> out;
  for (TheoremId id : ids) out.push_back(verify_instance(id, inst));
  return out;
}

bool qualifies_for_example41(std::size_t n) {
  std::size_t m = n;
  while (m % 2 == 0 && m > 0) m /= 2;
  for (std::size_t p = 3; p * p <= m || m > 1; p += 2) {
    if (p * p > m) {
      // m itself is an odd prime with multiplicity one.
      return m > 1;
    }
    if (m % p) continue;
    std::size_t k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (k == 1) return true;
  }
  return false;
}

TheoremVerdict verify_example41(std::size_t n, const SizeLimits& limits) {
  TheoremVerdict v;
  v.id = TheoremId::X41;
  v.hypotheses_hold = qualifies_for_example41(n);

  const Ring ring = make_gaussian(n, limits);
  std::optional<Ideal> found;
  for (const Ideal& ideal : all_ideals(ring)) {
    if (ideal.is_zero()) continue;
    if (is_regular_ideal(ring, ideal).holds && is_square_stable_fast(ring, ideal).holds) {
      found = ideal;
      break;
    }
  }
  if (found)
    v.witness = render(describe_ideal(ring, *found)) + " of " + ring.expression() + " (" +
                std::to_string(found->size()) + " elements)";
  if (v.hypotheses_hold) {
    v.clause_labels = {"n has an odd prime factor of multiplicity one",
                       "Z_n[i] has a nonzero square stable regular ideal"};
    v.clause_values = {true, found.has_value()};
    v.consistent = evaluate_relation(Relation::Implies, v.clause_values);
    if (!v.consistent) v.detail = "no nonzero square stable regular ideal in " + ring.expression();
  }
  return v;
}

std::size_t CorpusReport::inconsistencies() const {
  std::size_t total = 0;
  for (const auto& [id, t] : tallies) total += t.inconsistent;
  return total;
}

CorpusReport run_corpus(std::span<const Ring> rings, std::span<const TheoremId> ids,
                        const CorpusOptions& options) {
  struct Slot {
    std::vector<VerdictRecord> records;
    std::vector<CorpusError> errors;
    bool checked = false;
  };
  std::vector<Slot> slots(rings.size());
  parallel_for(rings.size(), options.threads, [&](std::size_t i) {
    const Ring& ring = rings[i];
    Slot& slot = slots[i];
    try {
      const AxiomReport axioms = verify_axioms(ring, 1);
      if (!axioms.ok()) {
        slot.errors.push_back({ring.expression(), "ring axioms violated: " + axioms.violations.front().describe(ring)});
        return;
      }
      const RingAnalysis analysis(ring);
      for (const Ideal& ideal : all_ideals(ring, options.max_ideals)) {
        const IdealLabel label = label_of(ring, ideal);
        const auto names = member_names(ring, ideal);
        for (TheoremVerdict& v : verify_all(ids, analysis, ideal))
          slot.records.push_back({ring.expression(), label, names, std::move(v)});
      }
      slot.checked = true;
    } catch (const std::exception& e) {
      slot.records.clear();
      slot.errors.push_back({ring.expression(), e.what()});
    }
  });

  CorpusReport report;
  for (TheoremId id : ids) report.tallies[id];
  for (Slot& slot : slots) {
    report.rings_checked += slot.checked ? 1 : 0;
    for (auto& r : slot.records) report.records.push_back(std::move(r));
    for (auto& e : slot.errors) report.errors.push_back(std::move(e));
  }
  std::sort(report.records.begin(), report.records.end(), record_less);
  for (const auto& r : report.records) {
    Tally& t = report.tallies[r.verdict.id];
    ++t.total;
    if (!r.verdict.hypotheses_hold)
      ++t.vacuous;
    else if (!r.verdict.clause_values.empty() && r.verdict.clause_values.front())
      ++t.nonvacuous_true;
    else
      ++t.clause_false;
    if (!r.verdict.consistent) ++t.inconsistent;
  }
  return report;
}

CorpusReport run_corpus(std::span<const RingExpr> corpus, std::span<const TheoremId> ids,
                        const CorpusOptions& options) {
  std::vector<Ring> rings;
  std::vector<CorpusError> errors;
  for (const RingExpr& expr : corpus) {
    try {
      rings.push_back(build(expr, options.limits));
    } catch (const std::exception& e) {
      errors.push_back({render(expr), e.what()});
    }
  }
  CorpusReport report = run_corpus(rings, ids, options);
  report.errors.insert(report.errors.end(), errors.begin(), errors.end());
  std::sort(report.errors.begin(), report.errors.end(),
            [](const CorpusError& a, const CorpusError& b) { return a.ring < b.ring; });
  return report;
}

std::vector<RingExpr> default_corpus() {
  using E = RingExpr;
  std::vector<E> corpus;
  for (int n = 1; n <= 12; ++n) corpus.push_back(E::cyclic(n));
  for (int n = 2; n <= 7; ++n) corpus.push_back(E::gaussian(n));
  corpus.push_back(E::matrix(2, E::cyclic(2)));
  corpus.push_back(E::matrix(2, E::cyclic(3)));
  for (int n = 2; n <= 4; ++n) corpus.push_back(E::triangular(2, E::cyclic(n)));
  corpus.push_back(E::product({E::cyclic(2), E::cyclic(3)}));
  corpus.push_back(E::product({E::cyclic(2), E::triangular(2, E::cyclic(2))}));
  corpus.push_back(E::quotient(E::triangular(2, E::cyclic(2)), IdealSpec::jacobson()));
  corpus.push_back(E::quotient(E::triangular(2, E::cyclic(3)), IdealSpec::jacobson()));
  corpus.push_back(E::quotient(E::cyclic(12), IdealSpec::generated({"6"})));
  corpus.push_back(E::quotient(E::gaussian(4), IdealSpec::jacobson()));
  corpus.push_back(E::quotient(E::matrix(2, E::cyclic(2)), IdealSpec::zero()));
  corpus.push_back(E::corner(E::matrix(2, E::cyclic(2)), "[1,0,0,0]"));
  corpus.push_back(E::corner(E::triangular(2, E::cyclic(3)), "[0,0,0,1]"));
  return corpus;
}

SearchReport search_counterexamples(const std::function<RingExpr(std::int64_t)>& family,
                                    std::span<const std::int64_t> parameters, std::string_view holds,
                                    std::string_view fails, const CorpusOptions& options) {
  auto known = [](std::string_view name) {
    const auto names = predicate_names();
    return std::find(names.begin(), names.end(), name) != names.end();
  };
  if (!known(holds)) throw Error(ErrorCode::InvalidArgument, "unknown predicate '" + std::string(holds) + "'");
  if (!known(fails)) throw Error(ErrorCode::InvalidArgument, "unknown predicate '" + std::string(fails) + "'");

  SearchReport report;
  for (std::int64_t p : parameters) {
    std::string name = "parameter " + std::to_string(p);
    try {
      const RingExpr expr = family(p);
      name = render(expr);
      const Ring ring = build(expr, options.limits);
      for (const Ideal& ideal : all_ideals(ring, options.max_ideals)) {
        ++report.instances;
        PredicateResult a = evaluate_predicate(holds, ring, ideal, options.limits);
        if (!a.holds) continue;
        PredicateResult b = evaluate_predicate(fails, ring, ideal, options.limits);
        if (b.holds) continue;
        report.hits.push_back({p, name, label_of(ring, ideal), member_names(ring, ideal), std::move(a), std::move(b)});
      }
    } catch (const std::exception& e) {
      report.errors.push_back({name, e.what()});
    }
  }
  return report;
}

}  // namespace sqs
