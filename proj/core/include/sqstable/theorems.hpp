#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqstable/element.hpp"
#include "sqstable/predicates.hpp"
#include "sqstable/ring.hpp"
#include "sqstable/structure.hpp"

namespace sqs {

enum class TheoremId { L31, L32, T33, C34, T35, C36, T37, T42, C43, C44sr, T44, C45, X41 };

std::string_view to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view text);
/// Ids checked per (ring, ideal) instance; X41 is checked per modulus.
std::span<const TheoremId> instance_theorems();

/// How the clause values must relate for a verdict to be consistent.
enum class Relation {
  Implies,                  // c0 => c1
  Equivalent,               // all clauses equal
  Holds,                    // last clause true
  EquivalentToConjunction,  // c0 <=> (c1 && ... && cn)
};

Relation relation_of(TheoremId id);

struct TheoremVerdict {
  TheoremId id = TheoremId::L31;
  bool hypotheses_hold = false;
  std::vector<std::string> clause_labels;
  /// Empty when the hypotheses fail (vacuous instance).
  std::vector<bool> clause_values;
  bool consistent = true;
  /// Counterexample description; non-empty iff !consistent.
  std::string detail;
  /// Optional supporting witness (e.g. the ideal found for X41).
  std::string witness;
};

bool evaluate_relation(Relation relation, const std::vector<bool>& clauses);

/// Per-ring facts shared by every verdict on that ring: element profiles,
/// R/J(R) with its profiles, and corner rings for every idempotent.
/// Immutable after construction.
class RingAnalysis {
 public:
  explicit RingAnalysis(Ring ring);

  const Ring& ring() const noexcept { return ring_; }
  const Ideal& radical() const noexcept { return radical_; }
  const QuotientRing& modulo_radical() const noexcept { return modulo_radical_; }
  const std::vector<ElementProfile>& profiles() const noexcept { return profiles_; }
  const std::vector<ElementProfile>& radical_quotient_profiles() const noexcept {
    return quotient_profiles_;
  }
  const std::vector<Element>& idempotent_list() const noexcept { return idempotents_; }

  /// Every element of eRe is strongly regular in eRe (e idempotent).
  bool corner_strongly_regular(Element e) const;
  bool corner_dedekind_finite(Element e) const;

  bool ring_regular() const noexcept { return ring_regular_; }
  bool ring_strongly_regular() const noexcept { return ring_strongly_regular_; }

 private:
  struct CornerFacts {
    bool strongly_regular;
    bool dedekind_finite;
  };

  Ring ring_;
  Ideal radical_;
  QuotientRing modulo_radical_;
  std::vector<ElementProfile> profiles_;
  std::vector<ElementProfile> quotient_profiles_;
  std::vector<Element> idempotents_;
  std::map<Element, CornerFacts> corners_;
  bool ring_regular_ = false;
  bool ring_strongly_regular_ = false;
};

/// Evaluates every clause of the statement independently on (R, I).
TheoremVerdict verify(TheoremId id, const RingAnalysis& analysis, const Ideal& ideal);
TheoremVerdict verify(TheoremId id, const Ring& ring, const Ideal& ideal);
/// All requested ids on one instance, sharing ideal-level work.
std::vector<TheoremVerdict> verify_all(std::span<const TheoremId> ids,
                                       const RingAnalysis& analysis, const Ideal& ideal);

/// n has an odd prime factor of multiplicity exactly one.
bool qualifies_for_example41(std::size_t n);
/// Searches Z_n[i] for a nonzero ideal that is regular and square stable.
TheoremVerdict verify_example41(std::size_t n, const SizeLimits& limits = {});

struct IdealLabel {
  IdealSpec spec;
  std::size_t size = 0;
  std::vector<Element> members;
};

struct VerdictRecord {
  std::string ring;
  IdealLabel ideal;
  std::vector<std::string> member_names;
  TheoremVerdict verdict;
};

struct CorpusError {
  std::string ring;
  std::string message;
};

struct Tally {
  std::size_t total = 0;
  std::size_t vacuous = 0;
  /// Hypotheses met and first clause true.
  std::size_t nonvacuous_true = 0;
  /// Hypotheses met and first clause false.
  std::size_t clause_false = 0;
  std::size_t inconsistent = 0;
};

struct CorpusReport {
  std::vector<VerdictRecord> records;
  std::vector<CorpusError> errors;
  std::map<TheoremId, Tally> tallies;
  std::size_t rings_checked = 0;

  std::size_t inconsistencies() const;
};

struct CorpusOptions {
  SizeLimits limits;
  unsigned threads = 1;
  std::size_t max_ideals = 65536;
};

/// Rings failing verify_axioms are reported as errors and skipped.
CorpusReport run_corpus(std::span<const Ring> rings, std::span<const TheoremId> ids,
                        const CorpusOptions& options = {});
/// Construction errors are collected per expression, not thrown.
CorpusReport run_corpus(std::span<const RingExpr> corpus, std::span<const TheoremId> ids,
                        const CorpusOptions& options = {});

/// Z(1..12), Zi(2..7), M(2,Z(2)), M(2,Z(3)), T(2,Z(2..4)), prod(Z(2),Z(3))
/// and quotient/corner derivatives.
std::vector<RingExpr> default_corpus();

struct SearchHit {
  std::int64_t parameter = 0;
  std::string ring;
  IdealLabel ideal;
  std::vector<std::string> member_names;
  PredicateResult satisfied;
  PredicateResult violated;
};

struct SearchReport {
  std::vector<SearchHit> hits;
  std::vector<CorpusError> errors;
  std::size_t instances = 0;
};

/// Every (ring, ideal) of the family where predicate `holds` is true and
/// predicate `fails` is false.
SearchReport search_counterexamples(const std::function<RingExpr(std::int64_t)>& family,
                                    std::span<const std::int64_t> parameters,
                                    std::string_view holds, std::string_view fails,
                                    const CorpusOptions& options = {});

}  // namespace sqs
