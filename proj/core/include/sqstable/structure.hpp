#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sqstable/element_set.hpp"
#include "sqstable/expr.hpp"
#include "sqstable/ring.hpp"

namespace sqs {

/// A two-sided ideal of a ring, held as a membership mask.
///
/// Instances only come out of the closure operations below or out of
/// Ideal::verified, so holding an Ideal means the closure properties have
/// been checked against the ring it was made for.
class Ideal {
 public:
  /// Throws Error(NotAnIdeal) naming the first failing closure instance.
  static Ideal verified(const Ring& ring, ElementSet members);

  const ElementSet& members() const noexcept { return members_; }
  std::vector<Element> elements() const { return members_.members(); }
  std::size_t size() const noexcept { return members_.count(); }
  bool contains(Element x) const noexcept { return members_.contains(x); }
  bool is_zero() const noexcept { return members_.count() == 1; }
  bool is_full() const noexcept { return members_.count() == members_.universe(); }
  bool is_subset_of(const Ideal& other) const { return members_.is_subset_of(other.members_); }

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  explicit Ideal(ElementSet members) : members_(std::move(members)) {}

  friend Ideal zero_ideal(const Ring&);
  friend Ideal full_ideal(const Ring&);
  friend Ideal additive_closure(const Ring&, const ElementSet&, std::span<const Element>);

  ElementSet members_;
};

/// Empty optional on success; otherwise a description of the failing law.
std::optional<std::string> ideal_violation(const Ring& ring, const ElementSet& members);
inline bool is_ideal(const Ring& ring, const ElementSet& members) {
  return !ideal_violation(ring, members).has_value();
}

Ideal zero_ideal(const Ring& ring);
Ideal full_ideal(const Ring& ring);

/// Additive subgroup generated by base plus extra, which the caller
/// guarantees is closed under two-sided multiplication.
Ideal additive_closure(const Ring& ring, const ElementSet& base, std::span<const Element> extra);

bool is_commutative(const Ring& ring);

/// U(R). Cached per ring.
const ElementSet& units(const Ring& ring);
/// Two-sided inverse, if any.
std::optional<Element> inverse(const Ring& ring, Element a);
/// Every a with a right inverse b (a*b = 1) is a two-sided unit; returns the
/// first offending pair otherwise.
std::optional<std::pair<Element, Element>> right_inverse_not_unit(const Ring& ring);

const ElementSet& idempotents(const Ring& ring);

/// J(R) = {a : 1 - r*a is a unit for every r}. Cached per ring.
const Ideal& jacobson_radical(const Ring& ring);

/// Smallest two-sided ideal containing the given elements.
Ideal ideal_generated_by(const Ring& ring, std::span<const Element> generators);
Ideal ideal_sum(const Ring& ring, const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ring& ring, const Ideal& a, const Ideal& b);

/// Every two-sided ideal, sorted by (size, member list). Throws
/// Error(SizeExceeded) once more than max_ideals distinct ideals appear.
std::vector<Ideal> all_ideals(const Ring& ring, std::size_t max_ideals = 65536);

/// Greedy generators in canonical order: each one is the least member not
/// in the ideal generated by the previous ones.
std::vector<Element> canonical_generators(const Ring& ring, const Ideal& ideal);

/// zero / all / gen(...) label that resolves back to the same ideal.
IdealSpec describe_ideal(const Ring& ring, const Ideal& ideal);
Ideal resolve_ideal(const Ring& ring, const IdealSpec& spec);

/// The coset 1 + I.
ElementSet one_plus(const Ring& ring, const Ideal& ideal);

ElementSet right_set(const Ring& ring, Element a);  // aR
ElementSet left_set(const Ring& ring, Element a);   // Ra
ElementSet sum_set(const Ring& ring, const ElementSet& a, const ElementSet& b);

/// aR + bR = R, i.e. 1 in aR + bR.
bool is_comaximal(const Ring& ring, Element a, Element b);

/// Memoized right sets aR for repeated comaximality tests.
class ComaximalityTable {
 public:
  explicit ComaximalityTable(const Ring& ring);
  const ElementSet& right(Element a) const { return right_sets_[a]; }
  bool comaximal(Element a, Element b) const;

 private:
  const Ring* ring_;
  std::vector<ElementSet> right_sets_;
  std::vector<std::vector<Element>> right_lists_;
};

struct UnitLifting {
  bool holds = true;
  /// Unit of R/I with no unit preimage (index in the quotient ring).
  std::optional<Element> non_liftable;
  /// quotient unit -> least unit of R projecting onto it.
  std::vector<std::optional<Element>> lifts;
};

UnitLifting units_lift(const Ring& ring, const Ideal& ideal);
UnitLifting units_lift(const Ring& ring, const QuotientRing& quotient);

/// Least idempotent e in the ideal with e*x = x*e = x for all xs. Exists for
/// regular ideals; Error(NotFound) otherwise.
Element enclosing_corner_idempotent(const Ring& ring, const Ideal& ideal,
                                    std::span<const Element> xs);

}  // namespace sqs
