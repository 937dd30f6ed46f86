#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sqstable/ring.hpp"
#include "sqstable/structure.hpp"

namespace sqs {

/// a = a^2 * right and a = left * a^2.
struct StrongWitness {
  Element right;
  Element left;
  friend bool operator==(const StrongWitness&, const StrongWitness&) = default;
};

/// Classification of one element with the first witness found in canonical
/// order for each property.
struct ElementProfile {
  Element element = 0;
  std::optional<Element> inverse;
  bool idempotent = false;
  /// Least k >= 1 with a^k = 0.
  std::optional<std::size_t> nilpotency_index;
  /// a = a x a
  std::optional<Element> regular_witness;
  /// a = a u a with u a unit
  std::optional<Element> unit_regular_witness;
  std::optional<StrongWitness> strong_witness;

  bool is_unit() const noexcept { return inverse.has_value(); }
  bool is_nilpotent() const noexcept { return nilpotency_index.has_value(); }
  bool is_regular() const noexcept { return regular_witness.has_value(); }
  bool is_unit_regular() const noexcept { return unit_regular_witness.has_value(); }
  bool is_strongly_regular() const noexcept { return strong_witness.has_value(); }
};

ElementProfile classify(const Ring& ring, Element a);
std::vector<ElementProfile> classify_all(const Ring& ring);

/// Re-checks every stored witness against its defining equation.
bool witnesses_valid(const Ring& ring, const ElementProfile& profile);

std::optional<Element> regular_witness(const Ring& ring, Element a);
/// Least x with a^2 x = a (membership a in a^2 R).
std::optional<Element> right_square_witness(const Ring& ring, Element a);
/// Least y with y a^2 = a (membership a in R a^2).
std::optional<Element> left_square_witness(const Ring& ring, Element a);
bool is_strongly_regular(const Ring& ring, Element a);

/// x*y = 1 with y*x != 1, if any.
std::optional<std::pair<Element, Element>> dedekind_finite_counterexample(const Ring& ring);
inline bool is_dedekind_finite(const Ring& ring) {
  return !dedekind_finite_counterexample(ring).has_value();
}

/// Given a*x + b = 1 with a unit-regular, the least y with a + b*y a unit.
/// Error(PreconditionFailed) when the hypotheses fail.
Element complete_unit_regular(const Ring& ring, Element a, Element x, Element b);

/// Profile of the image of a in R/I (the element field refers to the
/// quotient index).
ElementProfile classify_in_quotient(const Ring& ring, const Ideal& ideal, Element a);
ElementProfile classify_in_quotient(const QuotientRing& quotient, Element a);

}  // namespace sqs
