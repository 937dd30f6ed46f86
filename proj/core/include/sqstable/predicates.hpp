#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqstable/ring.hpp"
#include "sqstable/structure.hpp"

namespace sqs {

/// One labelled element of a witness or counterexample tuple.
struct Role {
  std::string role;
  Element element;
  friend bool operator==(const Role&, const Role&) = default;
};

struct PredicateResult {
  std::string predicate;
  bool holds = true;
  /// Counterexample when holds is false; for existential predicates the
  /// witness found when holds is true.
  std::vector<Role> witness;
  std::chrono::microseconds elapsed{0};
  std::uint64_t examined = 0;
  /// Non-empty when two internal routes that must agree did not.
  std::string fault;

  const Role* role(std::string_view name) const;
};

// Square stability: for a in I, b in R with aR + bR = R, some y has
// a^2 + b*y in U(R).
PredicateResult is_square_stable_def(const Ring& ring, const Ideal& ideal);
/// Equivalent form: for all a in I, r in R some x has a^2 + (1 - a*r)*x in U(R).
PredicateResult is_square_stable_fast(const Ring& ring, const Ideal& ideal);
/// Commutative rings only: comaximal (a in I, b) admits Y in M_2(R) with
/// a*I_2 + b*Y invertible. Requires |R|^4 <= limits.max_elements.
PredicateResult is_square_stable_matrix(const Ring& ring, const Ideal& ideal,
                                        const SizeLimits& limits = {});

/// Comaximal (a in 1 + I, b) admits y with a + b*y in U(R).
PredicateResult has_stable_range_one(const Ring& ring, const Ideal& ideal);

struct ExchangeResult {
  /// e = a x = a + y - a y with e idempotent and e, x, y in I.
  PredicateResult definition;
  /// Some idempotent e in aR with 1 - e in (1 - a)R.
  PredicateResult characterization;
  /// Conjunction; fault set when the two forms disagree.
  PredicateResult combined;
};

ExchangeResult is_exchange_ideal(const Ring& ring, const Ideal& ideal);

PredicateResult is_regular_ideal(const Ring& ring, const Ideal& ideal);
/// No nonzero x in I with x^2 = 0. A nonzero nilpotent x of index k gives
/// the nonzero square-zero element x^(k-1) inside I, so squares suffice.
PredicateResult is_reduced_ideal(const Ring& ring, const Ideal& ideal);

PredicateResult ring_square_stable_range_one(const Ring& ring);
/// Every idempotent is central.
PredicateResult is_abelian_ring(const Ring& ring);

/// Identifiers accepted by evaluate_predicate.
std::span<const std::string_view> predicate_names();

/// Dispatches by identifier: square-stable, square-stable-def,
/// square-stable-matrix, stable-range-one, exchange, exchange-def,
/// exchange-char, regular, reduced, ring-square-stable, abelian,
/// in-jacobson, nil, nonzero. Error(InvalidArgument) for anything else.
PredicateResult evaluate_predicate(std::string_view name, const Ring& ring, const Ideal& ideal,
                                   const SizeLimits& limits = {});

/// Re-derives a failing quantifier instance from scratch: true when the
/// stored counterexample genuinely violates the predicate. Results that
/// hold always re-validate.
bool counterexample_valid(const Ring& ring, const Ideal& ideal, const PredicateResult& result);

}  // namespace sqs
