#include "sqstable/predicates.hpp"

#include <algorithm>
#include <array>

#include "sqstable/element.hpp"
#include "sqstable/error.hpp"

namespace sqs {

namespace {

using Clock = std::chrono::steady_clock;

/// Runs body on a fresh result and records the wall time spent.
template <class Body>
PredicateResult timed(std::string name, Body body) {
  PredicateResult r;
  r.predicate = std::move(name);
  const auto start = Clock::now();
  body(r);
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
  return r;
}

void check_universe(const Ring& ring, const Ideal& ideal) {
  if (ideal.members().universe() != ring.size())
    throw Error(ErrorCode::NotAnIdeal, "ideal belongs to a ring of a different size");
}

void refute(PredicateResult& r, std::vector<Role> witness) {
  r.holds = false;
  r.witness = std::move(witness);
}

bool some_square_completion(const Ring& ring, const ElementSet& u, Element base, Element factor) {
  for (Element y = 0; y < ring.size(); ++y)
    if (u.contains(ring.add(base, ring.mul(factor, y)))) return true;
  return false;
}

/// det(a*I + b*Y) for Y = [[y11, y12], [y21, y22]] over a commutative ring.
Element scalar_plus_det(const Ring& ring, Element a, Element b, Element y11, Element y12, Element y21,
                        Element y22) {
  const Element d11 = ring.add(a, ring.mul(b, y11));
  const Element d22 = ring.add(a, ring.mul(b, y22));
  const Element off = ring.mul(ring.mul(b, y12), ring.mul(b, y21));
  return ring.sub(ring.mul(d11, d22), off);
}

bool some_matrix_completion(const Ring& ring, const ElementSet& u, Element a, Element b) {
  const Element n = static_cast<Element>(ring.size());
  for (Element y22 = 0; y22 < n; ++y22)
    for (Element y21 = 0; y21 < n; ++y21)
      for (Element y12 = 0; y12 < n; ++y12)
        for (Element y11 = 0; y11 < n; ++y11)
          if (u.contains(scalar_plus_det(ring, a, b, y11, y12, y21, y22))) return true;
  return false;
}

bool exchange_definition_at(const Ring& ring, const Ideal& ideal, Element a) {
  const auto members = ideal.elements();
  for (Element e : idempotents(ring).members()) {
    if (!ideal.contains(e)) continue;
    const bool has_x = std::any_of(members.begin(), members.end(),
                                   [&](Element x) { return ring.mul(a, x) == e; });
    if (!has_x) continue;
    const bool has_y = std::any_of(members.begin(), members.end(), [&](Element y) {
      return ring.sub(ring.add(a, y), ring.mul(a, y)) == e;
    });
    if (has_y) return true;
  }
  return false;
}

bool exchange_characterization_at(const Ring& ring, Element a) {
  const ElementSet ar = right_set(ring, a);
  const ElementSet complement_r = right_set(ring, ring.sub(ring.one(), a));
  for (Element e : idempotents(ring).members())
    if (ar.contains(e) && complement_r.contains(ring.sub(ring.one(), e))) return true;
  return false;
}

bool is_nilpotent(const Ring& ring, Element a) {
  Element p = a;
  for (std::size_t k = 0; k <= ring.size(); ++k) {
    if (p == ring.zero()) return true;
    p = ring.mul(p, a);
  }
  return false;
}

}  // namespace

const Role* PredicateResult::role(std::string_view name) const {
  for (const auto& r : witness)
    if (r.role == name) return &r;
  return nullptr;
}

PredicateResult is_square_stable_def(const Ring& ring, const Ideal& ideal) {
  check_universe(ring, ideal);
  return timed("square-stable-def", [&](PredicateResult& r) {
    const auto& u = units(ring);
    const ComaximalityTable table(ring);
    for (Element a : ideal.elements()) {
      const Element sq = ring.square(a);
      for (Element b = 0; b < ring.size(); ++b) {
        if (!table.comaximal(a, b)) continue;
        ++r.examined;
        if (!some_square_completion(ring, u, sq, b)) return refute(r, {{"a", a}, {"b", b}});
      }
    }
  });
}

PredicateResult is_square_stable_fast(const Ring& ring, const Ideal& ideal) {
  check_universe(ring, ideal);
  return timed("square-stable", [&](PredicateResult& r) {
    const auto& u = units(ring);
    // Per a, the answer only depends on c = 1 - a*r.
    std::vector<std::int8_t> decided(ring.size());
    for (Element a : ideal.elements()) {
      const Element sq = ring.square(a);
      std::fill(decided.begin(), decided.end(), std::int8_t{-1});
      for (Element s = 0; s < ring.size(); ++s) {
        ++r.examined;
        const Element c = ring.sub(ring.one(), ring.mul(a, s));
        if (decided[c] < 0) decided[c] = some_square_completion(ring, u, sq, c) ? 1 : 0;
        if (!decided[c]) return refute(r, {{"a", a}, {"r", s}});
      }
    }
  });
}

PredicateResult is_square_stable_matrix(const Ring& ring, const Ideal& ideal, const SizeLimits& limits) {
  check_universe(ring, ideal);
  if (!is_commutative(ring))
    throw Error(ErrorCode::NotCommutative, ring.expression() + " is not commutative");
  const std::size_t n = ring.size();
  if (n > 255 || n * n * n * n > limits.max_elements)
    throw Error(ErrorCode::SizeExceeded, "M_2(" + ring.expression() + ") exceeds the size cap of " +
                                             std::to_string(limits.max_elements));
  return timed("square-stable-matrix", [&](PredicateResult& r) {
    const auto& u = units(ring);
    const ComaximalityTable table(ring);
    for (Element a : ideal.elements())
      for (Element b = 0; b < n; ++b) {
        if (!table.comaximal(a, b)) continue;
        ++r.examined;
        if (!some_matrix_completion(ring, u, a, b)) return refute(r, {{"a", a}, {"b", b}});
      }
  });
}

PredicateResult has_stable_range_one(const Ring& ring, const Ideal& ideal) {
  check_universe(ring, ideal);
  return timed("stable-range-one", [&](PredicateResult& r) {
    const auto& u = units(ring);
    const ComaximalityTable table(ring);
    for (Element a : one_plus(ring, ideal).members())
      for (Element b = 0; b < ring.size(); ++b) {
        if (!table.comaximal(a, b)) continue;
        ++r.examined;
        if (!some_square_completion(ring, u, a, b)) return refute(r, {{"a", a}, {"b", b}});
      }
  });
}

ExchangeResult is_exchange_ideal(const Ring& ring, const Ideal& ideal) {
  check_universe(ring, ideal);
  ExchangeResult out;
  out.definition = timed("exchange-def", [&](PredicateResult& r) {
    for (Element a : ideal.elements()) {
      ++r.examined;
      if (!exchange_definition_at(ring, ideal, a)) return refute(r, {{"a", a}});
    }
  });
  out.characterization = timed("exchange-char", [&](PredicateResult& r) {
    for (Element a : ideal.elements()) {
      ++r.examined;
      if (!exchange_characterization_at(ring, a)) return refute(r, {{"a", a}});
    }
  });
  auto& c = out.combined;
  c.predicate = "exchange";
  c.elapsed = out.definition.elapsed + out.characterization.elapsed;
  c.examined = out.definition.examined + out.characterization.examined;
  c.holds = out.definition.holds && out.characterization.holds;
  if (!out.definition.holds)
    c.witness = out.definition.witness;
  else if (!out.characterization.holds)
    c.witness = out.characterization.witness;
  if (out.definition.holds != out.characterization.holds)
    c.fault = "exchange definition and characterization disagree";
  return out;
}

PredicateResult is_regular_ideal(const Ring& ring, const Ideal& ideal) {
  check_universe(ring, ideal);
  return timed("regular", [&](PredicateResult& r) {
    for (Element a : ideal.elements()) {
      ++r.examined;
      if (!regular_witness(ring, a)) return refute(r, {{"a", a}});
    }
  });
}

PredicateResult is_reduced_ideal(const Ring& ring, const Ideal& ideal) {
  check_universe(ring, ideal);
  return timed("reduced", [&](PredicateResult& r) {
    for (Element x : ideal.elements()) {
      ++r.examined;
      if (x != ring.zero() && ring.square(x) == ring.zero()) return refute(r, {{"x", x}});
    }
  });
}

PredicateResult ring_square_stable_range_one(const Ring& ring) {
  PredicateResult r = is_square_stable_fast(ring, full_ideal(ring));
  r.predicate = "ring-square-stable";
  return r;
}

PredicateResult is_abelian_ring(const Ring& ring) {
  return timed("abelian", [&](PredicateResult& r) {
    for (Element e : idempotents(ring).members())
      for (Element x = 0; x < ring.size(); ++x) {
        ++r.examined;
        if (ring.mul(e, x) != ring.mul(x, e)) return refute(r, {{"e", e}, {"x", x}});
      }
  });
}

std::span<const std::string_view> predicate_names() {
  static constexpr std::array<std::string_view, 14> names{
      "square-stable", "square-stable-def", "square-stable-matrix", "stable-range-one", "exchange",
      "exchange-def",  "exchange-char",     "regular",              "reduced",          "ring-square-stable",
      "abelian",       "in-jacobson",       "nil",                  "nonzero"};
  return names;
}

PredicateResult evaluate_predicate(std::string_view name, const Ring& ring, const Ideal& ideal,
                                   const SizeLimits& limits) {
  if (name == "square-stable") return is_square_stable_fast(ring, ideal);
  if (name == "square-stable-def") return is_square_stable_def(ring, ideal);
  if (name == "square-stable-matrix") return is_square_stable_matrix(ring, ideal, limits);
  if (name == "stable-range-one") return has_stable_range_one(ring, ideal);
  if (name == "exchange") return is_exchange_ideal(ring, ideal).combined;
  if (name == "exchange-def") return is_exchange_ideal(ring, ideal).definition;
  if (name == "exchange-char") return is_exchange_ideal(ring, ideal).characterization;
  if (name == "regular") return is_regular_ideal(ring, ideal);
  if (name == "reduced") return is_reduced_ideal(ring, ideal);
  if (name == "ring-square-stable") return ring_square_stable_range_one(ring);
  if (name == "abelian") return is_abelian_ring(ring);
  check_universe(ring, ideal);
  if (name == "in-jacobson")
    return timed("in-jacobson", [&](PredicateResult& r) {
      const Ideal& radical = jacobson_radical(ring);
      for (Element a : ideal.elements()) {
        ++r.examined;
        if (!radical.contains(a)) return refute(r, {{"a", a}});
      }
    });
  if (name == "nil")
    return timed("nil", [&](PredicateResult& r) {
      for (Element a : ideal.elements()) {
        ++r.examined;
        if (!is_nilpotent(ring, a)) return refute(r, {{"a", a}});
      }
    });
  if (name == "nonzero")
    return timed("nonzero", [&](PredicateResult& r) {
      r.examined = 1;
      if (ideal.is_zero()) refute(r, {});
    });
  throw Error(ErrorCode::InvalidArgument, "unknown predicate '" + std::string(name) + "'");
}

bool counterexample_valid(const Ring& ring, const Ideal& ideal, const PredicateResult& result) {
  if (result.holds) return true;
  const auto& name = result.predicate;
  auto get = [&](std::string_view role) -> std::optional<Element> {
    const Role* r = result.role(role);
    if (!r || r->element >= ring.size()) return std::nullopt;
    return r->element;
  };
  const auto& u = units(ring);
  if (name == "square-stable" || name == "ring-square-stable") {
    auto a = get("a"), s = get("r");
    if (!a || !s) return false;
    // The ring-level form ranges over all of R.
    if (name == "square-stable" && !ideal.contains(*a)) return false;
    const Element c = ring.sub(ring.one(), ring.mul(*a, *s));
    return !some_square_completion(ring, u, ring.square(*a), c);
  }
  if (name == "square-stable-def" || name == "square-stable-matrix") {
    auto a = get("a"), b = get("b");
    if (!a || !b || !ideal.contains(*a) || !is_comaximal(ring, *a, *b)) return false;
    if (name == "square-stable-def") return !some_square_completion(ring, u, ring.square(*a), *b);
    return !some_matrix_completion(ring, u, *a, *b);
  }
  if (name == "stable-range-one") {
    auto a = get("a"), b = get("b");
    if (!a || !b || !one_plus(ring, ideal).contains(*a) || !is_comaximal(ring, *a, *b)) return false;
    return !some_square_completion(ring, u, *a, *b);
  }
  if (name == "exchange" || name == "exchange-def" || name == "exchange-char") {
    auto a = get("a");
    if (!a || !ideal.contains(*a)) return false;
    const bool def = exchange_definition_at(ring, ideal, *a);
    const bool chr = exchange_characterization_at(ring, *a);
    if (name == "exchange-def") return !def;
    if (name == "exchange-char") return !chr;
    return !def || !chr;
  }
  if (name == "regular") {
    auto a = get("a");
    return a && ideal.contains(*a) && !regular_witness(ring, *a);
  }
  if (name == "reduced") {
    auto x = get("x");
    return x && ideal.contains(*x) && *x != ring.zero() && ring.square(*x) == ring.zero();
  }
  if (name == "abelian") {
    auto e = get("e"), x = get("x");
    return e && x && ring.mul(*e, *e) == *e && ring.mul(*e, *x) != ring.mul(*x, *e);
  }
  if (name == "in-jacobson") {
    auto a = get("a");
    return a && ideal.contains(*a) && !jacobson_radical(ring).contains(*a);
  }
  if (name == "nil") {
    auto a = get("a");
    return a && ideal.contains(*a) && !is_nilpotent(ring, *a);
  }
  if (name == "nonzero") return ideal.is_zero();
  return false;
}

}  // namespace sqs
