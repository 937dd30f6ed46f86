#include "sqstable/structure.hpp"

#include <algorithm>
#include <unordered_set>

#include "ring_memo.hpp"
#include "sqstable/error.hpp"

namespace sqs {

std::optional<std::string> ideal_violation(const Ring& ring, const ElementSet& members) {
  const std::size_t n = ring.size();
  if (members.universe() != n) return "membership mask has the wrong universe size";
  if (!members.contains(ring.zero())) return "does not contain zero";
  const auto list = members.members();
  for (Element a : list) {
    if (!members.contains(ring.neg(a))) return "not closed under negation at " + ring.name(a);
    for (Element b : list)
      if (!members.contains(ring.add(a, b)))
        return "not closed under addition at (" + ring.name(a) + ", " + ring.name(b) + ")";
    for (Element r = 0; r < n; ++r) {
      if (!members.contains(ring.mul(r, a)))
        return "not closed under left multiplication at (" + ring.name(r) + ", " + ring.name(a) + ")";
      if (!members.contains(ring.mul(a, r)))
        return "not closed under right multiplication at (" + ring.name(a) + ", " + ring.name(r) + ")";
    }
  }
  return std::nullopt;
}

Ideal Ideal::verified(const Ring& ring, ElementSet members) {
  if (auto why = ideal_violation(ring, members)) throw Error(ErrorCode::NotAnIdeal, *why);
  return Ideal(std::move(members));
}

Ideal zero_ideal(const Ring& ring) { return Ideal(ElementSet(ring.size(), {ring.zero()})); }

Ideal full_ideal(const Ring& ring) { return Ideal(ElementSet::full(ring.size())); }

Ideal additive_closure(const Ring& ring, const ElementSet& base, std::span<const Element> extra) {
  ElementSet group = base;
  group.insert(ring.zero());
  std::vector<Element> list = group.members();
  for (Element g : extra) {
    if (group.contains(g)) continue;
    // group + <g> is the union of the cosets group + k*g.
    const std::size_t before = list.size();
    for (Element t = g; !group.contains(t); t = ring.add(t, g))
      for (std::size_t i = 0; i < before; ++i)
        if (group.insert(ring.add(list[i], t))) list.push_back(ring.add(list[i], t));
  }
  return Ideal(std::move(group));
}

bool is_commutative(const Ring& ring) {
  auto& memo = ring.memo();
  std::call_once(memo.commutative_once, [&] {
    bool ok = true;
    for (Element a = 0; a < ring.size() && ok; ++a)
      for (Element b = a + 1; b < ring.size() && ok; ++b) ok = ring.mul(a, b) == ring.mul(b, a);
    memo.commutative = ok;
  });
  return memo.commutative;
}

const ElementSet& units(const Ring& ring) {
  auto& memo = ring.memo();
  std::call_once(memo.units_once, [&] {
    const std::size_t n = ring.size();
    memo.units = ElementSet(n);
    memo.inverses.assign(n, std::nullopt);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (ring.mul(a, b) == ring.one() && ring.mul(b, a) == ring.one()) {
          memo.units.insert(a);
          memo.inverses[a] = b;
          break;
        }
  });
  return memo.units;
}

std::optional<Element> inverse(const Ring& ring, Element a) {
  units(ring);
  return ring.memo().inverses.at(a);
}

std::optional<std::pair<Element, Element>> right_inverse_not_unit(const Ring& ring) {
  const auto& u = units(ring);
  for (Element a = 0; a < ring.size(); ++a)
    for (Element b = 0; b < ring.size(); ++b)
      if (ring.mul(a, b) == ring.one() && !u.contains(a)) return std::pair{a, b};
  return std::nullopt;
}

const ElementSet& idempotents(const Ring& ring) {
  auto& memo = ring.memo();
  std::call_once(memo.idempotents_once, [&] {
    memo.idempotents = ElementSet(ring.size());
    for (Element e = 0; e < ring.size(); ++e)
      if (ring.mul(e, e) == e) memo.idempotents.insert(e);
  });
  return memo.idempotents;
}

const Ideal& jacobson_radical(const Ring& ring) {
  auto& memo = ring.memo();
  std::call_once(memo.radical_once, [&] {
    const auto& u = units(ring);
    ElementSet quasi_regular(ring.size());
    for (Element a = 0; a < ring.size(); ++a) {
      bool all = true;
      for (Element r = 0; r < ring.size() && all; ++r) all = u.contains(ring.sub(ring.one(), ring.mul(r, a)));
      if (all) quasi_regular.insert(a);
    }
    memo.radical = Ideal::verified(ring, std::move(quasi_regular));
  });
  return *memo.radical;
}

Ideal ideal_generated_by(const Ring& ring, std::span<const Element> generators) {
  const std::size_t n = ring.size();
  ElementSet products(n);
  std::vector<Element> list;
  for (Element s : generators) {
    if (s >= n) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
    ElementSet right(n);
    for (Element t = 0; t < n; ++t) right.insert(ring.mul(s, t));
    for (Element st : right.members())
      for (Element r = 0; r < n; ++r)
        if (products.insert(ring.mul(r, st))) list.push_back(ring.mul(r, st));
  }
  std::sort(list.begin(), list.end());
  return additive_closure(ring, ElementSet(n, {ring.zero()}), list);
}

Ideal ideal_sum(const Ring& ring, const Ideal& a, const Ideal& b) {
  if (a.size() < b.size()) return ideal_sum(ring, b, a);
  const auto extra = b.elements();
  return additive_closure(ring, a.members(), extra);
}

Ideal ideal_intersection(const Ring& ring, const Ideal& a, const Ideal& b) {
  return additive_closure(ring, a.members().intersect(b.members()), {});
}

std::vector<Ideal> all_ideals(const Ring& ring, std::size_t max_ideals) {
  std::vector<Ideal> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  auto add = [&](Ideal ideal) {
    if (!seen.insert(ideal.members()).second) return;
    if (found.size() >= max_ideals)
      throw Error(ErrorCode::SizeExceeded, "more than " + std::to_string(max_ideals) + " ideals in " +
                                               ring.expression());
    found.push_back(std::move(ideal));
  };
  // u*a and a*u generate the same ideal as a for any unit u.
  const auto unit_list = units(ring).members();
  ElementSet covered(ring.size());
  for (Element a = 0; a < ring.size(); ++a) {
    if (covered.contains(a)) continue;
    for (Element u : unit_list) {
      covered.insert(ring.mul(u, a));
      covered.insert(ring.mul(a, u));
    }
    const Element gen[] = {a};
    add(ideal_generated_by(ring, gen));
  }
  // Every ideal is a finite sum of principal ones; close under pairwise sums.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(ideal_sum(ring, found[i], found[j]));

  std::sort(found.begin(), found.end(),
            [](const Ideal& x, const Ideal& y) { return canonical_less(x.members(), y.members()); });
  return found;
}

std::vector<Element> canonical_generators(const Ring& ring, const Ideal& ideal) {
  std::vector<Element> gens;
  Ideal current = zero_ideal(ring);
  for (Element x : ideal.elements()) {
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = ideal_generated_by(ring, gens);
    if (current.size() == ideal.size()) break;
  }
  return gens;
}

IdealSpec describe_ideal(const Ring& ring, const Ideal& ideal) {
  if (ideal.is_zero()) return IdealSpec::zero();
  if (ideal.is_full()) return IdealSpec::all();
  std::vector<std::string> names;
  for (Element g : canonical_generators(ring, ideal)) names.push_back(ring.name(g));
  return IdealSpec::generated(std::move(names));
}

Ideal resolve_ideal(const Ring& ring, const IdealSpec& spec) {
  switch (spec.kind) {
    case IdealSpec::Kind::Zero: return zero_ideal(ring);
    case IdealSpec::Kind::All: return full_ideal(ring);
    case IdealSpec::Kind::Jacobson: return jacobson_radical(ring);
    case IdealSpec::Kind::Generated: {
      std::vector<Element> gens;
      for (const auto& literal : spec.generators) gens.push_back(ring.element(literal));
      return ideal_generated_by(ring, gens);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown ideal selector");
}

ElementSet one_plus(const Ring& ring, const Ideal& ideal) {
  ElementSet out(ring.size());
  for (Element i : ideal.elements()) out.insert(ring.add(ring.one(), i));
  return out;
}

ElementSet right_set(const Ring& ring, Element a) {
  ElementSet out(ring.size());
  for (Element x = 0; x < ring.size(); ++x) out.insert(ring.mul(a, x));
  return out;
}

ElementSet left_set(const Ring& ring, Element a) {
  ElementSet out(ring.size());
  for (Element x = 0; x < ring.size(); ++x) out.insert(ring.mul(x, a));
  return out;
}

ElementSet sum_set(const Ring& ring, const ElementSet& a, const ElementSet& b) {
  ElementSet out(ring.size());
  const auto lb = b.members();
  for (Element p : a.members())
    for (Element q : lb) out.insert(ring.add(p, q));
  return out;
}

bool is_comaximal(const Ring& ring, Element a, Element b) {
  const ElementSet br = right_set(ring, b);
  for (Element p : right_set(ring, a).members())
    if (br.contains(ring.sub(ring.one(), p))) return true;
  return false;
}

ComaximalityTable::ComaximalityTable(const Ring& ring) : ring_(&ring) {
  right_sets_.reserve(ring.size());
  right_lists_.reserve(ring.size());
  for (Element a = 0; a < ring.size(); ++a) {
    right_sets_.push_back(right_set(ring, a));
    right_lists_.push_back(right_sets_.back().members());
  }
}

bool ComaximalityTable::comaximal(Element a, Element b) const {
  const ElementSet& br = right_sets_[b];
  for (Element p : right_lists_[a])
    if (br.contains(ring_->sub(ring_->one(), p))) return true;
  return false;
}

UnitLifting units_lift(const Ring& ring, const QuotientRing& quotient) {
  const auto& quotient_units = units(quotient.ring);
  UnitLifting out;
  out.lifts.assign(quotient.ring.size(), std::nullopt);
  for (Element u : units(ring).members()) {
    auto& slot = out.lifts[quotient.projection[u]];
    if (!slot) slot = u;
  }
  for (Element v : quotient_units.members())
    if (!out.lifts[v]) {
      out.holds = false;
      out.non_liftable = v;
      break;
    }
  return out;
}

UnitLifting units_lift(const Ring& ring, const Ideal& ideal) {
  return units_lift(ring, make_quotient(ring, ideal));
}

Element enclosing_corner_idempotent(const Ring& ring, const Ideal& ideal, std::span<const Element> xs) {
  for (Element e : idempotents(ring).members()) {
    if (!ideal.contains(e)) continue;
    const bool encloses = std::all_of(xs.begin(), xs.end(), [&](Element x) {
      return ring.mul(e, x) == x && ring.mul(x, e) == x;
    });
    if (encloses) return e;
  }
  throw Error(ErrorCode::NotFound, "no idempotent of the ideal encloses " + ring.names(xs));
}

}  // namespace sqs
