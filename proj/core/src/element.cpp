#include "sqstable/element.hpp"

#include "sqstable/error.hpp"

namespace sqs {

std::optional<Element> regular_witness(const Ring& ring, Element a) {
  for (Element x = 0; x < ring.size(); ++x)
    if (ring.mul(ring.mul(a, x), a) == a) return x;
  return std::nullopt;
}

std::optional<Element> right_square_witness(const Ring& ring, Element a) {
  const Element sq = ring.square(a);
  for (Element x = 0; x < ring.size(); ++x)
    if (ring.mul(sq, x) == a) return x;
  return std::nullopt;
}

std::optional<Element> left_square_witness(const Ring& ring, Element a) {
  const Element sq = ring.square(a);
  for (Element y = 0; y < ring.size(); ++y)
    if (ring.mul(y, sq) == a) return y;
  return std::nullopt;
}

bool is_strongly_regular(const Ring& ring, Element a) {
  return right_square_witness(ring, a) && left_square_witness(ring, a);
}

ElementProfile classify(const Ring& ring, Element a) {
  if (a >= ring.size()) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  ElementProfile p;
  p.element = a;
  p.inverse = inverse(ring, a);
  p.idempotent = ring.mul(a, a) == a;

  Element power = a;
  for (std::size_t k = 1; k <= ring.size(); ++k) {
    if (power == ring.zero()) {
      p.nilpotency_index = k;
      break;
    }
    power = ring.mul(power, a);
  }

  p.regular_witness = regular_witness(ring, a);
  if (p.regular_witness) {
    const auto& u = units(ring);
    for (Element v = 0; v < ring.size() && !p.unit_regular_witness; ++v)
      if (u.contains(v) && ring.mul(ring.mul(a, v), a) == a) p.unit_regular_witness = v;
  }
  auto right = right_square_witness(ring, a);
  auto left = right ? left_square_witness(ring, a) : std::nullopt;
  if (right && left) p.strong_witness = StrongWitness{*right, *left};
  return p;
}

std::vector<ElementProfile> classify_all(const Ring& ring) {
  std::vector<ElementProfile> out;
  out.reserve(ring.size());
  for (Element a = 0; a < ring.size(); ++a) out.push_back(classify(ring, a));
  return out;
}

bool witnesses_valid(const Ring& ring, const ElementProfile& p) {
  const Element a = p.element;
  if (p.inverse && (ring.mul(a, *p.inverse) != ring.one() || ring.mul(*p.inverse, a) != ring.one()))
    return false;
  if (p.idempotent != (ring.mul(a, a) == a)) return false;
  if (p.nilpotency_index) {
    const std::size_t k = *p.nilpotency_index;
    if (ring.pow(a, k) != ring.zero()) return false;
    if (k > 1 && ring.pow(a, k - 1) == ring.zero()) return false;
  }
  if (p.regular_witness && ring.mul(ring.mul(a, *p.regular_witness), a) != a) return false;
  if (p.unit_regular_witness) {
    const Element u = *p.unit_regular_witness;
    if (!units(ring).contains(u) || ring.mul(ring.mul(a, u), a) != a) return false;
  }
  if (p.strong_witness) {
    const Element sq = ring.square(a);
    if (ring.mul(sq, p.strong_witness->right) != a || ring.mul(p.strong_witness->left, sq) != a) return false;
  }
  return true;
}

std::optional<std::pair<Element, Element>> dedekind_finite_counterexample(const Ring& ring) {
  for (Element x = 0; x < ring.size(); ++x)
    for (Element y = 0; y < ring.size(); ++y)
      if (ring.mul(x, y) == ring.one() && ring.mul(y, x) != ring.one()) return std::pair{x, y};
  return std::nullopt;
}

Element complete_unit_regular(const Ring& ring, Element a, Element x, Element b) {
  if (a >= ring.size() || x >= ring.size() || b >= ring.size())
    throw Error(ErrorCode::InvalidArgument, "element index out of range");
  if (ring.add(ring.mul(a, x), b) != ring.one())
    throw Error(ErrorCode::PreconditionFailed, "a*x + b != 1 for a = " + ring.name(a) + ", x = " +
                                                   ring.name(x) + ", b = " + ring.name(b));
  const auto& u = units(ring);
  bool unit_regular = false;
  for (Element v = 0; v < ring.size() && !unit_regular; ++v)
    unit_regular = u.contains(v) && ring.mul(ring.mul(a, v), a) == a;
  if (!unit_regular) throw Error(ErrorCode::PreconditionFailed, ring.name(a) + " is not unit-regular");
  for (Element y = 0; y < ring.size(); ++y)
    if (u.contains(ring.add(a, ring.mul(b, y)))) return y;
  throw Error(ErrorCode::NotFound, "no completion y for a = " + ring.name(a) + ", b = " + ring.name(b));
}

ElementProfile classify_in_quotient(const QuotientRing& quotient, Element a) {
  return classify(quotient.ring, quotient.projection.at(a));
}

ElementProfile classify_in_quotient(const Ring& ring, const Ideal& ideal, Element a) {
  return classify_in_quotient(make_quotient(ring, ideal), a);
}

}  // namespace sqs
