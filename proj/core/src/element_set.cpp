#include "sqstable/element_set.hpp"

#include <algorithm>
#include <cassert>

namespace sqs {

ElementSet::ElementSet(std::size_t universe, std::span<const Element> members) : bits_(universe, 0) {
  for (Element x : members) insert(x);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  std::fill(s.bits_.begin(), s.bits_.end(), std::uint8_t{1});
  s.count_ = universe;
  return s;
}

bool ElementSet::insert(Element x) {
  assert(x < bits_.size());
  if (bits_[x]) return false;
  bits_[x] = 1;
  ++count_;
  return true;
}

bool ElementSet::erase(Element x) {
  if (x >= bits_.size() || !bits_[x]) return false;
  bits_[x] = 0;
  --count_;
  return true;
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(static_cast<Element>(i));
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if (count_ > other.count_) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.contains(static_cast<Element>(i))) return false;
  return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet out(universe());
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && other.contains(static_cast<Element>(i))) out.insert(static_cast<Element>(i));
  return out;
}

ElementSet ElementSet::unite(const ElementSet& other) const {
  ElementSet out = *this;
  for (Element x : other.members()) out.insert(x);
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  // FNV-1a over the mask.
  std::size_t h = 1469598103934665603ull;
  for (auto b : bits_) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace sqs
