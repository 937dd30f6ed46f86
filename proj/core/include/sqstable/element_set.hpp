#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace sqs {

/// Dense index of a ring element, 0..n-1 in canonical order.
using Element = std::uint32_t;

/// Membership mask over the elements of one ring.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe, 0) {}
  ElementSet(std::size_t universe, std::span<const Element> members);
  ElementSet(std::size_t universe, std::initializer_list<Element> members)
      : ElementSet(universe, std::span<const Element>(members.begin(), members.size())) {}

  static ElementSet full(std::size_t universe);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(Element x) const noexcept { return x < bits_.size() && bits_[x] != 0; }
  /// Returns true if x was not yet present.
  bool insert(Element x);
  bool erase(Element x);

  /// Members in increasing index order.
  std::vector<Element> members() const;

  bool is_subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;
  ElementSet unite(const ElementSet& other) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.count_ == b.count_ && a.bits_ == b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t count_ = 0;
};

/// Orders by size first, then by the increasing member lists.
bool canonical_less(const ElementSet& a, const ElementSet& b);

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace sqs
