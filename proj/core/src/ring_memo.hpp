#pragma once

#include <mutex>
#include <optional>
#include <vector>

#include "sqstable/element_set.hpp"
#include "sqstable/structure.hpp"

namespace sqs::detail {

/// Write-once caches attached to a ring; every field is a pure function of
/// the tables so racing initializers would agree.
struct RingMemo {
  std::once_flag units_once;
  ElementSet units;
  std::vector<std::optional<Element>> inverses;

  std::once_flag idempotents_once;
  ElementSet idempotents;

  std::once_flag radical_once;
  std::optional<Ideal> radical;

  std::once_flag commutative_once;
  bool commutative = false;
};

}  // namespace sqs::detail
