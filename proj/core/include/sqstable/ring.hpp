#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sqstable/element_set.hpp"
#include "sqstable/expr.hpp"

namespace sqs {

namespace detail {
struct RingMemo;
}

/// Guards applied by every constructor.
struct SizeLimits {
  std::size_t max_elements = 4096;
  /// Matrix and triangular constructors reject k != 2 unless set.
  bool allow_any_dimension = false;
};

/// Raw Cayley tables; row-major n x n for add and mul.
struct RingTables {
  std::size_t size = 0;
  std::vector<Element> add;
  std::vector<Element> mul;
  std::vector<Element> neg;
  Element zero = 0;
  Element one = 0;
  std::vector<std::string> names;
};

/// A finite unital ring given by explicit tables over dense indices.
///
/// Immutable after construction and cheap to copy; copies share tables and
/// the structure memo (units, idempotents, radical). The constructor only
/// checks table shapes and index ranges. Ring axioms are checked separately
/// by verify_axioms so corrupted tables can be represented and reported.
class Ring {
 public:
  Ring(RingTables tables, RingExpr provenance,
       std::unordered_map<std::string, Element> extra_aliases = {});

  std::size_t size() const noexcept { return data_->tables.size; }
  bool is_trivial() const noexcept { return size() == 1; }

  Element add(Element a, Element b) const noexcept { return data_->tables.add[a * size() + b]; }
  Element mul(Element a, Element b) const noexcept { return data_->tables.mul[a * size() + b]; }
  Element neg(Element a) const noexcept { return data_->tables.neg[a]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  Element zero() const noexcept { return data_->tables.zero; }
  Element one() const noexcept { return data_->tables.one; }
  Element square(Element a) const noexcept { return mul(a, a); }
  Element pow(Element a, std::size_t k) const noexcept;

  const std::string& name(Element a) const { return data_->tables.names[a]; }
  std::string names(std::span<const Element> elems) const;

  /// Resolves a literal (whitespace-insensitive) to an element.
  std::optional<Element> find(std::string_view literal) const;
  /// As find, but throws Error(UnknownElement).
  Element element(std::string_view literal) const;

  const RingTables& tables() const noexcept { return data_->tables; }
  const RingExpr& provenance() const noexcept { return data_->provenance; }
  std::string expression() const { return render(data_->provenance); }

  detail::RingMemo& memo() const noexcept { return *memo_; }

 private:
  struct Data {
    RingTables tables;
    RingExpr provenance;
    std::unordered_map<std::string, Element> aliases;
  };
  std::shared_ptr<const Data> data_;
  std::shared_ptr<detail::RingMemo> memo_;
};

Ring make_cyclic(std::size_t n, const SizeLimits& limits = {});
Ring make_gaussian(std::size_t n, const SizeLimits& limits = {});
Ring make_matrix(std::size_t k, const Ring& base, const SizeLimits& limits = {});
Ring make_triangular(std::size_t k, const Ring& base, const SizeLimits& limits = {});
Ring make_product(std::span<const Ring> factors, const SizeLimits& limits = {});

class Ideal;

struct QuotientRing {
  Ring ring;
  /// a -> image of a in the quotient.
  std::vector<Element> projection;
};

/// Cosets are ordered by their least representative and named after it.
QuotientRing make_quotient(const Ring& ring, const Ideal& ideal);
QuotientRing make_quotient(const Ring& ring, const Ideal& ideal, const IdealSpec& label);

struct CornerRing {
  Ring ring;
  /// corner element -> element of the ambient ring.
  std::vector<Element> embedding;
};

CornerRing make_corner(const Ring& ring, Element idempotent);

/// Elaborates an expression, applying limits at every constructor.
Ring build(const RingExpr& expr, const SizeLimits& limits = {});

struct AxiomViolation {
  std::string axiom;
  std::vector<Element> instance;
  std::string describe(const Ring& ring) const;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Exhaustive check of the unital ring axioms. Reports at most
/// per_axiom_limit instances of each violated axiom, in increasing
/// lexicographic order of the offending tuple.
AxiomReport verify_axioms(const Ring& ring, std::size_t per_axiom_limit = 8);

}  // namespace sqs
