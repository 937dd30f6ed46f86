#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sqs {

/// Ideal selector used by quotient expressions and the CLI.
struct IdealSpec {
  enum class Kind { Zero, All, Jacobson, Generated };

  Kind kind = Kind::Zero;
  /// Element literals (whitespace stripped) when kind == Generated.
  std::vector<std::string> generators;

  static IdealSpec zero() { return {Kind::Zero, {}}; }
  static IdealSpec all() { return {Kind::All, {}}; }
  static IdealSpec jacobson() { return {Kind::Jacobson, {}}; }
  static IdealSpec generated(std::vector<std::string> gens) { return {Kind::Generated, std::move(gens)}; }

  friend bool operator==(const IdealSpec&, const IdealSpec&) = default;
};

enum class ExprKind { Cyclic, Gaussian, Matrix, Triangular, Product, Quotient, Corner };

/// Syntax tree of a ring specification such as "quot(T(2,Z(2)),jacobson)".
///
/// Arity is fixed per kind:
///   Cyclic, Gaussian     params = {n}
///   Matrix, Triangular   params = {k}, operands = {base}
///   Product              operands = {r1, ..., rm}, m >= 1
///   Quotient             operands = {base}, ideal
///   Corner               operands = {base}, element
struct RingExpr {
  ExprKind kind = ExprKind::Cyclic;
  std::vector<std::int64_t> params;
  std::vector<RingExpr> operands;
  IdealSpec ideal;
  std::string element;

  static RingExpr cyclic(std::int64_t n);
  static RingExpr gaussian(std::int64_t n);
  static RingExpr matrix(std::int64_t k, RingExpr base);
  static RingExpr triangular(std::int64_t k, RingExpr base);
  static RingExpr product(std::vector<RingExpr> factors);
  static RingExpr quotient(RingExpr base, IdealSpec ideal);
  static RingExpr corner(RingExpr base, std::string element);
};

bool operator==(const RingExpr& a, const RingExpr& b);

/// Canonical text, accepted back by the CLI grammar.
std::string render(const RingExpr& expr);
std::string render(const IdealSpec& spec);

/// Literal with all whitespace removed; used to compare element literals.
std::string strip_whitespace(std::string_view text);

}  // namespace sqs
