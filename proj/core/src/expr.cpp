#include "sqstable/expr.hpp"

#include <cctype>

namespace sqs {

RingExpr RingExpr::cyclic(std::int64_t n) {
  RingExpr e;
  e.kind = ExprKind::Cyclic;
  e.params = {n};
  return e;
}

RingExpr RingExpr::gaussian(std::int64_t n) {
  RingExpr e;
  e.kind = ExprKind::Gaussian;
  e.params = {n};
  return e;
}

RingExpr RingExpr::matrix(std::int64_t k, RingExpr base) {
  RingExpr e;
  e.kind = ExprKind::Matrix;
  e.params = {k};
  e.operands.push_back(std::move(base));
  return e;
}

RingExpr RingExpr::triangular(std::int64_t k, RingExpr base) {
  RingExpr e;
  e.kind = ExprKind::Triangular;
  e.params = {k};
  e.operands.push_back(std::move(base));
  return e;
}

RingExpr RingExpr::product(std::vector<RingExpr> factors) {
  RingExpr e;
  e.kind = ExprKind::Product;
  e.operands = std::move(factors);
  return e;
}

RingExpr RingExpr::quotient(RingExpr base, IdealSpec ideal) {
  RingExpr e;
  e.kind = ExprKind::Quotient;
  e.operands.push_back(std::move(base));
  e.ideal = std::move(ideal);
  return e;
}

RingExpr RingExpr::corner(RingExpr base, std::string element) {
  RingExpr e;
  e.kind = ExprKind::Corner;
  e.operands.push_back(std::move(base));
  e.element = strip_whitespace(element);
  return e;
}

bool operator==(const RingExpr& a, const RingExpr& b) {
  if (a.kind != b.kind || a.params != b.params || a.operands.size() != b.operands.size())
    return false;
  for (std::size_t i = 0; i < a.operands.size(); ++i)
    if (!(a.operands[i] == b.operands[i])) return false;
  if (a.kind == ExprKind::Quotient && !(a.ideal == b.ideal)) return false;
  if (a.kind == ExprKind::Corner && a.element != b.element) return false;
  return true;
}

std::string render(const IdealSpec& spec) {
  switch (spec.kind) {
    case IdealSpec::Kind::Zero: return "zero";
    case IdealSpec::Kind::All: return "all";
    case IdealSpec::Kind::Jacobson: return "jacobson";
    case IdealSpec::Kind::Generated: {
      std::string out = "gen(";
      for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        if (i) out += ',';
        out += spec.generators[i];
      }
      return out + ")";
    }
  }
  return {};
}

std::string render(const RingExpr& expr) {
  auto param = [&](std::size_t i) { return std::to_string(expr.params.at(i)); };
  switch (expr.kind) {
    case ExprKind::Cyclic: return "Z(" + param(0) + ")";
    case ExprKind::Gaussian: return "Zi(" + param(0) + ")";
    case ExprKind::Matrix: return "M(" + param(0) + "," + render(expr.operands.at(0)) + ")";
    case ExprKind::Triangular: return "T(" + param(0) + "," + render(expr.operands.at(0)) + ")";
    case ExprKind::Product: {
      std::string out = "prod(";
      for (std::size_t i = 0; i < expr.operands.size(); ++i) {
        if (i) out += ',';
        out += render(expr.operands[i]);
      }
      return out + ")";
    }
    case ExprKind::Quotient: return "quot(" + render(expr.operands.at(0)) + "," + render(expr.ideal) + ")";
    case ExprKind::Corner: return "corner(" + render(expr.operands.at(0)) + "," + expr.element + ")";
  }
  return {};
}

std::string strip_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace sqs
