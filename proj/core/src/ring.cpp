#include "sqstable/ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ring_memo.hpp"
#include "sqstable/error.hpp"
#include "sqstable/structure.hpp"

namespace sqs {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t cap,
                          const std::string& what) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > cap / base)
      throw Error(ErrorCode::SizeExceeded, what + " exceeds the size cap of " + std::to_string(cap));
    out *= base;
  }
  if (out > cap)
    throw Error(ErrorCode::SizeExceeded, what + " has " + std::to_string(out) +
                                             " elements, cap is " + std::to_string(cap));
  return out;
}

void check_dimension(std::size_t k, const SizeLimits& limits, const char* what) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + " dimension must be positive");
  if (k != 2 && !limits.allow_any_dimension)
    throw Error(ErrorCode::SizeExceeded,
                std::string(what) + " dimension " + std::to_string(k) + " rejected (only 2 is enabled)");
}

/// Fills add/mul/neg tables from element-level operations.
template <class Add, class Mul, class Neg>
RingTables tabulate(std::size_t n, Add add, Mul mul, Neg neg) {
  RingTables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  t.neg.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    t.neg[a] = neg(static_cast<Element>(a));
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = add(static_cast<Element>(a), static_cast<Element>(b));
      t.mul[a * n + b] = mul(static_cast<Element>(a), static_cast<Element>(b));
    }
  }
  return t;
}

/// Mixed-radix coordinates, first coordinate varying fastest.
struct Coordinates {
  std::size_t radix;
  std::size_t width;
  std::vector<Element> digits;  // size() * width

  Coordinates(std::size_t radix_, std::size_t width_, std::size_t count)
      : radix(radix_), width(width_), digits(count * width_) {
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t v = i;
      for (std::size_t p = 0; p < width; ++p) {
        digits[i * width + p] = static_cast<Element>(v % radix);
        v /= radix;
      }
    }
  }

  const Element* of(Element i) const { return &digits[i * width]; }

  template <class It>
  Element encode(It first) const {
    std::size_t v = 0;
    std::size_t scale = 1;
    for (std::size_t p = 0; p < width; ++p, ++first) {
      v += *first * scale;
      scale *= radix;
    }
    return static_cast<Element>(v);
  }
};

std::string join_names(const Ring& base, const std::vector<Element>& entries, char open, char close) {
  std::string out(1, open);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += base.name(entries[i]);
  }
  out += close;
  return out;
}

Ring cyclic_ring(std::size_t n, const SizeLimits& limits, RingExpr provenance) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "Z(n) needs n >= 1");
  if (n > limits.max_elements)
    throw Error(ErrorCode::SizeExceeded, "Z(" + std::to_string(n) + ") exceeds the size cap");
  auto t = tabulate(
      n, [n](Element a, Element b) { return static_cast<Element>((a + b) % n); },
      [n](Element a, Element b) { return static_cast<Element>((std::uint64_t{a} * b) % n); },
      [n](Element a) { return static_cast<Element>((n - a) % n); });
  t.zero = 0;
  t.one = static_cast<Element>(1 % n);
  for (std::size_t a = 0; a < n; ++a) t.names.push_back(std::to_string(a));
  return Ring(std::move(t), std::move(provenance));
}

Ring gaussian_ring(std::size_t n, const SizeLimits& limits, RingExpr provenance) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "Zi(n) needs n >= 1");
  const std::size_t size = checked_power(n, 2, limits.max_elements, "Zi(" + std::to_string(n) + ")");
  auto re = [n](Element x) { return x % n; };
  auto im = [n](Element x) { return x / n; };
  auto pack = [n](std::size_t a, std::size_t b) { return static_cast<Element>((a % n) + (b % n) * n); };
  auto t = tabulate(
      size, [&](Element x, Element y) { return pack(re(x) + re(y), im(x) + im(y)); },
      [&](Element x, Element y) {
        const std::size_t a = re(x), b = im(x), c = re(y), d = im(y);
        return pack(a * c + (n - (b * d) % n), a * d + b * c);
      },
      [&](Element x) { return pack(n - re(x), n - im(x)); });
  t.zero = pack(0, 0);
  t.one = pack(1, 0);
  for (Element x = 0; x < size; ++x)
    t.names.push_back(std::to_string(re(x)) + "+" + std::to_string(im(x)) + "i");
  return Ring(std::move(t), std::move(provenance));
}

/// Matrices over base whose nonzero entries are restricted to `free`
/// positions (row-major indices into k x k).
Ring matrix_like_ring(std::size_t k, const Ring& base, const std::vector<std::size_t>& free,
                      const SizeLimits& limits, RingExpr provenance, const std::string& what) {
  const std::size_t m = base.size();
  const std::size_t size = checked_power(m, free.size(), limits.max_elements, what);
  const Coordinates coords(m, free.size(), size);

  // Dense k x k entry lists for each element.
  std::vector<Element> dense(size * k * k, base.zero());
  for (Element x = 0; x < size; ++x)
    for (std::size_t p = 0; p < free.size(); ++p) dense[x * k * k + free[p]] = coords.of(x)[p];
  auto entry = [&](Element x, std::size_t r, std::size_t c) { return dense[x * k * k + r * k + c]; };
  auto encode = [&](const std::vector<Element>& full) {
    std::vector<Element> picked(free.size());
    for (std::size_t p = 0; p < free.size(); ++p) picked[p] = full[free[p]];
    return coords.encode(picked.begin());
  };

  std::vector<Element> scratch(k * k);
  auto t = tabulate(
      size,
      [&](Element x, Element y) {
        for (std::size_t i = 0; i < k * k; ++i) scratch[i] = base.add(dense[x * k * k + i], dense[y * k * k + i]);
        return encode(scratch);
      },
      [&](Element x, Element y) {
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c) {
            Element acc = base.zero();
            for (std::size_t l = 0; l < k; ++l) acc = base.add(acc, base.mul(entry(x, r, l), entry(y, l, c)));
            scratch[r * k + c] = acc;
          }
        return encode(scratch);
      },
      [&](Element x) {
        for (std::size_t i = 0; i < k * k; ++i) scratch[i] = base.neg(dense[x * k * k + i]);
        return encode(scratch);
      });

  std::vector<Element> full(k * k, base.zero());
  t.zero = encode(full);
  for (std::size_t i = 0; i < k; ++i) full[i * k + i] = base.one();
  t.one = encode(full);
  for (Element x = 0; x < size; ++x) {
    std::vector<Element> entries(dense.begin() + x * k * k, dense.begin() + (x + 1) * k * k);
    t.names.push_back(join_names(base, entries, '[', ']'));
  }
  return Ring(std::move(t), std::move(provenance));
}

Ring matrix_ring(std::size_t k, const Ring& base, const SizeLimits& limits, RingExpr provenance) {
  check_dimension(k, limits, "matrix");
  std::vector<std::size_t> free(k * k);
  for (std::size_t i = 0; i < free.size(); ++i) free[i] = i;
  return matrix_like_ring(k, base, free, limits, std::move(provenance), "M(" + std::to_string(k) + ",...)");
}

Ring triangular_ring(std::size_t k, const Ring& base, const SizeLimits& limits, RingExpr provenance) {
  check_dimension(k, limits, "triangular");
  std::vector<std::size_t> free;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = r; c < k; ++c) free.push_back(r * k + c);
  return matrix_like_ring(k, base, free, limits, std::move(provenance), "T(" + std::to_string(k) + ",...)");
}

Ring product_ring(std::span<const Ring> factors, const SizeLimits& limits, RingExpr provenance) {
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "prod() needs at least one factor");
  if (factors.size() == 1) {
    // A singleton product is the factor itself.
    RingTables t = factors[0].tables();
    return Ring(std::move(t), std::move(provenance));
  }
  std::size_t size = 1;
  for (const Ring& f : factors) {
    if (size > limits.max_elements / f.size())
      throw Error(ErrorCode::SizeExceeded, "product exceeds the size cap of " + std::to_string(limits.max_elements));
    size *= f.size();
  }
  if (size > limits.max_elements)
    throw Error(ErrorCode::SizeExceeded, "product exceeds the size cap of " + std::to_string(limits.max_elements));

  const std::size_t width = factors.size();
  std::vector<Element> digits(size * width);
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t v = i;
    for (std::size_t p = 0; p < width; ++p) {
      digits[i * width + p] = static_cast<Element>(v % factors[p].size());
      v /= factors[p].size();
    }
  }
  auto encode = [&](const std::vector<Element>& comps) {
    std::size_t v = 0, scale = 1;
    for (std::size_t p = 0; p < width; ++p) {
      v += comps[p] * scale;
      scale *= factors[p].size();
    }
    return static_cast<Element>(v);
  };
  std::vector<Element> scratch(width);
  auto componentwise = [&](auto op) {
    return [&, op](Element x, Element y) {
      for (std::size_t p = 0; p < width; ++p) scratch[p] = op(factors[p], digits[x * width + p], digits[y * width + p]);
      return encode(scratch);
    };
  };
  auto t = tabulate(
      size, componentwise([](const Ring& r, Element a, Element b) { return r.add(a, b); }),
      componentwise([](const Ring& r, Element a, Element b) { return r.mul(a, b); }),
      [&](Element x) {
        for (std::size_t p = 0; p < width; ++p) scratch[p] = factors[p].neg(digits[x * width + p]);
        return encode(scratch);
      });
  for (std::size_t p = 0; p < width; ++p) scratch[p] = factors[p].zero();
  t.zero = encode(scratch);
  for (std::size_t p = 0; p < width; ++p) scratch[p] = factors[p].one();
  t.one = encode(scratch);
  for (std::size_t x = 0; x < size; ++x) {
    std::string name = "(";
    for (std::size_t p = 0; p < width; ++p) {
      if (p) name += ',';
      name += factors[p].name(digits[x * width + p]);
    }
    t.names.push_back(name + ")");
  }
  return Ring(std::move(t), std::move(provenance));
}

QuotientRing quotient_ring(const Ring& ring, const Ideal& ideal, RingExpr provenance) {
  const std::size_t n = ring.size();
  if (ideal.members().universe() != n)
    throw Error(ErrorCode::NotAnIdeal, "ideal belongs to a ring of a different size");
  const auto members = ideal.elements();

  // Least representative of each additive coset.
  std::vector<Element> rep(n);
  for (Element a = 0; a < n; ++a) {
    Element best = a;
    for (Element i : members) best = std::min(best, ring.add(a, i));
    rep[a] = best;
  }
  std::vector<Element> reps(rep);
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<Element> index_of(n, 0);
  for (std::size_t c = 0; c < reps.size(); ++c) index_of[reps[c]] = static_cast<Element>(c);

  std::vector<Element> projection(n);
  for (Element a = 0; a < n; ++a) projection[a] = index_of[rep[a]];

  auto t = tabulate(
      reps.size(), [&](Element c, Element d) { return projection[ring.add(reps[c], reps[d])]; },
      [&](Element c, Element d) { return projection[ring.mul(reps[c], reps[d])]; },
      [&](Element c) { return projection[ring.neg(reps[c])]; });
  t.zero = projection[ring.zero()];
  t.one = projection[ring.one()];
  for (Element r : reps) t.names.push_back(ring.name(r));

  std::unordered_map<std::string, Element> aliases;
  for (Element a = 0; a < n; ++a) aliases.emplace(ring.name(a), projection[a]);
  return QuotientRing{Ring(std::move(t), std::move(provenance), std::move(aliases)), std::move(projection)};
}

CornerRing corner_ring(const Ring& ring, Element e, RingExpr provenance) {
  if (e >= ring.size()) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  if (ring.mul(e, e) != e) throw Error(ErrorCode::NotIdempotent, ring.name(e) + " is not idempotent");

  std::vector<Element> embedding;
  for (Element x = 0; x < ring.size(); ++x) embedding.push_back(ring.mul(ring.mul(e, x), e));
  std::sort(embedding.begin(), embedding.end());
  embedding.erase(std::unique(embedding.begin(), embedding.end()), embedding.end());
  std::vector<Element> index_of(ring.size(), 0);
  for (std::size_t i = 0; i < embedding.size(); ++i) index_of[embedding[i]] = static_cast<Element>(i);

  auto t = tabulate(
      embedding.size(), [&](Element x, Element y) { return index_of[ring.add(embedding[x], embedding[y])]; },
      [&](Element x, Element y) { return index_of[ring.mul(embedding[x], embedding[y])]; },
      [&](Element x) { return index_of[ring.neg(embedding[x])]; });
  t.zero = index_of[ring.zero()];
  t.one = index_of[e];
  for (Element x : embedding) t.names.push_back(ring.name(x));
  return CornerRing{Ring(std::move(t), std::move(provenance)), std::move(embedding)};
}

}  // namespace

Ring::Ring(RingTables tables, RingExpr provenance, std::unordered_map<std::string, Element> extra_aliases)
    : memo_(std::make_shared<detail::RingMemo>()) {
  const std::size_t n = tables.size;
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "a ring needs at least one element");
  if (tables.add.size() != n * n || tables.mul.size() != n * n || tables.neg.size() != n ||
      tables.names.size() != n)
    throw Error(ErrorCode::InvalidArgument, "table shapes do not match the element count");
  auto in_range = [n](Element x) { return x < n; };
  if (!std::all_of(tables.add.begin(), tables.add.end(), in_range) ||
      !std::all_of(tables.mul.begin(), tables.mul.end(), in_range) ||
      !std::all_of(tables.neg.begin(), tables.neg.end(), in_range) || !in_range(tables.zero) ||
      !in_range(tables.one))
    throw Error(ErrorCode::InvalidArgument, "table entry out of range");

  auto data = std::make_shared<Data>();
  for (Element x = 0; x < n; ++x) data->aliases.emplace(strip_whitespace(tables.names[x]), x);
  for (auto& [literal, x] : extra_aliases) {
    if (!in_range(x)) throw Error(ErrorCode::InvalidArgument, "alias target out of range");
    data->aliases.emplace(strip_whitespace(literal), x);
  }
  data->tables = std::move(tables);
  data->provenance = std::move(provenance);
  data_ = std::move(data);
}

Element Ring::pow(Element a, std::size_t k) const noexcept {
  Element out = one();
  for (std::size_t i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

std::string Ring::names(std::span<const Element> elems) const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ", ";
    out += name(elems[i]);
  }
  return out + "}";
}

std::optional<Element> Ring::find(std::string_view literal) const {
  auto it = data_->aliases.find(strip_whitespace(literal));
  if (it == data_->aliases.end()) return std::nullopt;
  return it->second;
}

Element Ring::element(std::string_view literal) const {
  if (auto x = find(literal)) return *x;
  throw Error(ErrorCode::UnknownElement,
              "'" + std::string(literal) + "' is not an element of " + expression());
}

Ring make_cyclic(std::size_t n, const SizeLimits& limits) {
  return cyclic_ring(n, limits, RingExpr::cyclic(static_cast<std::int64_t>(n)));
}

Ring make_gaussian(std::size_t n, const SizeLimits& limits) {
  return gaussian_ring(n, limits, RingExpr::gaussian(static_cast<std::int64_t>(n)));
}

Ring make_matrix(std::size_t k, const Ring& base, const SizeLimits& limits) {
  return matrix_ring(k, base, limits, RingExpr::matrix(static_cast<std::int64_t>(k), base.provenance()));
}

Ring make_triangular(std::size_t k, const Ring& base, const SizeLimits& limits) {
  return triangular_ring(k, base, limits, RingExpr::triangular(static_cast<std::int64_t>(k), base.provenance()));
}

Ring make_product(std::span<const Ring> factors, const SizeLimits& limits) {
  std::vector<RingExpr> exprs;
  for (const Ring& f : factors) exprs.push_back(f.provenance());
  return product_ring(factors, limits, RingExpr::product(std::move(exprs)));
}

QuotientRing make_quotient(const Ring& ring, const Ideal& ideal) {
  return make_quotient(ring, ideal, describe_ideal(ring, ideal));
}

QuotientRing make_quotient(const Ring& ring, const Ideal& ideal, const IdealSpec& label) {
  return quotient_ring(ring, ideal, RingExpr::quotient(ring.provenance(), label));
}

CornerRing make_corner(const Ring& ring, Element idempotent) {
  if (idempotent >= ring.size()) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  return corner_ring(ring, idempotent, RingExpr::corner(ring.provenance(), ring.name(idempotent)));
}

namespace {

Ring build_node(const RingExpr& expr, const SizeLimits& limits) {
  auto positive_param = [&](std::size_t i) -> std::size_t {
    if (i >= expr.params.size() || expr.params[i] < 1)
      throw Error(ErrorCode::InvalidArgument, "integer parameters must be >= 1");
    return static_cast<std::size_t>(expr.params[i]);
  };
  auto operand = [&](std::size_t i) -> const RingExpr& {
    if (i >= expr.operands.size()) throw Error(ErrorCode::InvalidArgument, "missing operand");
    return expr.operands[i];
  };
  switch (expr.kind) {
    case ExprKind::Cyclic: return cyclic_ring(positive_param(0), limits, expr);
    case ExprKind::Gaussian: return gaussian_ring(positive_param(0), limits, expr);
    case ExprKind::Matrix: {
      const std::size_t k = positive_param(0);
      check_dimension(k, limits, "matrix");
      return matrix_ring(k, build(operand(0), limits), limits, expr);
    }
    case ExprKind::Triangular: {
      const std::size_t k = positive_param(0);
      check_dimension(k, limits, "triangular");
      return triangular_ring(k, build(operand(0), limits), limits, expr);
    }
    case ExprKind::Product: {
      std::vector<Ring> factors;
      for (const RingExpr& f : expr.operands) factors.push_back(build(f, limits));
      return product_ring(factors, limits, expr);
    }
    case ExprKind::Quotient: {
      const Ring base = build(operand(0), limits);
      const Ideal ideal = resolve_ideal(base, expr.ideal);
      return quotient_ring(base, ideal, expr).ring;
    }
    case ExprKind::Corner: {
      const Ring base = build(operand(0), limits);
      return corner_ring(base, base.element(expr.element), expr).ring;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown expression kind");
}

}  // namespace

Ring build(const RingExpr& expr, const SizeLimits& limits) {
  try {
    return build_node(expr, limits);
  } catch (const Error& e) {
    // Only the innermost failing node tags the message.
    if (e.message().starts_with("in ")) throw;
    throw Error(e.code(), "in " + render(expr) + ": " + e.message());
  }
}

std::string AxiomViolation::describe(const Ring& ring) const {
  std::ostringstream os;
  os << axiom << " fails at (";
  for (std::size_t i = 0; i < instance.size(); ++i) {
    if (i) os << ", ";
    os << ring.name(instance[i]);
  }
  os << ")";
  return os.str();
}

namespace {

/// Greedy set whose closure under + (as a magma) is all of R.
std::vector<Element> additive_generators(const Ring& ring) {
  const std::size_t n = ring.size();
  std::vector<char> in(n, 0);
  std::vector<Element> members, generators;
  auto absorb = [&](Element start) {
    std::vector<Element> work{start};
    in[start] = 1;
    members.push_back(start);
    while (!work.empty()) {
      const Element z = work.back();
      work.pop_back();
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (Element w : {ring.add(z, members[i]), ring.add(members[i], z)}) {
          if (in[w]) continue;
          in[w] = 1;
          members.push_back(w);
          work.push_back(w);
        }
      }
    }
  };
  for (Element a = 0; a < n; ++a) {
    if (in[a]) continue;
    generators.push_back(a);
    absorb(a);
  }
  return generators;
}

// Exact check of the four triple axioms in O(n^2 |G|) for an additive
// generating set G. Associativity of + uses Light's test; once it holds,
// additivity of x -> ax and x -> xa only needs checking against G, and once
// both distributive laws hold, (ab)c and a(bc) are additive in each argument
// so generators suffice.
bool triple_axioms_hold(const Ring& ring) {
  const std::size_t n = ring.size();
  const std::vector<Element> gens = additive_generators(ring);
  for (Element g : gens)
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (ring.add(ring.add(x, g), y) != ring.add(x, ring.add(g, y))) return false;
  for (Element a = 0; a < n; ++a)
    for (Element x = 0; x < n; ++x)
      for (Element g : gens) {
        if (ring.mul(a, ring.add(x, g)) != ring.add(ring.mul(a, x), ring.mul(a, g))) return false;
        if (ring.mul(ring.add(x, g), a) != ring.add(ring.mul(x, a), ring.mul(g, a))) return false;
      }
  for (Element a : gens)
    for (Element b : gens)
      for (Element c : gens)
        if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c))) return false;
  return true;
}

}  // namespace

AxiomReport verify_axioms(const Ring& ring, std::size_t per_axiom_limit) {
  AxiomReport report;
  const std::size_t n = ring.size();
  std::map<std::string, std::size_t> seen;
  auto fail = [&](const char* axiom, std::vector<Element> instance) {
    if (seen[axiom]++ < per_axiom_limit) report.violations.push_back({axiom, std::move(instance)});
  };
  auto saturated = [&](const char* axiom) { return seen[axiom] >= per_axiom_limit; };

  {
    std::map<std::string, Element> first;
    for (Element a = 0; a < n; ++a) {
      auto [it, fresh] = first.emplace(ring.name(a), a);
      if (!fresh) fail("names-distinct", {it->second, a});
    }
  }
  const Element z = ring.zero();
  const Element u = ring.one();
  for (Element a = 0; a < n; ++a) {
    if (ring.add(a, z) != a || ring.add(z, a) != a) fail("additive-identity", {a});
    if (ring.add(a, ring.neg(a)) != z) fail("additive-inverse", {a});
    if (ring.mul(a, u) != a || ring.mul(u, a) != a) fail("multiplicative-identity", {a});
    for (Element b = 0; b < n; ++b)
      if (ring.add(a, b) != ring.add(b, a)) fail("additive-commutativity", {a, b});
  }
  if (triple_axioms_hold(ring)) return report;

  // Some triple fails; scan them all to report concrete instances.
  const char* const triple_axioms[] = {"additive-associativity", "multiplicative-associativity",
                                       "left-distributivity", "right-distributivity"};
  for (Element a = 0; a < n; ++a) {
    if (std::all_of(std::begin(triple_axioms), std::end(triple_axioms), saturated)) break;
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c))) fail(triple_axioms[0], {a, b, c});
        if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c))) fail(triple_axioms[1], {a, b, c});
        if (ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c))) fail(triple_axioms[2], {a, b, c});
        if (ring.mul(ring.add(a, b), c) != ring.add(ring.mul(a, c), ring.mul(b, c))) fail(triple_axioms[3], {a, b, c});
      }
  }
  return report;
}

}  // namespace sqs
