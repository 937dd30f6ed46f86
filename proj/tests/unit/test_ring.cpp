#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sqstable/error.hpp"
#include "sqstable/ring.hpp"
#include "sqstable/structure.hpp"

namespace {

using namespace sqs;

TEST(RingCore, CyclicTablesMatchModularArithmetic) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const Ring r = make_cyclic(n);
    ASSERT_EQ(r.size(), n);
    for (Element a = 0; a < n; ++a) {
      EXPECT_EQ(r.name(a), std::to_string(a));
      for (Element b = 0; b < n; ++b) {
        EXPECT_EQ(r.add(a, b), (a + b) % n);
        EXPECT_EQ(r.mul(a, b), (a * b) % n);
      }
    }
  }
}

TEST(RingCore, GaussianTablesMatchComplexArithmetic) {
  for (std::int64_t n = 2; n <= 7; ++n) {
    const Ring r = make_gaussian(n);
    ASSERT_EQ(r.size(), static_cast<std::size_t>(n * n));
    for (std::int64_t i = 0; i < n * n; ++i) {
      const std::array<std::int64_t, 2> x{i % n, i / n};
      EXPECT_EQ(r.name(i), std::to_string(x[0]) + "+" + std::to_string(x[1]) + "i");
      for (std::int64_t j = 0; j < n * n; ++j) {
        const auto p = oracle::gauss_mul(x, {j % n, j / n}, n);
        EXPECT_EQ(r.mul(i, j), static_cast<Element>(p[0] + p[1] * n));
      }
    }
  }
}

TEST(RingCore, MatrixTablesMatchMatrixProduct) {
  for (std::int64_t n : {2, 3}) {
    const Ring r = make_matrix(2, make_cyclic(n));
    ASSERT_EQ(r.size(), static_cast<std::size_t>(n * n * n * n));
    for (std::int64_t i = 0; i < n * n * n * n; ++i) {
      const auto x = oracle::mat_decode(i, n);
      EXPECT_EQ(r.name(i), "[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) +
                               "," + std::to_string(x[3]) + "]");
      for (std::int64_t j = 0; j < n * n * n * n; ++j)
        EXPECT_EQ(r.mul(i, j), oracle::mat_encode(oracle::mat_mul(x, oracle::mat_decode(j, n), n), n));
    }
  }
}

TEST(RingCore, TriangularIsSubringOfMatrices) {
  for (std::int64_t n : {2, 3, 4}) {
    const Ring t = make_triangular(2, make_cyclic(n));
    const Ring m = make_matrix(2, make_cyclic(n));
    ASSERT_EQ(t.size(), static_cast<std::size_t>(n * n * n));
    for (Element a = 0; a < t.size(); ++a) {
      const Element ma = m.element(t.name(a));
      EXPECT_EQ(oracle::mat_decode(ma, n)[2], 0);
      for (Element b = 0; b < t.size(); ++b) {
        const Element mb = m.element(t.name(b));
        EXPECT_EQ(t.name(t.mul(a, b)), m.name(m.mul(ma, mb)));
        EXPECT_EQ(t.name(t.add(a, b)), m.name(m.add(ma, mb)));
      }
    }
  }
}

TEST(RingCore, CanonicalOrderPinsMatrixUnits) {
  const Ring r = make_matrix(2, make_cyclic(2));
  EXPECT_EQ(r.name(r.zero()), "[0,0,0,0]");
  EXPECT_EQ(r.name(r.one()), "[1,0,0,1]");
  EXPECT_LT(r.element("[0,1,0,0]"), r.element("[0,0,1,0]"));
  EXPECT_LT(r.element("[0,0,1,0]"), r.element("[0,0,0,1]"));
}

TEST(RingCore, ProductIsComponentwise) {
  const std::vector<Ring> factors{make_cyclic(2), make_cyclic(3)};
  const Ring r = make_product(factors);
  ASSERT_EQ(r.size(), 6u);
  EXPECT_EQ(r.name(r.one()), "(1,1)");
  const Element x = r.element("(1,2)");
  const Element y = r.element("(1,2)");
  EXPECT_EQ(r.name(r.mul(x, y)), "(1,1)");
  EXPECT_EQ(r.name(r.add(x, y)), "(0,1)");

  const std::vector<Ring> single{make_cyclic(5)};
  const Ring s = make_product(single);
  EXPECT_EQ(s.size(), 5u);
  EXPECT_EQ(s.name(3), "3");
}

TEST(RingCore, QuotientByResidueIdeal) {
  const Ring z12 = make_cyclic(12);
  const Element six = z12.element("6");
  const Ideal i = ideal_generated_by(z12, std::span<const Element>(&six, 1));
  const QuotientRing q = make_quotient(z12, i);
  ASSERT_EQ(q.ring.size(), 6u);
  for (Element a = 0; a < 12; ++a) {
    EXPECT_EQ(q.ring.name(q.projection[a]), std::to_string(a % 6));
    // Every coset member's name resolves to its coset.
    EXPECT_EQ(q.ring.element(z12.name(a)), q.projection[a]);
  }
  for (Element a = 0; a < 12; ++a)
    for (Element b = 0; b < 12; ++b)
      EXPECT_EQ(q.projection[z12.mul(a, b)], q.ring.mul(q.projection[a], q.projection[b]));
}

TEST(RingCore, QuotientByRadicalOfTriangular) {
  const Ring t = build(RingExpr::quotient(RingExpr::triangular(2, RingExpr::cyclic(2)), IdealSpec::jacobson()));
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t.expression(), "quot(T(2,Z(2)),jacobson)");
  std::size_t idem = 0;
  for (Element e = 0; e < t.size(); ++e) idem += oracle::idempotent(t, e);
  EXPECT_EQ(idem, 4u);
}

TEST(RingCore, CornerRing) {
  const Ring m = make_matrix(2, make_cyclic(2));
  const CornerRing c = make_corner(m, m.element("[1,0,0,0]"));
  ASSERT_EQ(c.ring.size(), 2u);
  EXPECT_EQ(c.ring.name(c.ring.one()), "[1,0,0,0]");
  EXPECT_EQ(c.embedding[c.ring.one()], m.element("[1,0,0,0]"));
  EXPECT_THROW(make_corner(m, m.element("[0,1,0,0]")), Error);
  try {
    make_corner(m, m.element("[0,1,0,0]"));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIdempotent);
  }
}

TEST(RingCore, SizeGuard) {
  try {
    build(RingExpr::matrix(2, RingExpr::cyclic(9)));
    FAIL() << "M(2,Z(9)) has 6561 elements";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeExceeded);
    EXPECT_NE(std::string(e.what()).find("M(2,Z(9))"), std::string::npos);
  }
  EXPECT_NO_THROW(build(RingExpr::matrix(2, RingExpr::cyclic(8))));
  EXPECT_THROW(build(RingExpr::matrix(3, RingExpr::cyclic(2))), Error);
  EXPECT_THROW(build(RingExpr::triangular(3, RingExpr::cyclic(2))), Error);
  SizeLimits open;
  open.allow_any_dimension = true;
  EXPECT_EQ(build(RingExpr::matrix(3, RingExpr::cyclic(2)), open).size(), 512u);
  EXPECT_EQ(build(RingExpr::triangular(3, RingExpr::cyclic(2)), open).size(), 64u);
  SizeLimits small;
  small.max_elements = 10;
  EXPECT_THROW(make_cyclic(11, small), Error);
}

TEST(RingCore, InvalidParameters) {
  EXPECT_THROW(build(RingExpr::cyclic(0)), Error);
  EXPECT_THROW(build(RingExpr::gaussian(-2)), Error);
  EXPECT_THROW(build(RingExpr::quotient(RingExpr::cyclic(4), IdealSpec::generated({"7"}))), Error);
}

TEST(RingCore, ErrorsNameFailingSubexpression) {
  try {
    build(RingExpr::product({RingExpr::cyclic(2), RingExpr::corner(RingExpr::cyclic(6), "2")}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.message().rfind("in corner(Z(6),2)", 0), 0u) << e.message();
  }
}

TEST(RingCore, TrivialRing) {
  const Ring r = make_cyclic(1);
  EXPECT_TRUE(r.is_trivial());
  EXPECT_EQ(r.zero(), r.one());
  EXPECT_TRUE(verify_axioms(r).ok());
}

TEST(RingCore, AxiomsHoldOnDefaultCorpus) {
  ASSERT_GE(oracle::corpus().size(), 25u);
  for (const Ring& r : oracle::corpus()) {
    const AxiomReport report = verify_axioms(r);
    EXPECT_TRUE(report.ok()) << r.expression() << ": " << report.violations.front().describe(r);
  }
}

TEST(RingCore, SingleEntryCorruptionDetected) {
  for (const RingExpr& expr : {RingExpr::cyclic(6), RingExpr::matrix(2, RingExpr::cyclic(2)),
                                RingExpr::triangular(2, RingExpr::cyclic(3)), RingExpr::gaussian(3)}) {
    const Ring base = build(expr);
    const std::size_t n = base.size();
    for (std::size_t cell : {std::size_t{0}, n + 1, n * n / 2, n * n - 1}) {
      for (bool mul : {true, false}) {
        RingTables t = base.tables();
        auto& table = mul ? t.mul : t.add;
        table[cell] = (table[cell] + 1) % n;
        const Ring bad(std::move(t), base.provenance());
        EXPECT_FALSE(verify_axioms(bad).ok()) << render(expr) << (mul ? " mul" : " add") << " cell " << cell;
      }
    }
  }
}

TEST(RingCore, AxiomReportIsBounded) {
  RingTables t = make_matrix(2, make_cyclic(2)).tables();
  for (auto& x : t.mul) x = 0;
  const Ring bad(std::move(t), RingExpr::cyclic(1));
  const AxiomReport report = verify_axioms(bad, 2);
  EXPECT_FALSE(report.ok());
  std::map<std::string, int> per_axiom;
  for (const auto& v : report.violations) ++per_axiom[v.axiom];
  for (const auto& [axiom, count] : per_axiom) EXPECT_LE(count, 2) << axiom;
}

TEST(RingCore, ShapeErrorsRejected) {
  RingTables t = make_cyclic(3).tables();
  t.mul.pop_back();
  EXPECT_THROW(Ring(std::move(t), RingExpr::cyclic(3)), Error);
  RingTables u = make_cyclic(3).tables();
  u.add[0] = 7;
  EXPECT_THROW(Ring(std::move(u), RingExpr::cyclic(3)), Error);
}

TEST(RingCore, UnknownElement) {
  const Ring r = make_cyclic(4);
  try {
    r.element("9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownElement);
  }
  EXPECT_FALSE(r.find("x").has_value());
}

TEST(RingCore, ProvenanceRoundTrip) {
  for (const auto& e : default_corpus()) EXPECT_EQ(build(e).provenance(), e) << render(e);
}

}  // namespace
