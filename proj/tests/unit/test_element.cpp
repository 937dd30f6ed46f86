#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sqstable/element.hpp"
#include "sqstable/error.hpp"

namespace {

using namespace sqs;

TEST(ElementClass, ProfilesMatchOracleOnCorpus) {
  for (const Ring& r : oracle::corpus()) {
    for (const ElementProfile& p : classify_all(r)) {
      const Element a = p.element;
      EXPECT_TRUE(witnesses_valid(r, p)) << r.expression() << " " << r.name(a);
      EXPECT_EQ(p.is_unit(), oracle::is_unit(r, a));
      EXPECT_EQ(p.idempotent, oracle::idempotent(r, a));
      EXPECT_EQ(p.is_regular(), oracle::regular_element(r, a)) << r.expression() << " " << r.name(a);
      EXPECT_EQ(p.is_unit_regular(), oracle::unit_regular_element(r, a)) << r.expression() << " " << r.name(a);
      EXPECT_EQ(p.is_strongly_regular(), oracle::strongly_regular_element(r, a))
          << r.expression() << " " << r.name(a);
    }
  }
}

TEST(ElementClass, ImplicationChainOnCorpus) {
  for (const Ring& r : oracle::corpus()) {
    for (const ElementProfile& p : classify_all(r)) {
      if (p.is_strongly_regular()) EXPECT_TRUE(p.is_unit_regular()) << r.expression() << " " << r.name(p.element);
      if (p.is_unit_regular()) EXPECT_TRUE(p.is_regular());
      // Finite rings have stable range one, so the two notions coincide.
      EXPECT_EQ(p.is_regular(), p.is_unit_regular()) << r.expression() << " " << r.name(p.element);
    }
  }
}

TEST(ElementClass, NilpotencyIndex) {
  const Ring z8 = make_cyclic(8);
  EXPECT_EQ(classify(z8, 2).nilpotency_index, 3u);
  EXPECT_EQ(classify(z8, 4).nilpotency_index, 2u);
  EXPECT_EQ(classify(z8, 0).nilpotency_index, 1u);
  EXPECT_FALSE(classify(z8, 3).nilpotency_index.has_value());
}

TEST(ElementClass, MatrixUnitIsUnitRegularNotStronglyRegular) {
  const Ring m = make_matrix(2, make_cyclic(2));
  const Element e12 = m.element("[0,1,0,0]");
  const ElementProfile p = classify(m, e12);
  EXPECT_TRUE(p.is_regular());
  ASSERT_TRUE(p.is_unit_regular());
  EXPECT_EQ(m.name(*p.unit_regular_witness), "[0,1,1,0]");
  EXPECT_FALSE(p.is_strongly_regular());
  EXPECT_FALSE(is_strongly_regular(m, e12));
  EXPECT_EQ(p.nilpotency_index, 2u);
  // e12^2 = 0, so neither e12 in e12^2 R nor in R e12^2.
  EXPECT_FALSE(right_square_witness(m, e12).has_value());
  EXPECT_FALSE(left_square_witness(m, e12).has_value());
}

TEST(ElementClass, StronglyRegularInCommutativeRegularRing) {
  const Ring z6 = make_cyclic(6);
  for (Element a = 0; a < 6; ++a) EXPECT_TRUE(is_strongly_regular(z6, a));
  const Ring z4 = make_cyclic(4);
  EXPECT_FALSE(is_strongly_regular(z4, 2));
  EXPECT_FALSE(regular_witness(z4, 2).has_value());
}

TEST(ElementClass, DedekindFiniteOnCorpus) {
  for (const Ring& r : oracle::corpus()) {
    EXPECT_TRUE(is_dedekind_finite(r)) << r.expression();
    for (Element x = 0; x < r.size(); ++x)
      for (Element y = 0; y < r.size(); ++y)
        if (r.mul(x, y) == r.one()) EXPECT_EQ(r.mul(y, x), r.one());
  }
}

TEST(ElementClass, CompleteUnitRegularPinned) {
  const Ring z6 = make_cyclic(6);
  // 3*1 + 4 = 1; 3 + 4y is a unit for y = 1 (7 = 1) and y = 2 (11 = 5).
  EXPECT_EQ(complete_unit_regular(z6, 3, 1, 4), 1u);
  EXPECT_TRUE(oracle::is_unit(z6, z6.add(3, z6.mul(4, 2))));
  try {
    complete_unit_regular(z6, 3, 1, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
  }
  const Ring z4 = make_cyclic(4);
  EXPECT_THROW(complete_unit_regular(z4, 2, 0, 1), Error);
}

TEST(ElementClass, CompleteUnitRegularOnCorpus) {
  for (const Ring& r : oracle::corpus()) {
    if (r.size() > 64) continue;
    for (const ElementProfile& p : classify_all(r)) {
      if (!p.is_unit_regular()) continue;
      for (Element x = 0; x < r.size(); ++x) {
        const Element b = oracle::minus(r, r.one(), r.mul(p.element, x));
        const Element y = complete_unit_regular(r, p.element, x, b);
        EXPECT_TRUE(oracle::is_unit(r, r.add(p.element, r.mul(b, y))));
        for (Element z = 0; z < y; ++z) EXPECT_FALSE(oracle::is_unit(r, r.add(p.element, r.mul(b, z))));
      }
    }
  }
}

TEST(ElementClass, ClassifyInQuotient) {
  const Ring t = make_triangular(2, make_cyclic(2));
  const Ideal& j = jacobson_radical(t);
  const QuotientRing q = make_quotient(t, j);
  for (Element a = 0; a < t.size(); ++a) {
    const ElementProfile p = classify_in_quotient(t, j, a);
    EXPECT_EQ(p.element, q.projection[a]);
    // T_2(Z_2)/J is Z_2 x Z_2, where everything is strongly regular.
    EXPECT_TRUE(p.is_strongly_regular());
    EXPECT_TRUE(classify_in_quotient(q, a).idempotent);
  }
}

}  // namespace
