#include <gtest/gtest.h>

#include "sqstable/cli/corpus_file.hpp"
#include "sqstable/cli/parse.hpp"
#include "sqstable/ring.hpp"
#include "sqstable/theorems.hpp"

#ifndef SQSTABLE_DEFAULT_CORPUS_FILE
#error "SQSTABLE_DEFAULT_CORPUS_FILE must point at tools/corpus/default.toml"
#endif

namespace {

using namespace sqs;
using sqs::cli::parse_ideal_spec;
using sqs::cli::parse_ring_expr;
using sqs::cli::ParseError;

TEST(Parser, Constructors) {
  EXPECT_EQ(parse_ring_expr("M(2,Z(2))"), RingExpr::matrix(2, RingExpr::cyclic(2)));
  EXPECT_EQ(parse_ring_expr("quot(T(2,Z(2)),jacobson)"),
            RingExpr::quotient(RingExpr::triangular(2, RingExpr::cyclic(2)), IdealSpec::jacobson()));
  EXPECT_EQ(build(parse_ring_expr("quot(T(2,Z(2)),jacobson)")).size(), 4u);
  EXPECT_EQ(parse_ring_expr("prod(Z(2), Zi(3), Z(5))"),
            RingExpr::product({RingExpr::cyclic(2), RingExpr::gaussian(3), RingExpr::cyclic(5)}));
  EXPECT_EQ(parse_ring_expr("corner( M(2,Z(2)) , [1, 0, 0, 0] )"),
            RingExpr::corner(RingExpr::matrix(2, RingExpr::cyclic(2)), "[1,0,0,0]"));
  EXPECT_EQ(parse_ring_expr("quot(Zi(5), gen(2+1i))"),
            RingExpr::quotient(RingExpr::gaussian(5), IdealSpec::generated({"2+1i"})));
  EXPECT_EQ(parse_ring_expr("quot(prod(Z(2),Z(3)),gen((1,0),(0,1)))"),
            RingExpr::quotient(RingExpr::product({RingExpr::cyclic(2), RingExpr::cyclic(3)}),
                               IdealSpec::generated({"(1,0)", "(0,1)"})));
}

TEST(Parser, WhitespaceInsensitive) {
  EXPECT_EQ(parse_ring_expr("  M ( 2 , Z ( 2 ) )  "), parse_ring_expr("M(2,Z(2))"));
  EXPECT_EQ(parse_ideal_spec(" gen( 1 , 2 ) "), IdealSpec::generated({"1", "2"}));
}

TEST(Parser, UnclosedParenthesis) {
  try {
    parse_ring_expr("Zi(3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_EQ(e.expected(), std::vector<std::string>{")"});
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
  }
}

TEST(Parser, ErrorOffsets) {
  struct Case {
    const char* text;
    std::size_t offset;
  };
  for (const Case& c : {Case{"", 0}, Case{"Q(3)", 0}, Case{"M(2;Z(2))", 3}, Case{"Z(x)", 2}, Case{"Z(3))", 4},
                        Case{"quot(Z(4),half)", 10}, Case{"corner(Z(4),)", 12}, Case{"prod()", 5},
                        Case{"quot(Z(4),gen(1)", 16}}) {
    try {
      parse_ring_expr(c.text);
      FAIL() << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.offset(), c.offset) << c.text << ": " << e.what();
      EXPECT_FALSE(e.expected().empty());
    }
  }
}

TEST(Parser, ExpectedSets) {
  try {
    parse_ring_expr("quot(Z(4),half)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.expected(), (std::vector<std::string>{"zero", "all", "jacobson", "gen("}));
  }
}

TEST(Parser, Bindings) {
  EXPECT_EQ(parse_ring_expr("M(2,Z(n))", {{"n", 5}}), RingExpr::matrix(2, RingExpr::cyclic(5)));
  EXPECT_THROW(parse_ring_expr("Z(m)", {{"n", 5}}), ParseError);
}

TEST(Parser, RenderRoundTrip) {
  for (const RingExpr& e : default_corpus()) EXPECT_EQ(parse_ring_expr(render(e)), e) << render(e);
  const std::vector<RingExpr> extra{
      RingExpr::product({RingExpr::cyclic(2), RingExpr::matrix(2, RingExpr::cyclic(2))}),
      RingExpr::quotient(RingExpr::product({RingExpr::cyclic(2), RingExpr::cyclic(2)}),
                         IdealSpec::generated({"(1,0)"})),
      RingExpr::corner(RingExpr::quotient(RingExpr::matrix(2, RingExpr::cyclic(4)), IdealSpec::generated({"2"})),
                       "[1,0,0,0]"),
      RingExpr::quotient(RingExpr::cyclic(8), IdealSpec::all())};
  for (const RingExpr& e : extra) EXPECT_EQ(parse_ring_expr(render(e)), e) << render(e);
}

TEST(Parser, ElementLiteralsUseRingNames) {
  const Ring r = build(parse_ring_expr("quot(M(2,Z(4)),gen([2,0,0,0]))"));
  EXPECT_EQ(r.size(), 16u);
  EXPECT_EQ(build(parse_ring_expr("corner(prod(Z(2),Z(3)),(1,0))")).size(), 2u);
}

TEST(CorpusFile, ShippedDefaultMatchesBuiltIn) {
  const cli::CorpusSpec spec = cli::read_corpus_file(SQSTABLE_DEFAULT_CORPUS_FILE);
  EXPECT_EQ(spec.rings, default_corpus());
  const auto ids = instance_theorems();
  EXPECT_EQ(spec.theorems, std::vector<TheoremId>(ids.begin(), ids.end()));
}

TEST(CorpusFile, Syntax) {
  const cli::CorpusSpec spec = cli::parse_corpus(R"toml(
# comment
theorems = ["T33", "C45"]   # trailing comment
rings = [
  "Z(4)",
  "M(2, Z(2))", # spaces inside expressions
]
)toml");
  EXPECT_EQ(spec.theorems, (std::vector<TheoremId>{TheoremId::T33, TheoremId::C45}));
  ASSERT_EQ(spec.rings.size(), 2u);
  EXPECT_EQ(spec.rings[1], RingExpr::matrix(2, RingExpr::cyclic(2)));

  const cli::CorpusSpec with_default = cli::parse_corpus("include = \"default\"\nrings = [\"Z(13)\"]\n");
  EXPECT_EQ(with_default.rings.size(), default_corpus().size() + 1);
  EXPECT_EQ(with_default.rings.back(), RingExpr::cyclic(13));
  EXPECT_TRUE(with_default.theorems.empty());
}

TEST(CorpusFile, ErrorsCarryLineNumbers) {
  auto message = [](const char* text) {
    try {
      cli::parse_corpus(text, "c.toml");
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("rings = [\"Z(4)\"]\ncolour = \"red\"\n").find("c.toml:2: unknown key"), std::string::npos);
  EXPECT_NE(message("\n\nrings = [\"Z(4\"]\n").find("c.toml:3: ring \"Z(4\""), std::string::npos);
  EXPECT_NE(message("theorems = [\"X41\"]").find("unknown theorem id"), std::string::npos);
  EXPECT_NE(message("rings = [\"Z(4)\"\n").find("expected ',' or ']'"), std::string::npos);
  EXPECT_NE(message("rings = [\"Z(4)\"]\nrings = []\n").find("duplicate key"), std::string::npos);
  EXPECT_NE(message("rings \"Z(4)\"").find("expected '='"), std::string::npos);
}

}  // namespace
