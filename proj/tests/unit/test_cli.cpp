#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "sqstable/cli/command.hpp"

namespace {

using namespace sqs::cli;
using nlohmann::json;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = main_entry(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
  return out;
}

TEST(Cli, CheckSquareStableOnFullMatrixRing) {
  const Result r = invoke({"check", "square-stable", "--ring", "M(2,Z(2))", "--ideal", "all"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("holds           no"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("a=[0,1,0,0], r=[0,0,1,0]"), std::string::npos) << r.out;

  const Result strict = invoke({"check", "square-stable", "--ring", "M(2,Z(2))", "--ideal", "all", "--strict"});
  EXPECT_EQ(strict.status, 1);
}

TEST(Cli, CheckJsonCarriesEveryResultField) {
  const Result r = invoke({"check", "square-stable", "--ring", "M(2,Z(2))", "--format", "json"});
  ASSERT_EQ(r.status, 0);
  const auto records = lines(r.out);
  ASSERT_EQ(records.size(), 1u);
  const json& j = records[0];
  for (const char* key : {"predicate", "holds", "witness", "elapsed_us", "examined", "fault", "ring", "ideal"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["witness"][0]["element"], "[0,1,0,0]");
  EXPECT_EQ(j["witness"][1]["role"], "r");
  EXPECT_EQ(j["witness"][1]["element"], "[0,0,1,0]");
}

TEST(Cli, VerifyJsonCarriesEveryVerdictField) {
  const Result r = invoke({"verify", "all", "--ring", "Z(6)", "--format", "json", "--threads", "1"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto records = lines(r.out);
  ASSERT_EQ(records.size(), 4u * 12u + 1u);
  for (std::size_t i = 0; i + 1 < records.size(); ++i)
    for (const char* key : {"theorem", "hypotheses_hold", "clause_labels", "clause_values", "consistent", "detail",
                            "witness", "ring", "ideal", "ideal_size", "members"})
      EXPECT_TRUE(records[i].contains(key)) << key;
  const json& summary = records.back();
  EXPECT_EQ(summary["kind"], "summary");
  EXPECT_EQ(summary["inconsistencies"], 0);
  EXPECT_EQ(summary["tallies"].size(), 12u);
}

TEST(Cli, VerifyDefaultCorpus) {
  const Result r = invoke({"verify", "all", "--corpus", "default", "--format", "json", "--strict"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(lines(r.out).back()["inconsistencies"], 0);
}

TEST(Cli, VerifyOutputIndependentOfThreads) {
  const Result one = invoke({"verify", "all", "--corpus", "default", "--format", "json", "--threads", "1"});
  const Result many = invoke({"verify", "all", "--corpus", "default", "--format", "json", "--threads", "5"});
  EXPECT_EQ(one.out, many.out);
  const Result one_text = invoke({"verify", "T33,C45", "--corpus", "default", "--threads", "1"});
  const Result many_text = invoke({"verify", "T33,C45", "--corpus", "default", "--threads", "3"});
  EXPECT_EQ(one_text.out, many_text.out);
}

TEST(Cli, VerifySingleIdeal) {
  const Result r = invoke({"verify", "C43", "--ring", "M(2,Z(2))", "--ideal", "all", "--format", "json"});
  ASSERT_EQ(r.status, 0);
  const auto records = lines(r.out);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0]["theorem"], "C43");
  EXPECT_EQ(records[0]["clause_values"], json::array({false, false}));
}

TEST(Cli, Example41) {
  const Result r = invoke({"example41", "--n", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("found"), std::string::npos);
  EXPECT_NE(r.out.find("all of Zi(3)"), std::string::npos) << r.out;
  const Result j = invoke({"example41", "--range", "3..7", "--format", "json", "--strict"});
  EXPECT_EQ(j.status, 0);
  const auto records = lines(j.out);
  ASSERT_EQ(records.size(), 5u);
  EXPECT_EQ(records[1]["n"], 4);
  EXPECT_EQ(records[1]["hypotheses_hold"], false);
  EXPECT_EQ(records[2]["found"], true);
}

TEST(Cli, DescribeClassifyIdealsAxioms) {
  const Result d = invoke({"describe", "--ring", "T(2,Z(2))", "--format", "json"});
  ASSERT_EQ(d.status, 0);
  const json facts = lines(d.out).at(0);
  EXPECT_EQ(facts["size"], 8);
  EXPECT_EQ(facts["jacobson"], json::array({"[0,0,0,0]", "[0,1,0,0]"}));

  const Result c = invoke({"classify", "--ring", "M(2,Z(2))", "--elem", "[0, 1, 0, 0]", "--format", "json"});
  ASSERT_EQ(c.status, 0);
  const json e = lines(c.out).at(0);
  EXPECT_EQ(e["unit_regular_witness"], "[0,1,1,0]");
  EXPECT_EQ(e["strongly_regular"], false);

  const Result i = invoke({"ideals", "--ring", "Z(6)", "--format", "json"});
  EXPECT_EQ(lines(i.out).size(), 4u);

  const Result a = invoke({"axioms", "--corpus", "default", "--strict"});
  EXPECT_EQ(a.status, 0);
}

TEST(Cli, Search) {
  const Result r = invoke({"search", "--family", "M(2,Z(n))", "--range", "2..3", "--if", "regular", "--unless",
                           "square-stable", "--format", "json"});
  EXPECT_EQ(r.status, 0);
  const auto records = lines(r.out);
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records[0]["ring"], "M(2,Z(2))");
  EXPECT_EQ(records[0]["violated"]["witness"][0]["element"], "[0,1,0,0]");
  EXPECT_EQ(records.back()["hits"], 2);
  const Result strict = invoke({"search", "--family", "M(2,Z(n))", "--values", "2", "--if", "regular", "--unless",
                                "square-stable", "--strict"});
  EXPECT_EQ(strict.status, 1);
}

TEST(Cli, Errors) {
  EXPECT_EQ(invoke({"frobnicate"}).status, 2);
  EXPECT_EQ(invoke({}).status, 2);
  EXPECT_EQ(invoke({"check", "square-stable", "--ring", "Z(4)", "--colour", "red"}).status, 2);
  EXPECT_EQ(invoke({"check", "squarestable", "--ring", "Z(4)"}).status, 2);
  EXPECT_EQ(invoke({"verify", "T99", "--ring", "Z(4)"}).status, 2);
  EXPECT_EQ(invoke({"verify", "X41", "--ring", "Z(4)"}).status, 2);
  EXPECT_EQ(invoke({"verify", "all"}).status, 2);
  EXPECT_EQ(invoke({"verify", "all", "--ring", "Z(4)", "--corpus", "default"}).status, 2);
  EXPECT_EQ(invoke({"check", "regular", "--ring", "Z(4)", "--format", "xml"}).status, 2);
  EXPECT_EQ(invoke({"check", "regular", "--ring", "Z(4)", "--threads", "0"}).status, 2);
  EXPECT_EQ(invoke({"verify", "all", "--corpus", "/nonexistent/corpus.toml"}).status, 2);

  const Result syntax = invoke({"check", "regular", "--ring", "Zi(3"});
  EXPECT_EQ(syntax.status, 2);
  EXPECT_NE(syntax.err.find("offset 4"), std::string::npos) << syntax.err;

  const Result size = invoke({"describe", "--ring", "prod(Z(2),M(2,Z(9)))"});
  EXPECT_EQ(size.status, 2);
  EXPECT_NE(size.err.find("M(2,Z(9))"), std::string::npos) << size.err;

  const Result unknown = invoke({"check", "regular", "--ring", "Z(4)", "--ideal", "gen(9)"});
  EXPECT_EQ(unknown.status, 2);

  const Result usage = invoke({"check", "--ring", "Z(4)"});
  EXPECT_EQ(usage.status, 2);
  EXPECT_NE(usage.err.find("Usage"), std::string::npos);
}

TEST(Cli, Help) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("example41"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "--help"}).status, 0);
}

TEST(Cli, MaxSizeLiftsDimensionGuard) {
  EXPECT_EQ(invoke({"describe", "--ring", "M(3,Z(2))"}).status, 2);
  EXPECT_EQ(invoke({"describe", "--ring", "M(3,Z(2))", "--max-size", "512"}).status, 0);
  EXPECT_EQ(invoke({"describe", "--ring", "Z(10)", "--max-size", "5"}).status, 2);
}

TEST(Cli, CanonicalRoundTrip) {
  const std::vector<std::vector<std::string>> commands{
      {"check", "square-stable", "--ring", " M( 2, Z(2) ) ", "--ideal", "gen( [0,1,0,0] )"},
      {"check", "regular", "--ring", "Z(4)"},
      {"verify", "all", "--corpus", "default", "--format", "json", "--threads", "3", "--strict"},
      {"verify", "T33, C34", "--ring", "quot(T(2,Z(3)), jacobson)", "--ideal", "zero"},
      {"example41", "--range", "3..7"},
      {"example41", "--n", "3,5", "--max-size", "10000"},
      {"search", "--family", "Zi( n )", "--range", "2..4", "--if", "regular", "--unless", "reduced"},
      {"search", "--family", "M(2,Z(k))", "--param", "k", "--values", "2,3", "--if", "regular", "--unless",
       "square-stable"},
      {"describe", "--ring", "prod(Z(2),Z(3))"},
      {"classify", "--ring", "M(2,Z(2))", "--elem", "[0, 1, 0, 0]"},
      {"ideals", "--ring", "Z(12)", "--format", "json"},
      {"axioms", "--ring", "corner(M(2,Z(2)),[1,0,0,0])"}};
  for (const auto& args : commands) {
    const Command c = parse_command(args);
    const Command again = parse_command(canonical_args(c));
    EXPECT_EQ(c, again) << canonical(c);
    EXPECT_EQ(canonical(again), canonical(c));
    for (const auto& a : canonical_args(c)) EXPECT_EQ(a.find(' '), std::string::npos) << canonical(c);
  }
  EXPECT_EQ(canonical(parse_command({"check", "square-stable", "--ring", " M( 2, Z(2) ) "})),
            "check square-stable --ring M(2,Z(2)) --ideal all");
}

}  // namespace
