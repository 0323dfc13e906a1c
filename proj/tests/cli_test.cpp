#include <sstream>

#include <gtest/gtest.h>

#include "horikawa/cli.hpp"

using horikawa::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = horikawa::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, EnReportJson) {
  const auto r = run({"en-report", "--n", "8", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["command"], "en-report");
  EXPECT_EQ(doc["verdict"], "pass");
  EXPECT_EQ(doc["inputs"]["n"], 8);
  for (const auto& key : {"command", "inputs", "identities", "flags", "invariants", "verdict"})
    EXPECT_TRUE(doc.contains(key)) << key;
  for (const auto& id : doc["identities"])
    for (const auto& key : {"name", "expected", "computed", "pass", "provenance"}) EXPECT_TRUE(id.contains(key));
}

TEST(Cli, JsonRoundTripsByteForByte) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"en-report", "--n", "9", "--json"},
           {"w4", "--count", "2", "--json"},
           {"blowdown", "--chi", "5", "--k2", "0", "--e", "60", "--pg", "4", "--chain", "5,2", "--chain", "5,2", "--json"},
           {"class-t", "recognize", "--chain", "3,2,3", "--json"}}) {
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out).dump(2) + "\n", r.out);
  }
}

TEST(Cli, NoFloatsInJson) {
  const auto r = run({"blowdown", "--chi", "5", "--k2", "0", "--e", "60", "--chain", "5,2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  std::function<void(const json&)> walk = [&](const json& j) {
    EXPECT_FALSE(j.is_number_float());
    if (j.is_structured())
      for (const auto& x : j) walk(x);
  };
  walk(doc);
  const auto& d = doc["invariants"]["smoothed"]["chains"][0]["discrepancies"];
  EXPECT_EQ(d[0], (json{{"num", 2}, {"den", 3}}));
  EXPECT_EQ(d[1], (json{{"num", 1}, {"den", 3}}));
}

TEST(Cli, HjExpand) {
  const auto r = run({"hj", "--m", "9", "--q", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("invariants.chain: 5,2\n"), std::string::npos) << r.out;
  const auto j = json::parse(run({"hj", "--m", "9", "--q", "2", "--json"}).out);
  EXPECT_EQ(j["invariants"]["chain"], "5,2");
  const auto back = json::parse(run({"hj", "--chain", "6,2,2", "--json"}).out);
  EXPECT_EQ(back["invariants"]["quotient"]["m"], 16);
  EXPECT_EQ(back["invariants"]["quotient"]["q"], 3);
}

TEST(Cli, InvalidInputExitsTwo) {
  EXPECT_EQ(run({"en-report", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"en-report", "--bogus"}).code, 2);
  EXPECT_EQ(run({"hj", "--m", "6", "--q", "4"}).code, 2);
  EXPECT_EQ(run({"hj", "--chain", "5,x"}).code, 2);
  EXPECT_EQ(run({"w4", "--count", "3"}).code, 2);
  EXPECT_EQ(run({"blowdown", "--chi", "4", "--k2", "0", "--e", "48", "--chain", "3"}).code, 2);
  const auto r = run({});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ExitZeroForAllN) {
  for (int n = 5; n <= 20; ++n) EXPECT_EQ(run({"en-report", "--n", std::to_string(n)}).code, 0) << n;
}

TEST(Cli, TextAndJsonAgree) {
  const auto text = run({"en-report", "--n", "7"}).out;
  const auto doc = json::parse(run({"en-report", "--n", "7", "--json"}).out);
  EXPECT_EQ(horikawa::to_text(doc), text);
  EXPECT_NE(text.find("invariants.quantities.L^2: 159\n"), std::string::npos);
  EXPECT_NE(text.find("invariants.quantities.L^2_closed_form: 177\n"), std::string::npos);
  for (const auto& id : doc["identities"])
    EXPECT_NE(text.find(id["name"].get<std::string>() + ": expected"), std::string::npos);
}

TEST(Cli, ClassTSubcommands) {
  const auto gen = json::parse(run({"class-t", "generate", "--max-length", "2", "--json"}).out);
  EXPECT_EQ(gen["invariants"]["chains"], (json{"4", "2,5", "5,2", "3,3"}));
  const auto exp = json::parse(run({"class-t", "expand", "--chain", "3,3", "--json"}).out);
  EXPECT_EQ(exp["invariants"]["left"], "2,3,4");
  EXPECT_EQ(exp["invariants"]["right"], "4,3,2");
  const auto rec = json::parse(run({"class-t", "recognize", "--chain", "3,2,3", "--json"}).out);
  EXPECT_EQ(rec["invariants"]["chain"]["t_data"], (json{{"d", 3}, {"n", 2}, {"a", 1}}));
  EXPECT_EQ(rec["invariants"]["reversed_chain"]["kind"], "class-t");
}

TEST(Cli, OtherPipelines) {
  EXPECT_EQ(run({"horikawa", "--n", "5"}).code, 0);
  EXPECT_EQ(run({"w4", "--count", "1"}).code, 0);
  EXPECT_EQ(run({"single-contraction", "--n", "6"}).code, 0);
  const auto h = json::parse(run({"horikawa", "--n", "4", "--json"}).out);
  EXPECT_EQ(h["invariants"]["direct"]["K2"], 2);
}

TEST(Cli, BlowdownAccountingErrorExitsOne) {
  // With --e inconsistent with chi and K^2 the input is rejected before smoothing.
  EXPECT_EQ(run({"blowdown", "--chi", "4", "--k2", "0", "--e", "47", "--chain", "4"}).code, 2);
}
