#include <gtest/gtest.h>

#include <sstream>

#include "snakealg/cli.hpp"

using snakealg::json;
namespace cli = snakealg::cli;

namespace {

struct Outcome {
  int code;
  json doc;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "snakealg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out);
  return {code, json::parse(out.str(), nullptr, false)};
}

const std::string kStar = "[(0,6),(-1,4),(2,5),(1,3),(3,4)] @ n=6";
const std::string kTwo = "[(0,2),(-1,1)] @ n=3";

}  // namespace

TEST(Cli, Validate) {
  auto r = call({"validate", kStar});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(r.doc["prime"].get<bool>());
  EXPECT_EQ(r.doc["eps"], json({0, 1, 0, 1, 0}));
}

TEST(Cli, SnakeRoundTrip) {
  auto r = call({"height", kStar});
  ASSERT_EQ(r.code, cli::kOk);
  auto back = snakealg::parse_snake(r.doc["snake_of_xi"].get<std::string>());
  EXPECT_EQ(snakealg::format(back), r.doc["snake_of_xi"].get<std::string>());
  EXPECT_EQ(r.doc["N"], 6);
  EXPECT_TRUE(r.doc["checks"]["pr_bijection"].get<bool>());
}

TEST(Cli, Factor) {
  auto r = call({"factor", "--snake", kTwo, "--omega", "w{0,2}*w{-1,1}"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.doc["factors"].size(), 1u);
  EXPECT_TRUE(r.doc["weight_recovered"].get<bool>());
}

TEST(Cli, SetsExchangeIso) {
  EXPECT_EQ(call({"sets", kStar}).code, cli::kOk);
  auto ex = call({"exchange", kStar});
  EXPECT_EQ(ex.code, cli::kOk);
  EXPECT_TRUE(ex.doc["groups_match"].get<bool>());
  auto iso = call({"iso", "--source", kTwo, "--target", "[(0,3),(-2,1)] @ n=5", "--omega",
                   "w{0,2}*w{-1,1}"});
  ASSERT_EQ(iso.code, cli::kOk);
  EXPECT_EQ(iso.doc["eta"], "w{-2,1} * w{0,3}");
  EXPECT_TRUE(iso.doc["transport"].get<bool>());
}

TEST(Cli, Cluster) {
  auto r = call({"cluster", kStar});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.doc["type"], "A_6");
  EXPECT_EQ(r.doc["frozen_count"], 6);
}

TEST(Cli, Enumerate) {
  auto r = call({"enumerate", "--r-max", "2", "--span", "3", "--limit", "5", "--json"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.doc["snakes"].size(), 5u);
  EXPECT_GE(r.doc["count"].get<long>(), 5);
}

TEST(Cli, ExitCodes) {
  auto parse = call({"validate", "[(0,2),(-1,1)"});
  EXPECT_EQ(parse.code, cli::kParse);
  EXPECT_EQ(parse.doc["error"], "parse");
  EXPECT_EQ(call({"frobnicate"}).code, cli::kParse);
  EXPECT_EQ(call({"enumerate", "--filter", "shiny"}).code, cli::kParse);
  auto pre = call({"cluster", "[(0,6),(-1,4),(2,5),(1,3),(3,4)] @ n=7"});
  EXPECT_EQ(pre.code, cli::kPrecondition);
  EXPECT_EQ(pre.doc["error"], "precondition");
  EXPECT_EQ(call({"factor", "--snake", kStar, "--omega", "w{0,3}"}).code, cli::kPrecondition);
}
