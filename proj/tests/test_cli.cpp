#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "witt/cli.hpp"

namespace {
struct Result {
  int code;
  std::string out;
};
Result run(std::vector<std::string> args) {
  std::ostringstream os;
  const int code = witt::cli::run(args, os);
  return {code, os.str()};
}
nlohmann::json js(const Result& r) { return nlohmann::json::parse(r.out); }
}  // namespace

TEST(Cli, Ghost) {
  const auto r = run({"ghost", "--ring", "z", "--S", "1,2,3", "--coords", "2,0,0"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(js(r)["ghost"], nlohmann::json::parse(R"(["2","4","8"])"));
}

TEST(Cli, MulOfVerschiebungs) {
  const auto r = run({"mul", "--ring", "z", "--S", "1,2,3,6", "--a", "V2", "--b", "V3"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(js(r)["coords"], nlohmann::json::parse(R"(["0","0","0","1"])"));
}

TEST(Cli, Errors) {
  const auto r = run({"unghost", "--ring", "z", "--S", "1,2", "--ghost", "0,1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(js(r)["error"]["code"], "NotGhostIntegral");
  const auto bad = run({"ghost", "--ring", "z", "--S", "1,4", "--coords", "1,1"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(js(bad)["error"]["code"], "NotDivisorClosed");
  EXPECT_EQ(run({"nonsense"}).code, 2);
}

TEST(Cli, VerifyIsDeterministic) {
  const auto a = run({"verify", "--suite", "ghost-hom", "--max", "4", "--samples", "20"});
  const auto b = run({"verify", "--suite", "ghost-hom", "--max", "4", "--samples", "20", "--serial"});
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, PhimodTate) {
  const auto r = run({"phimod", "tate", "-b", "-1", "--Q", "1..4"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(js(r)["a"], 2);
}

TEST(Cli, VerifyAllCapsEachSuite) {
  const auto r = run({"verify", "--suite", "all", "--max", "3", "--samples", "5"});
  ASSERT_EQ(r.code, 0) << r.out;
  for (const auto& s : js(r)["suites"]) EXPECT_LE(s["max"].get<int>(), 3) << s["suite"];
}
