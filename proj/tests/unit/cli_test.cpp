#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sstream>

#include <sys/wait.h>

#include "skeintail/cli.hpp"

namespace skein {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "skeintail");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string corpus_path(const std::string& name) { return std::string(SKEINTAIL_CORPUS_DIR) + "/" + name + ".pd"; }

TEST(Cli, AdequacyLine) {
  const Outcome r = run({"adequacy", corpus_path("trefoil-std")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "A-adequate: yes, B-adequate: yes, c^ℓ = 0");
  const Outcome k = run({"adequacy", "unknot-kink-neg"});
  EXPECT_EQ(k.out.substr(0, k.out.find('\n')), "A-adequate: no, B-adequate: yes, c^ℓ = 1");
}

TEST(Cli, JonesOfKinkIsQuantumTwo) {
  const Outcome r = run({"jones", corpus_path("unknot-kink-neg"), "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "J(q; 2) = q^-2 + 1 + q^2\nd(2) = -2\n");
}

TEST(Cli, JonesJsonRoundTrips) {
  const Outcome r = run({"jones", "trefoil-std", "--n", "3", "--json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(poly_from_json(j.at("polynomial")), colored_jones(corpus::diagram("trefoil-std"), 3).polynomial);
  EXPECT_EQ(j.at("d_n"), "-45");
  EXPECT_EQ(j.at("n"), 3);
  EXPECT_EQ(Json::parse(j.dump()), j);
}

TEST(Cli, RawFlag) {
  const Json j = Json::parse(run({"--json", "jones", "unknot-kink-neg", "--n", "1", "--raw"}).out);
  EXPECT_FALSE(j.at("writhe_factor_applied").get<bool>());
  EXPECT_EQ(poly_from_json(j.at("polynomial")), LaurentPoly::monomial(3, -1) * delta());
}

TEST(Cli, Bracket) {
  const Outcome r = run({"bracket", "unknot-0"});
  EXPECT_EQ(r.out, "<D> = -q^-1 - q\n");
  EXPECT_EQ(run({"bracket", "trefoil-r2", "--brute-limit", "3"}).code, 1);
  const Json j = Json::parse(run({"bracket", "unlink-clasp", "--json"}).out);
  EXPECT_EQ(poly_from_json(j.at("bracket")), delta() * delta());
}

TEST(Cli, JwVerify) {
  const Outcome r = run({"jw", "--n", "3", "--verify"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("idempotent: yes"), std::string::npos);
  const Json j = Json::parse(run({"jw", "--n", "2", "--verify", "--json"}).out);
  EXPECT_TRUE(j.at("verification").at("all_passed").get<bool>());
  EXPECT_EQ(j.at("terms").size(), 2u);
}

TEST(Cli, TailPasses) {
  const Outcome r = run({"tail", corpus_path("trefoil-std"), "--n-max", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("stabilization: pass"), std::string::npos);
  const Json j = Json::parse(run({"tail", "trefoil-std", "--n-max", "3", "--window", "2", "--json"}).out);
  EXPECT_TRUE(j.at("stabilization_ok").get<bool>());
  EXPECT_EQ(j.at("per_n").size(), 2u);
  EXPECT_EQ(poly_from_json(j.at("tail")), LaurentPoly::constant(1));
}

TEST(Cli, Bounds) {
  const Outcome r = run({"bounds", "unknot-kink-neg", "--n", "2..3"});
  EXPECT_EQ(r.code, 0);
  const Json j = Json::parse(run({"bounds", "unlink-clasp", "--n", "2..3", "--json"}).out);
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_EQ(j.at("per_n").size(), 2u);
  EXPECT_EQ(j.at("per_n")[0].at("gap").at("gap"), "2");
  const Json a = Json::parse(run({"bounds", "trefoil-std", "--n", "2", "--json"}).out);
  EXPECT_TRUE(a.at("per_n")[0].at("sharp").get<bool>());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"jones", "trefoil-std"}).code, 2);
  EXPECT_EQ(run({"jones", "no-such-diagram", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"jw", "--n", "99"}).code, 2);
  EXPECT_EQ(run({"bounds", "unknot-kink-neg", "--n", "x..y"}).code, 2);
  EXPECT_EQ(run({"bounds", "unknot-kink-neg", "--n", "1..2"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, EvaluationFailureIsNotUsage) {
  const Outcome r = run({"jones", "trefoil-std", "--n", "3", "--width-cap", "4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("WidthOverflow"), std::string::npos);
}

TEST(Cli, SelftestIsDeterministic) {
  const Outcome a = run({"selftest", "--json"});
  const Outcome b = run({"selftest", "--json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j.at("criteria").size(), 10u);
}

TEST(Cli, BinaryExitCodes) {
  auto status = [](const std::string& args) {
    const std::string cmd = std::string(SKEINTAIL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int s = std::system(cmd.c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("adequacy trefoil-std"), 0);
  EXPECT_EQ(status("jones trefoil-std"), 2);
  EXPECT_EQ(status("jones trefoil-std --n 2 --width-cap 2"), 1);
}

}  // namespace
}  // namespace skein
