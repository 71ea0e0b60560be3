#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "kacfold/io.hpp"
#include "support.hpp"

using namespace kacfold;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(KACFOLD_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(KACFOLD_DATA) + "/" + name; }

}  // namespace

TEST(Json, QuiverRoundTrip) {
  const auto fx = build_dtilde4();
  for (const auto& a : {fx.four_cycle, fx.three_cycle}) {
    const Json j = quiver_to_json(*fx.quiver, a);
    const auto back = quiver_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.quiver.vertices(), fx.quiver->vertices());
    EXPECT_EQ(back.automorphism.vertex_map, a.vertex_map);
    EXPECT_EQ(back.automorphism.arrow_map, a.arrow_map);
    EXPECT_EQ(quiver_to_json(back.quiver, back.automorphism), j);
  }
  const auto plain = quiver_from_json(quiver_to_json(*oracle::a2()));
  EXPECT_TRUE(plain.automorphism.is_identity());
}

TEST(Json, ValuedQuiverRoundTrip) {
  const ValuedQuiver vq = validate_valued_quiver({{"i", "j"}, {2, 1}, {{"i", "j", 2}}});
  const Json j = valued_quiver_to_json(vq);
  EXPECT_TRUE(is_valued_quiver_json(j));
  const ValuedQuiver back = valued_quiver_from_json(j);
  EXPECT_EQ(back.d, vq.d);
  EXPECT_EQ(back.symmetrised_matrix(), vq.symmetrised_matrix());
}

TEST(Json, RepresentationRoundTrip) {
  const auto fx = build_dtilde4();
  std::mt19937_64 rng(oracle::kSeed);
  const FiniteField f9 = make_field(3, 2);
  for (int s = 0; s < oracle::kSamples; ++s) {
    const auto d = oracle::random_vector(rng, 5, 0, 2);
    const auto x = oracle::random_representation(rng, fx.quiver, f9, d);
    EXPECT_EQ(representation_from_json(Json::parse(representation_to_json(x).dump()), fx.quiver), x);
  }
}

TEST(Json, MalformedInputsAreParseErrors) {
  const auto expect_kind = [](const Json& j, ErrorKind kind) {
    try {
      quiver_from_json(j);
      FAIL() << j.dump();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), kind) << e.what();
    }
  };
  expect_kind(Json{{"vertices", {"1"}}}, ErrorKind::ParseError);
  expect_kind(Json{{"vertices", {"1"}}, {"arrows", {{{"id", "a"}, {"from", "1"}, {"to", "9"}}}}}, ErrorKind::DanglingEndpoint);
  const auto q = oracle::a2();
  EXPECT_THROW(representation_from_json(Json{{"field", "2"}, {"dim", {1, 1}}, {"maps", Json::object()}}, q), Error);
  EXPECT_THROW(representation_from_json(Json{{"field", "6"}, {"dim", {0, 0}}}, q), Error);
  EXPECT_THROW(load_json_file(data("missing.json")), Error);
}

TEST(Cli, FoldReportsValuations) {
  const auto r = run_cli("fold " + data("dtilde4_4cycle.json") + " --json");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("edges").size(), 1u);
  const auto v = j.at("edges")[0].at("valuation").get<std::vector<int>>();
  EXPECT_EQ(std::set<int>(v.begin(), v.end()), (std::set<int>{1, 4}));
}

TEST(Cli, RootsAndClassify) {
  const auto r = run_cli("roots " + data("a3_flip.json") + " --folded --max-height 4 --json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out).size(), 4u);
  const auto c = run_cli("classify " + data("dtilde4_4cycle.json") + " --folded --vector 1,2 --json");
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(Json::parse(c.out).at("kind"), "imaginary");
}

TEST(Cli, EnumerationCommands) {
  const auto r = run_cli("indecs " + data("a2.json") + " --dim 1,1 --field 3 --json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out).at("indecomposable_count"), 1);
  const auto ii = run_cli("ii-indecs " + data("counterexample.json") + " --dim 1,1,1,1,1 --field 5 --json");
  ASSERT_EQ(ii.code, 0);
  EXPECT_EQ(Json::parse(ii.out).at("classes").size(), 1u);
  const auto s = run_cli("species-count " + data("valued_2_1.json") + " --dim 1,2 --field 2 --json");
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(Json::parse(s.out).at("count"), 1);
}

TEST(Cli, VerifyCommandsPass) {
  EXPECT_EQ(run_cli("verify kac " + data("a2.json") + " --field 3 --max-height 3").code, 0);
  EXPECT_EQ(run_cli("verify main " + data("a3_flip.json") + " --field 2 --max-height 4").code, 0);
  EXPECT_EQ(run_cli("verify species " + data("valued_2_1.json") + " --field 3 --max-height 4").code, 0);
  EXPECT_EQ(run_cli("fixtures calibrate").code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("").code, 2);
  EXPECT_EQ(run_cli("fold").code, 2);
  EXPECT_EQ(run_cli("classify " + data("a2.json") + " --vector 1,x").code, 2);
  EXPECT_EQ(run_cli("classify " + data("a2.json") + " --vector 1,0,0").code, 2);
  EXPECT_EQ(run_cli("indecs " + data("a2.json") + " --dim 1,1 --field 6").code, 2);
  EXPECT_EQ(run_cli("roots " + data("a2.json") + " --max-height 0").code, 2);
  EXPECT_EQ(run_cli("fixtures nonsense").code, 2);
}

TEST(Cli, JsonOutputIsDeterministic) {
  for (const std::string& args : std::vector<std::string>{"indecs " + data("dtilde4_4cycle.json") + " --dim 1,1,1,1,2 --field 3 --json",
                                  "ii-indecs " + data("dtilde4_4cycle.json") + " --dim 1,1,1,1,2 --field 5 --json",
                                  "skew " + data("dtilde4_4cycle.json") + " --json", "fixtures dtilde4-3cycle"}) {
    const auto a = run_cli(args), b = run_cli(args);
    ASSERT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, FixtureExportsMatchDataFiles) {
  for (const auto& [name, file] : std::vector<std::pair<std::string, std::string>>{
           {"a3-flip", "a3_flip.json"}, {"dtilde4-4cycle", "dtilde4_4cycle.json"}, {"counterexample", "counterexample.json"}}) {
    const auto r = run_cli("fixtures " + name);
    ASSERT_EQ(r.code, 0) << name;
    EXPECT_EQ(Json::parse(r.out), load_json_file(data(file))) << name;
  }
}
