#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "singcoh/io.hpp"

namespace {

using singcoh::io::Json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

std::string fixture(const std::string& name) { return std::string(SINGCOH_FIXTURES) + "/" + name; }

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = singcoh::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

std::vector<GoldenCase> golden_cases() {
  return {
      {"detect_sym4_mod2", {"detect", "--kind", "sym", "--m", "4", "--ell", "3", "--coeff", "mod2", "--space", "milnor"}},
      {"detect_sym4_char0", {"detect", "--kind", "sym", "--m", "4", "--ell", "3", "--coeff", "char0", "--space", "milnor"}},
      {"detect_general5_ell4", {"detect", "--kind", "general", "--m", "5", "--ell", "4"}},
      {"cohomology_general3_milnor", {"cohomology", "--kind", "general", "--m", "3", "--space", "milnor"}},
      {"detect_sym4_complement", {"detect", "--kind", "sym", "--m", "4", "--ell", "3", "--space", "complement"}},
      {"detect_sym4_link", {"detect", "--kind", "sym", "--m", "4", "--ell", "3", "--space", "link", "--n", "9"}},
      {"cohomology_sym4_link", {"cohomology", "--kind", "sym", "--m", "4", "--space", "link"}},
      {"detect_general5_link", {"detect", "--kind", "general", "--m", "5", "--ell", "4", "--space", "link", "--n", "21"}},
      {"detect_rect54_link", {"detect", "--kind", "rect", "--m", "5", "--p", "4", "--ell", "2", "--space", "link", "--n", "12"}},
      {"gysin_sym5_rank2", {"gysin", "--kind", "sym", "--m", "5", "--rank", "2"}},
      {"kite_sym4_ell3", {"kite", "--kind", "sym", "--m", "4", "--ell", "3"}},
      {"certify_general5", {"certify", "--input", fixture("general5_germ.json"), "--ell", "4", "--zero", "y1,y2,y3,y4"}},
      {"certify_symmetric4", {"certify", "--input", fixture("symmetric4_germ.json"), "--ell", "3", "--zero", "y1,y2", "--witness", fixture("symmetric4_witness.json")}},
      {"factorize_id4", {"factorize", "--input", fixture("id4.json")}},
      {"factorize_pseudo_rotation", {"factorize", "--input", fixture("pseudo_rotation3.json")}},
      {"schubert_cells_4_2", {"schubert", "--m", "4", "--p", "2"}},
      {"normal_form_general", {"normal-form", "--input", fixture("nf_general_diag.json")}},
      {"normal_form_skew", {"normal-form", "--input", fixture("nf_skew_e12.json")}},
      {"normal_form_sym", {"normal-form", "--input", fixture("nf_sym_diag.json")}},
      {"pretty_cohomology_general3", {"cohomology", "--kind", "general", "--m", "3", "--pretty"}},
  };
}

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesStoredOutput) {
  const auto& c = GetParam();
  const auto result = invoke(c.args);
  ASSERT_EQ(result.code, 0) << result.err;
  const std::string path = std::string(SINGCOH_GOLDEN) + "/" + c.name + ".out";
  if (std::getenv("SINGCOH_UPDATE_GOLDEN")) {
    std::ofstream(path) << result.out;
    GTEST_SKIP() << "golden rewritten";
  }
  ASSERT_TRUE(std::filesystem::exists(path)) << "missing golden " << path;
  EXPECT_EQ(result.out, read_file(path));
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(golden_cases()),
                         [](const auto& info) { return info.param.name; });

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
  for (const auto& c : golden_cases()) {
    const auto a = invoke(c.args), b = invoke(c.args);
    EXPECT_EQ(a.out, b.out) << c.name;
  }
}

TEST(Cli, KnownValues) {
  auto json = [](const std::vector<std::string>& args) { return Json::parse(invoke(args).out); };
  const auto mod2 = json({"detect", "--kind", "sym", "--m", "4", "--ell", "3", "--coeff", "mod2", "--space", "milnor"});
  EXPECT_EQ(mod2["schema"], "singcoh/1");
  for (const char* d : {"2", "3", "5"}) EXPECT_EQ(mod2["betti"][d], 1);
  const auto coh = json({"cohomology", "--kind", "general", "--m", "3", "--space", "milnor"});
  ASSERT_EQ(coh["generators"].size(), 2u);
  EXPECT_EQ(coh["generators"][0]["name"], "e3");
  EXPECT_EQ(coh["generators"][1]["name"], "e5");
  EXPECT_TRUE(json({"factorize", "--input", fixture("id4.json")})["factors"].empty());
  const auto gy = json({"gysin", "--kind", "sym", "--m", "5", "--ell", "3"});
  EXPECT_EQ(gy["q"], 18);
  EXPECT_EQ(gy["map"][0]["local_degree"], 9);
  EXPECT_EQ(gy["map"][0]["global_degree"], 27);
}

TEST(Cli, UsageErrorsExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"detect", "--kind", "sym", "--m", "4"},
           {"detect", "--kind", "sym", "--m", "four", "--ell", "3"},
           {"cohomology", "--kind", "general", "--m", "3", "--bogus"}}) {
    const auto r = invoke(args);
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    const auto e = Json::parse(r.err);
    EXPECT_EQ(e["schema"], "singcoh/1");
    EXPECT_EQ(e["error"]["code"], "usage");
    EXPECT_FALSE(e["error"]["message"].get<std::string>().empty());
  }
}

TEST(Cli, DomainErrorsExitOne) {
  struct Case {
    std::vector<std::string> args;
    std::string code;
  };
  for (const auto& c : std::vector<Case>{
           {{"detect", "--kind", "sym", "--m", "4", "--ell", "4"}, "unsupported"},
           {{"detect", "--kind", "sym", "--m", "4", "--ell", "3", "--coeff", "Z"}, "unsupported"},
           {{"cohomology", "--kind", "wobbly", "--m", "3"}, "invalid_argument"},
           {{"factorize", "--input", fixture("non_unitary.json")}, "invalid_argument"},
           {{"factorize", "--input", fixture("does_not_exist.json")}, "invalid_argument"},
           {{"normal-form", "--input", fixture("malformed.json")}, "parse_error"},
           {{"gysin", "--kind", "general", "--m", "3", "--rank", "2"}, "invalid_argument"},
           {{"gysin", "--kind", "general", "--m", "3"}, "invalid_argument"}}) {
    const auto r = invoke(c.args);
    EXPECT_EQ(r.code, 1) << c.args[0];
    const auto e = Json::parse(r.err);
    EXPECT_EQ(e["error"]["code"], c.code) << r.err;
  }
}

TEST(Cli, ParseErrorsCarryPosition) {
  const auto r = invoke({"normal-form", "--input", fixture("malformed.json")});
  const auto e = Json::parse(r.err);
  EXPECT_TRUE(e["error"].contains("position"));
}

TEST(Cli, ComplexSymmetricNormalForm) {
  const auto r = invoke({"normal-form", "--input", fixture("nf_sym_complex.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["arithmetic"], "floating");
  EXPECT_TRUE(j["verified"].get<bool>());
}

TEST(Cli, SchubertIndexOfMatrix) {
  const auto r = invoke({"schubert", "--input", fixture("pseudo_rotation3.json"), "--p", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["cell"]["indices"], Json::array({3}));
  EXPECT_EQ(j["cell"]["dimension"], 5);
}

TEST(Cli, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("normal-form"), std::string::npos);
}

}  // namespace
