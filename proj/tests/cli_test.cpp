#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "upair/dim1.hpp"
#include "upair/dim2.hpp"
#include "upair/formal_sum.hpp"
#include "upair/monomial.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = upair::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("upair_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const json& content) {
    auto path = (dir_ / name).string();
    std::ofstream(path) << content.dump(2);
    return path;
  }
  std::string write_text(const std::string& name, const std::string& content) {
    auto path = (dir_ / name).string();
    std::ofstream(path) << content;
    return path;
  }

  fs::path dir_;
};

json matching_difference() {
  using namespace upair::dim1;
  upair::FormalSum<Bounded1Manifold> x{{{Boundary0::standard(2), {0, 1}}, upair::Scalar(1)},
                                       {{Boundary0::standard(2), {1, 0}}, upair::Scalar(-1)}};
  return x;
}

json mazur_difference() {
  return json::parse(R"([{"basis":"M","coeff":{"re":"1/1","im":"0/1"}},
                         {"basis":"M'","coeff":{"re":"-1/1","im":"0/1"}}])");
}

}  // namespace

TEST_F(CliTest, PairDim1MatchingDifference) {
  auto x = write("x.json", matching_difference());
  auto r = run({"pair", "--theory", "dim1", "--x", x, "--y", x});
  ASSERT_EQ(r.code, 0) << r.err;
  auto pairing = json::parse(r.out).at("pairing");
  EXPECT_EQ(pairing.dump(),
            R"([{"basis":{"circles":1,"dim":1},"coeff":{"im":"0/1","re":"-2/1"}},)"
            R"({"basis":{"circles":2,"dim":1},"coeff":{"im":"0/1","re":"2/1"}}])");
}

TEST_F(CliTest, PairFourdimIsEmpty) {
  auto x = write("x.json", mazur_difference());
  auto r = run({"pair", "--theory", "fourdim", "--x", x, "--y", x});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("pairing"), json::array());
}

TEST_F(CliTest, PairWithMismatchedBoundariesFails) {
  auto x = write("x.json", matching_difference());
  using namespace upair::dim1;
  json y = upair::FormalSum<Bounded1Manifold>::single({Boundary0::standard(3), {0, 1, 2}});
  auto yp = write("y.json", y);
  auto r = run({"pair", "--theory", "dim1", "--x", x, "--y", yp});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("incompatible boundaries"), std::string::npos);
}

TEST_F(CliTest, MalformedInputReportsLineAndTerm) {
  auto bad = write_text("bad.json", "[\n  {\"basis\": 1,\n");
  auto r = run({"pair", "--theory", "dim1", "--x", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line"), std::string::npos) << r.err;

  json x = matching_difference();
  x[1]["coeff"]["re"] = "1/0";
  auto p = write("x.json", x);
  r = run({"certify", "--theory", "dim1", "--x", p});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("term 1"), std::string::npos) << r.err;
}

TEST_F(CliTest, VerifyLemmaExitCodes) {
  EXPECT_EQ(run({"verify-lemma", "--theory", "dim1", "--j", "3"}).code, 0);
  EXPECT_EQ(run({"verify-lemma", "--theory", "dim2", "--j", "2", "--gmax", "2"}).code, 0);
  auto r = run({"verify-lemma", "--theory", "fourdim"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.out).at("lemma").at("status"), "violation");
  EXPECT_EQ(run({"verify-lemma", "--theory", "monomial", "--alphabet", "a,b,c", "--swaps", "a:b", "--degree", "4"}).code,
            0);
  EXPECT_EQ(run({"verify-lemma", "--theory", "monomial"}).code, 1);
  EXPECT_EQ(run({"verify-lemma", "--theory", "dim9"}).code, 1);
}

TEST_F(CliTest, VerifyLemmaWithSeededSamples) {
  auto r = run({"verify-lemma", "--theory", "dim2", "--j", "2", "--gmax", "1", "--closed-budget", "2", "--samples",
                "50", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.out;
  auto samples = json::parse(r.out).at("samples");
  EXPECT_EQ(samples.at("certified"), 50);
  EXPECT_EQ(samples.at("seed"), 7);
}

TEST_F(CliTest, CertifyDim2AnnulusMinusTwoDisks) {
  using upair::dim2::Bounded2Manifold;
  upair::FormalSum<Bounded2Manifold> x{{Bounded2Manifold(2, {{{0, 1}, 0}}), upair::Scalar(1)},
                                       {Bounded2Manifold(2, {{{0}, 0}, {{1}, 0}}), upair::Scalar(-1)}};
  auto r = run({"certify", "--theory", "dim2", "--x", write("x.json", x)});
  ASSERT_EQ(r.code, 0) << r.err;
  auto cert = json::parse(r.out).at("certificate");
  EXPECT_EQ(cert.at("status"), "certified");
  // two spheres (2, -4, -2, -2) outrank the torus (1, 0, 0)
  EXPECT_EQ(cert.at("max_complexity"), json::parse("[2,-4,-2,-2]"));
  EXPECT_EQ(cert.at("forms")[0].at("closed"), json::parse(R"({"dim":2,"genera":[0,0]})"));
}

TEST_F(CliTest, CertifyFourdimFails) {
  auto r = run({"certify", "--theory", "fourdim", "--x", write("x.json", mazur_difference())});
  EXPECT_EQ(r.code, 2);
  auto v = json::parse(r.out).at("certificate").at("violation");
  EXPECT_EQ(v.at("first"), "M");
  EXPECT_EQ(v.at("second"), "M'");
}

TEST_F(CliTest, CertifyGrannyMinusSquare) {
  json x = json::parse(R"([{"basis":{"exponents":{"T":2}},"coeff":{"re":"1/1","im":"0/1"}},
                           {"basis":{"exponents":{"T":1,"Tbar":1}},"coeff":{"re":"-1/1","im":"0/1"}}])");
  auto r = run({"certify", "--theory", "monomial", "--alphabet", "T,Tbar", "--swaps", "T:Tbar", "--x",
                write("x.json", x)});
  ASSERT_EQ(r.code, 0) << r.err;
  auto form = json::parse(r.out).at("certificate").at("forms")[0];
  EXPECT_EQ(form.at("closed"), json::parse(R"({"exponents":{"T":2,"Tbar":2}})"));
  EXPECT_EQ(form.at("mass"), json::parse(R"({"re":"2/1","im":"0/1"})"));
}

TEST_F(CliTest, CertifyZeroVectorIsAnInputError) {
  EXPECT_EQ(run({"certify", "--theory", "dim1", "--x", write("x.json", json::array())}).code, 1);
}

TEST_F(CliTest, NullSearchOutcomes) {
  auto r = run({"null-search", "--theory", "fourdim", "--coeff-grid", "pm1"});
  ASSERT_EQ(r.code, 0);
  auto result = json::parse(r.out).at("result");
  EXPECT_EQ(result.at("vector"), mazur_difference());

  for (auto args : {std::vector<std::string>{"null-search", "--theory", "dim1", "--j", "2"},
                    std::vector<std::string>{"null-search", "--theory", "dim2", "--j", "1", "--gmax", "1"}}) {
    r = run(args);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out).at("result").at("status"), "none on grid");
    EXPECT_EQ(json::parse(r.out).at("grid"), "pm1: {0, 1, -1}");
  }
  EXPECT_EQ(run({"null-search", "--theory", "dim1", "--coeff-grid", "gaussian"}).code, 1);
}

TEST_F(CliTest, FourdimDemo) {
  auto r = run({"fourdim-demo", "--scob", "2"});
  ASSERT_EQ(r.code, 0);
  auto demo = json::parse(r.out).at("demo");
  EXPECT_EQ(demo.at("pairing"), json::array());
  EXPECT_EQ(demo.at("vector"), mazur_difference());

  json table = json::parse(R"({"labels":["A","B"],"table":{"A,A":"X","A,B":"Z","B,A":"Z","B,B":"Y"},
                                "reverse":{"X":"X","Y":"Y","Z":"Z"}})");
  r = run({"fourdim-demo", "--table", write("t.json", table)});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(json::parse(r.out).contains("diagnostic"));

  table["table"].erase("B,B");
  EXPECT_EQ(run({"fourdim-demo", "--table", write("t2.json", table)}).code, 1);
}

TEST_F(CliTest, EnumerateAndOutFile) {
  auto out = (dir_ / "basis.json").string();
  auto r = run({"enumerate", "--theory", "dim1", "--j", "3", "--max-closed", "1", "--out", out});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  auto basis = json::parse(in).at("basis");
  EXPECT_EQ(basis.size(), 12u);
  for (const auto& b : basis) EXPECT_NO_THROW(b.get<upair::dim1::Bounded1Manifold>());
}

TEST_F(CliTest, OutputsReparseAndRepeatByteIdentically) {
  auto x = write("x.json", matching_difference());
  std::vector<std::vector<std::string>> commands{
      {"pair", "--theory", "dim1", "--x", x},
      {"verify-lemma", "--theory", "dim1", "--j", "3", "--max-closed", "1", "--samples", "20", "--seed", "5"},
      {"certify", "--theory", "dim1", "--x", x},
      {"null-search", "--theory", "dim2", "--j", "1", "--gmax", "1", "--coeff-grid", "gauss2"},
      {"gram", "--theory", "dim1", "--j", "2"},
      {"fourdim-demo"},
      {"enumerate", "--theory", "monomial", "--alphabet", "a,b", "--swaps", "a:b", "--degree", "3"}};
  for (const auto& cmd : commands) {
    auto first = run(cmd);
    auto with_jobs = cmd;
    with_jobs.insert(with_jobs.end(), {"--jobs", "3"});
    auto second = run(with_jobs);
    EXPECT_EQ(first.code, second.code);
    EXPECT_EQ(first.out, second.out) << cmd[0];
    EXPECT_EQ(json::parse(first.out).dump(2) + "\n", first.out);
  }
  auto certificate = json::parse(run(commands[2]).out);
  auto vector = upair::formal_sum_from_json<upair::dim1::Bounded1Manifold>(certificate.at("vector"));
  EXPECT_EQ(json(vector), certificate.at("vector"));
}

TEST_F(CliTest, HelpAndUsageErrors) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"pair", "--bogus"}).code, 1);
  EXPECT_EQ(run({"pair", "--theory", "dim1"}).code, 1);
}
