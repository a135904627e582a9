#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "rickart/cli/run.hpp"

namespace {

using namespace rickart;
using nlohmann::json;

const std::string kData = RICKART_TEST_DATA;

std::string valid(const std::string& name) { return kData + "/valid/" + name; }

json run_json(const std::vector<std::string>& args, int expected_code) {
  const auto r = cli::run(args);
  EXPECT_EQ(r.code, expected_code) << r.out << r.err;
  return json::parse(r.out);
}

// ---- element documents ------------------------------------------------------

TEST(ElementJson, MatrixRoundTrip) {
  std::mt19937_64 rng(71);
  const io::Element x = random::matrix(3, rng);
  const io::Element back = io::parse_element(io::to_json(x));
  EXPECT_TRUE(approx_equal(std::get<matrix::MatrixElement>(back), std::get<matrix::MatrixElement>(x), Tolerance{1e-15, 1e-15}));
}

TEST(ElementJson, StepFunctionRoundTrip) {
  std::mt19937_64 rng(73);
  for (int s = 0; s < 30; ++s) {
    const io::Element f = random::fn::step_function(random::fn::Shape::General, rng);
    const io::Element back = io::parse_element(io::to_json(f));
    EXPECT_TRUE(approx_equal(std::get<stepfn::StepFunction>(back), std::get<stepfn::StepFunction>(f),
                             Tolerance{1e-12, 1e-12}));
  }
}

void expect_schema_error(const json& doc, const std::string& field) {
  try {
    io::parse_element(doc);
    ADD_FAILURE() << "no error for " << doc.dump();
  } catch (const io::SchemaError& e) {
    EXPECT_EQ(e.field(), field) << e.what();
  }
}

TEST(ElementJson, SchemaErrorsNameTheField) {
  expect_schema_error(json::parse(R"({"kind":"matrix","n":2,"entries":[[1,0],[0,0],[2,0]]})"), "entries");
  expect_schema_error(json::parse(R"({"kind":"matrix","n":1,"entries":[[1,0,2]]})"), "entries[0]");
  expect_schema_error(json::parse(R"({"kind":"matrix","entries":[]})"), "n");
  expect_schema_error(json::parse(R"({"kind":"matrix","n":17,"entries":[]})"), "n");
  expect_schema_error(json::parse(R"({"kind":"tensor"})"), "kind");
  expect_schema_error(json::parse(R"({"n":1})"), "kind");
  expect_schema_error(json::parse(R"({"kind":"stepfn","default":"one"})"), "default");
  expect_schema_error(json::parse(R"({"kind":"stepfn","default":[1,0],"exceptions":{"1.5":[1,0]}})"),
                      "exceptions.1.5");
  expect_schema_error(json::parse(R"({"kind":"stepfn","default":[1,0],"exceptions":{"0.5":[1,0],"1/2":[2,0]}})"),
                      "exceptions.1/2");
  expect_schema_error(json::parse(R"({"kind":"stepfn","default":[1,0],"tail":"2 + * n"})"), "tail");
}

TEST(ElementJson, InvalidText) {
  try {
    io::parse_text("{\"kind\": ");
    ADD_FAILURE();
  } catch (const io::SchemaError& e) {
    EXPECT_EQ(e.field(), "document");
  }
}

TEST(ElementJson, PartitionAndSequence) {
  const Partition p = io::parse_partition(json::parse(R"({"grid":[0,1.5,3],"samples":[0.75,2.25]})"));
  EXPECT_DOUBLE_EQ(p.mesh(), 1.5);
  EXPECT_THROW(io::parse_partition(json::parse(R"({"grid":[0,1],"samples":[]})")), io::SchemaError);
  const auto doc = io::parse_sequence(json::parse(R"({"kind":"sequence",
      "terms":[{"kind":"stepfn","default":[0.5,0]}], "eps":[0.5]})"));
  EXPECT_EQ(doc.terms.size(), 1u);
  EXPECT_THROW(io::parse_sequence(json::parse(R"({"kind":"sequence","terms":[]})")), io::SchemaError);
}

// ---- command line -------------------------------------------------------------

TEST(Cli, SpectralDiagonal) {
  const json out = run_json({"spectral", "--input", valid("diag12.json"), "--mesh", "0.1"}, 0);
  EXPECT_EQ(out["command"], "spectral");
  EXPECT_TRUE(out["seed"].is_null());
  EXPECT_EQ(out["results"]["family"]["breakpoints"].size(), 2u);
  EXPECT_LE(out["results"]["reconstruction"]["error"].get<double>(), 0.1 + 1e-9);
  EXPECT_FALSE(out.contains("wall_time"));
}

TEST(Cli, SpectralWithPartition) {
  const json out =
      run_json({"spectral", "--input", valid("diag12.json"), "--mesh", "1.5", "--partition", valid("partition.json")},
               0);
  EXPECT_NEAR(out["results"]["reconstruction"]["error"].get<double>(), 0.25, 1e-12);
}

TEST(Cli, SpectralUnboundedFunction) {
  const json out = run_json({"spectral", "--input", valid("stepfn_unbounded.json"), "--mesh", "0.5"}, 0);
  EXPECT_TRUE(out["results"]["reconstruction"].contains("skipped"));
}

TEST(Cli, NormMatrixAndFunction) {
  const json m = run_json({"norm", "--input", valid("diag12.json")}, 0);
  EXPECT_NEAR(m["results"]["order_norm"].get<double>(), 2.0, 1e-8);
  const json f = run_json({"norm", "--input", valid("stepfn_tail.json")}, 0);
  EXPECT_NEAR(f["results"]["order_norm"].get<double>(), 2.0, 1e-8);
  const json c = run_json({"norm", "--input", valid("nilpotent.json")}, 0);
  EXPECT_NEAR(c["results"]["cstar"]["lhs"].get<double>(), 1.0, 1e-8);
}

TEST(Cli, NormUnboundedIsPreconditionError) {
  const json out = run_json({"norm", "--input", valid("stepfn_unbounded.json")}, 2);
  EXPECT_EQ(out["error"]["kind"], "NotBounded");
}

TEST(Cli, LatticeOps) {
  const json p = run_json({"lattice", "--input", valid("swap.json"), "--op", "pos-part"}, 0);
  EXPECT_NEAR(p["results"]["result"]["entries"][0][0].get<double>(), 0.5, 1e-9);
  run_json({"lattice", "--input", valid("swap.json"), "--op", "abs"}, 0);
  run_json({"lattice", "--input", valid("swap.json"), "--with", valid("diag01.json"), "--op", "join"}, 0);
  run_json({"lattice", "--input", valid("swap.json"), "--with", valid("diag01.json"), "--op", "meet"}, 0);
  run_json({"lattice", "--input", valid("stepfn.json"), "--op", "pos-part"}, 0);
}

TEST(Cli, LatticeSup) {
  const json out =
      run_json({"lattice", "--input", valid("increasing.json"), "--with", valid("diag12.json"), "--op", "sup"}, 0);
  EXPECT_NEAR(out["results"]["result"]["entries"][0][0].get<double>(), 1.0, 1e-7);
}

TEST(Cli, LatticeUsageErrors) {
  run_json({"lattice", "--input", valid("swap.json"), "--op", "join"}, 2);
  run_json({"lattice", "--input", valid("swap.json"), "--with", valid("stepfn.json"), "--op", "join"}, 2);
  run_json({"lattice", "--input", valid("nilpotent.json"), "--op", "pos-part"}, 2);
  run_json({"lattice", "--input", valid("swap.json"), "--op", "xor"}, 2);
}

TEST(Cli, Series) {
  const json out = run_json({"series", "--input", valid("series.json")}, 0);
  EXPECT_NEAR(out["results"]["sup"]["entries"][0][0].get<double>(), 1.0, 1e-12);
  run_json({"series", "--input", valid("increasing.json")}, 2);
}

TEST(Cli, Axioms) {
  const json m = run_json({"axioms", "--model", "matrix", "--dim", "3", "--samples", "20", "--seed", "5"}, 0);
  EXPECT_EQ(m["seed"], 5);
  run_json({"axioms", "--model", "stepfn", "--samples", "50", "--seed", "5"}, 0);
  run_json({"axioms", "--model", "matrix", "--dim", "17", "--samples", "5"}, 2);
  run_json({"axioms", "--model", "matrix"}, 2);
}

TEST(Cli, ReportSingleCriterion) {
  const json out = run_json({"report", "--criterion", "9", "--seed", "7"}, 0);
  EXPECT_EQ(out["results"]["criteria"].size(), 1u);
  run_json({"report", "--seed", "7"}, 2);
}

TEST(Cli, DigestIgnoresPathAndTracksContent) {
  namespace fs = std::filesystem;
  const fs::path copy = fs::temp_directory_path() / "rickart_digest_copy.json";
  fs::copy_file(valid("diag12.json"), copy, fs::copy_options::overwrite_existing);
  const json a = run_json({"norm", "--input", valid("diag12.json")}, 0);
  const json b = run_json({"norm", "--input", copy.string()}, 0);
  const json c = run_json({"norm", "--input", valid("swap.json")}, 0);
  fs::remove(copy);
  EXPECT_EQ(a["inputs_digest"], b["inputs_digest"]);
  EXPECT_NE(a["inputs_digest"], c["inputs_digest"]);
}

TEST(Cli, ByteStableOutput) {
  const std::vector<std::string> args{"axioms", "--model", "stepfn", "--samples", "30", "--seed", "9"};
  EXPECT_EQ(cli::run(args).out, cli::run(args).out);
}

TEST(Cli, GlobalFlagsAnywhere) {
  const auto a = cli::run({"--pretty", "norm", "--input", valid("diag12.json")});
  const auto b = cli::run({"norm", "--input", valid("diag12.json"), "--pretty"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("order_norm:"), std::string::npos);
  const json t = run_json({"norm", "--input", valid("diag12.json"), "--timing"}, 0);
  EXPECT_TRUE(t.contains("wall_time"));
}

TEST(Cli, MissingFile) {
  const json out = run_json({"norm", "--input", kData + "/does_not_exist.json"}, 2);
  EXPECT_EQ(out["error"]["field"], "--input");
}

TEST(Cli, MalformedCorpus) {
  namespace fs = std::filesystem;
  std::size_t count = 0;
  for (const auto& entry : fs::directory_iterator(kData + "/malformed")) {
    ++count;
    const auto r = cli::run({"norm", "--input", entry.path().string()});
    EXPECT_EQ(r.code, 2) << entry.path();
    const json out = json::parse(r.out);
    EXPECT_EQ(out["error"]["kind"], "schema") << entry.path();
    EXPECT_FALSE(out["error"]["field"].get<std::string>().empty()) << entry.path();
  }
  EXPECT_EQ(count, 10u);
}

TEST(Cli, SeedFromEnvironment) {
  ::setenv("RICKART_SEED", "42", 1);
  const json out = run_json({"norm", "--input", valid("diag12.json")}, 0);
  ::unsetenv("RICKART_SEED");
  EXPECT_EQ(out["seed"], 42);
  EXPECT_EQ(cli::default_seed(), 7u);
}

}  // namespace
