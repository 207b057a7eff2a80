#include <jumploci_cli/cli.hpp>

#include <jumploci/exact/json_io.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using jl::Json;

namespace {

struct CliResult {
  int code = 0;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = jl::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("jumploci_test_" + name);
  std::ofstream(p) << content;
  return p;
}

const std::vector<std::vector<std::string>> kCommands = {
    {"detvar", "generic", "--a", "2", "--b", "3", "--k", "1", "--all"},
    {"detvar", "generic", "--a", "3", "--b", "3", "--k", "1", "--all", "--c", "2", "--jets", "2", "--hodge", "1"},
    {"detvar", "hankel", "--a", "2", "--b", "4", "--k", "1"},
    {"detvar", "oracle", "--family", "generic", "--a", "2", "--b", "2", "--k", "1"},
    {"bn", "report", "--g", "6", "--n", "1", "--d", "4", "--k", "1", "--rankF", "1", "--degF", "0", "--l", "2"},
    {"bn", "hyperelliptic", "--g", "5", "--d", "4", "--r", "1"},
    {"bn", "hyperelliptic-report", "--g", "6", "--d", "4", "--k", "2"},
    {"linf", "trees", "--n", "5"},
    {"linf", "sample", "--kind", "admissible", "--seed", "3"},
    {"linf", "formality", "--input", ""},  // filled in below
};

}  // namespace

TEST(Cli, GenericReport) {
  CliResult r = run({"detvar", "generic", "--a", "2", "--b", "3", "--k", "1", "--all"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = r.json();
  EXPECT_EQ(j["schema"], "jumploci/1");
  EXPECT_EQ(j["fields"]["multiplicity"]["value"], 3);
  EXPECT_EQ(j["fields"]["lct"]["value"]["value"], "2");
}

TEST(Cli, HyperellipticPetriMatrix) {
  CliResult r = run({"bn", "hyperelliptic", "--g", "5", "--d", "4", "--r", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["matrix"], Json::parse(R"([["x1","x2"],["x2","x3"]])"));
}

TEST(Cli, CheckOfAValidPairHasNoResiduals) {
  CliResult s = run({"linf", "sample", "--kind", "dgl-pair", "--seed", "5"});
  ASSERT_EQ(s.code, 0) << s.err;
  auto path = temp_file("pair.json", s.out);
  CliResult r = run({"linf", "check", "--input", path.string(), "--arity", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.json()["residuals"].empty());
  EXPECT_EQ(r.json()["passed"], true);
}

TEST(Cli, CheckReportsResidualsWithExitOne) {
  // [e0, e1] = e2, [e0, e2] = e2, [e1, e2] = e0 violates Jacobi: the Jacobiator is e0.
  auto path = temp_file("bad.json", R"({"schema":"jumploci/1","kind":"linf_algebra","arity_cap":3,"exact":true,
    "verified":false,"space":{"degrees":[0],"dims":[3]},"ops":[{"arity":2,"degree":0,"entries":[
    {"tuple":[0,1],"value":["0","0","1"]},{"tuple":[0,2],"value":["0","0","1"]},
    {"tuple":[1,2],"value":["1","0","0"]}]}]})");
  CliResult r = run({"linf", "check", "--input", path.string(), "--arity", "3"});
  EXPECT_EQ(r.code, 1) << r.err;
  EXPECT_FALSE(r.json()["residuals"].empty());
  EXPECT_EQ(r.json()["passed"], false);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"detvar", "generic", "--a", "x"}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"linf", "check", "--input", "/nonexistent/file.json"}).code, 2);
  auto garbage = temp_file("garbage.json", "{not json");
  EXPECT_EQ(run({"linf", "check", "--input", garbage.string()}).code, 2);
  EXPECT_EQ(run({"detvar", "generic", "--a", "2", "--b", "2", "--k", "1", "--invariant", "bogus"}).code, 2);
  CliResult hyp = run({"detvar", "generic", "--a", "3", "--b", "2", "--k", "1"});
  EXPECT_EQ(hyp.code, 3);
  EXPECT_FALSE(hyp.err.empty());
  EXPECT_EQ(run({"bn", "report", "--g", "4", "--d", "3", "--k", "3", "--l", "2"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, CheckSuitesPass) {
  for (const char* group : {"linf", "defjump", "detvar", "oracle", "bn"}) {
    CliResult r = run({group, "--check"});
    EXPECT_EQ(r.code, 0) << group << "\n" << r.out << r.err;
    EXPECT_EQ(r.json()["passed"], true) << group;
  }
}

TEST(Cli, DeterministicAndRoundTrip) {
  CliResult sample = run({"linf", "sample", "--kind", "admissible", "--seed", "3"});
  ASSERT_EQ(sample.code, 0);
  auto pair = temp_file("admissible.json", sample.out);
  auto commands = kCommands;
  commands.back().back() = pair.string();
  for (const auto& cmd : commands) {
    CliResult a = run(cmd), b = run(cmd);
    ASSERT_EQ(a.code, 0) << cmd[0] << " " << cmd[1] << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << cmd[0] << " " << cmd[1];
    EXPECT_EQ(a.json().dump(2) + "\n", a.out) << cmd[0] << " " << cmd[1];
  }
}

TEST(Cli, TableFormatAndOutputFile) {
  CliResult t = run({"--format", "table", "detvar", "generic", "--a", "2", "--b", "2", "--k", "1"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_NE(t.out.find("multiplicity"), std::string::npos);
  EXPECT_NE(t.out.find("provenance"), std::string::npos);
  auto path = std::filesystem::temp_directory_path() / "jumploci_test_out.json";
  std::filesystem::remove(path);
  CliResult o = run({"-o", path.string(), "bn", "rho", "--g", "4", "--d", "3", "--k", "2"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  Json j = Json::parse(in);
  EXPECT_EQ(j["schema"], "jumploci/1");
}
