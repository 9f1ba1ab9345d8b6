#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

namespace {

struct Result {
  int         code = -1;
  std::string out;
};

// Runs the command line tool with stderr folded into stdout.
Result run(std::string const& args) {
  std::string const cmd = std::string(OMEGA_CLI) + " " + args + " 2>&1";
  Result            r;
  FILE*             pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return r;
  }
  std::array<char, 4096> buf{};
  std::size_t            n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  int const status = pclose(pipe);
  r.code           = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(char const* name) {
  return (std::filesystem::path(OMEGA_DATA_DIR) / name).string();
}

TEST(Cli, ValidateAcceptsAndRejects) {
  EXPECT_EQ(run("validate " + data("s3.json")).code, 0);
  Result const broken = run("validate " + data("broken.json"));
  EXPECT_EQ(broken.code, 1);
  EXPECT_NE(broken.out.find("GroupAxiomViolation"), std::string::npos) << broken.out;
}

TEST(Cli, MissingFileIsAnInputError) {
  Result const r = run("validate " + data("missing.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("error: ", 0), 0u) << r.out;
}

TEST(Cli, UnknownOptionIsAnInputError) {
  EXPECT_EQ(run("commutator --frobnicate").code, 1);
}

TEST(Cli, CommutatorOfA3AndS3) {
  Result const r = run("commutator " + data("s3.json") + " --left A3 --right S3 --basis abelian");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("{0, 3, 4}"), std::string::npos) << r.out;
  Result const h = run("commutator " + data("s3.json") + " --left S3 --right S3 --higgins");
  EXPECT_NE(h.out.find("{0, 3, 4}"), std::string::npos) << h.out;
}

TEST(Cli, JsonReportForTheCubicRing) {
  Result const r = run("--report json commutator " + data("cubic_nil.json")
                    + " --left R --right R --basis exp2");
  ASSERT_EQ(r.code, 0) << r.out;
  auto const j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "commutator");
  EXPECT_EQ(j["result"], nlohmann::json::array({0, 1, 2, 3}));
  EXPECT_EQ(j["result_dimension"], 2);
  EXPECT_TRUE(j.contains("witnesses"));
  EXPECT_TRUE(j.contains("stats"));

  Result const c = run("--report json cvalues " + data("cubic_nil.json")
                    + " --left R --right R --basis exp2");
  ASSERT_EQ(c.code, 0) << c.out;
  EXPECT_EQ(nlohmann::json::parse(c.out)["result"], nlohmann::json::array({0, 1}));
}

TEST(Cli, TablesBackendMatches) {
  Result const r = run("--report json commutator " + data("cubic_nil.json")
                    + " --left R --right R --basis exp2 --backend tables");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(nlohmann::json::parse(r.out)["result"], nlohmann::json::array({0, 1, 2, 3}));
}

TEST(Cli, OracleAndCentrality) {
  Result const o = run("oracle " + data("s3.json") + " --left A3 --right S3 --basis abelian");
  EXPECT_EQ(o.code, 0) << o.out;
  EXPECT_NE(o.out.find("agrees with the engine: true"), std::string::npos) << o.out;
  Result const c = run("--report json central " + data("s3.json") + " --ideal A3 --basis abelian");
  ASSERT_EQ(c.code, 0) << c.out;
  EXPECT_EQ(nlohmann::json::parse(c.out)["result"], false);
}

TEST(Cli, PeifferOnTheInversionModule) {
  Result const r = run("--report json peiffer " + data("inversion.json") + " --left whole --right whole");
  ASSERT_EQ(r.code, 0) << r.out;
  auto const j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"], nlohmann::json::array({0, 2}));
}

TEST(Cli, SatisfiesAndReflect) {
  Result const s = run("--report json satisfies " + data("s3.json") + " --basis abelian");
  ASSERT_EQ(s.code, 0) << s.out;
  EXPECT_EQ(nlohmann::json::parse(s.out)["result"], false);
  auto const out = std::filesystem::temp_directory_path() / "omega_cli_test_reflect.json";
  Result const  r   = run("reflect " + data("s3.json") + " --basis abelian --output " + out.string());
  ASSERT_EQ(r.code, 0) << r.out;
  Result const v = run("--report json validate " + out.string());
  EXPECT_EQ(v.code, 0) << v.out;
  std::filesystem::remove(out);
}

TEST(Cli, MakeRingAndGroup) {
  auto const ring = std::filesystem::temp_directory_path() / "omega_cli_test_ring.json";
  Result const  r    = run("make-ring --p 5 --generators a1,a2,b --nil-squares --max-degree 3 --output "
                        + ring.string());
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(run("validate " + ring.string()).code, 0);
  std::filesystem::remove(ring);
  Result const g = run("make-group \"dihedral 4\"");
  ASSERT_EQ(g.code, 0) << g.out;
  EXPECT_EQ(nlohmann::json::parse(g.out)["size"], 8);
}

TEST(Cli, SizeGuardExitsWithTwo) {
  Result const r = run("--max-carrier 4 validate " + data("s3.json"));
  EXPECT_EQ(r.code, 2) << r.out;
  EXPECT_NE(r.out.find("SizeGuardExceeded"), std::string::npos) << r.out;
}

TEST(Cli, DemosPass) {
  for (char const* name : {"cex1", "cex2", "higgins", "peiffer"}) {
    Result const r = run(std::string("demo ") + name);
    EXPECT_EQ(r.code, 0) << name << "\n" << r.out;
  }
  Result const cex2 = run("demo cex2");
  EXPECT_NE(cex2.out.find("a^2 ∈ [R,R]_B: true; a^2 ∈ C_B(R,R): false"), std::string::npos)
      << cex2.out;
  EXPECT_EQ(run("demo nothing").code, 1);
}

}  // namespace
