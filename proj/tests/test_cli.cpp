#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "flagvec/flagvec.hpp"

using flagvec::io::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + FLAGVEC_CLI_PATH + std::string(" ") + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("flagvec_cli_" + name)).string();
}

}  // namespace

TEST(Generate, CyclicCsv) {
  CliResult r = run("generate cyclic -d 5 -n 8 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "f0,f1,f2,f3,f4\n8,28,52,50,20\n");
}

TEST(Generate, P7n) {
  CliResult r = run("generate p7n -n 8");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "f0,f1,f2,f3,f4,f5,f6\n15,56,112,140,112,56,15\n");
}

TEST(Generate, SimplexJson) {
  CliResult r = run("generate simplex -d 6 --format json --no-meta");
  EXPECT_EQ(r.code, 0);
  json doc = json::parse(r.out);
  EXPECT_FALSE(doc.contains("meta"));
  EXPECT_EQ(doc["f"].dump(), R"(["7","21","35","35","21","7"])");
}

TEST(Generate, MetaAndDeterminism) {
  CliResult a = run("generate cube -d 4 --format json --seed 5");
  CliResult b = run("generate cube -d 4 --format json --seed 5");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["meta"]["seed"], 5);
}

TEST(Generate, InvalidParams) {
  EXPECT_EQ(run("generate cyclic -d 5 -n 5").code, 2);
  EXPECT_EQ(run("generate cyclic -d 5").code, 2);
  EXPECT_EQ(run("generate hypercube -d 3").code, 2);
  EXPECT_EQ(run("generate simplex -d 3 --format xml").code, 2);
}

TEST(Generate, FaceBoundFromEnvironment) {
  EXPECT_EQ(run("generate cube -d 5", "FLAGVEC_MAX_FACES=100").code, 2);
  EXPECT_EQ(run("generate cube -d 5").code, 0);
}

TEST(Generate, LatticeCache) {
  const std::string path = temp_path("lattice.json");
  CliResult saved = run("generate cyclic -d 4 -n 7 --save-lattice " + path);
  ASSERT_EQ(saved.code, 0);
  CliResult loaded = run("generate --lattice-file " + path + " cyclic");
  EXPECT_EQ(loaded.out, saved.out);
  std::filesystem::remove(path);
}

TEST(Check, CyclicFiveEight) {
  CliResult r = run("check 8,28,52,50,20 --no-meta");
  EXPECT_EQ(r.code, 0);
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["properties"]["C"]["holds"], false);
  EXPECT_EQ(doc["properties"]["C"]["witness"], 1);
  EXPECT_EQ(doc["properties"]["L"]["holds"], true);
  EXPECT_EQ(doc["properties"]["U"]["holds"], true);
  EXPECT_EQ(doc["properties"]["B"]["holds"], true);
}

TEST(Check, Csv) {
  CliResult r = run("check 8,28,52,50,20 --format csv");
  EXPECT_EQ(r.out, "f,euler,C,L,U,B\n\"8,28,52,50,20\",true,false(k=1),true,true,true\n");
}

TEST(Check, CandidateVectorIsReportedLiterally) {
  CliResult r = run("check 22,111,110,35,21,7 --no-meta");
  EXPECT_EQ(r.code, 0);
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["properties"]["U"]["holds"], true);
  EXPECT_EQ(doc["properties"]["L"]["holds"], false);
}

TEST(Check, ExitCodeIgnoresVerdicts) { EXPECT_EQ(run("check 10,20,8,30,10").code, 0); }

TEST(Check, ValidationErrors) {
  EXPECT_EQ(run("check 1,1").code, 2);
  EXPECT_EQ(run("check 8,x,52").code, 2);
  EXPECT_EQ(run("check 4,6,4 -d 4").code, 2);
  EXPECT_EQ(run("check 4,0,4").code, 2);
}

TEST(Check, FromFile) {
  const std::string path = temp_path("f.json");
  std::ofstream(path) << R"({"f": ["8", "28", "52", "50", "20"]})";
  CliResult r = run("check " + path + " --no-meta");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["f"][4], "20");
  std::filesystem::remove(path);
}

TEST(Flags, SimplexThree) {
  CliResult r = run("flags simplex -d 3 --no-meta");
  EXPECT_EQ(r.code, 0);
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["flags"]["012"], "24");
  EXPECT_EQ(doc["gds"], true);
}

TEST(Flags, CompletesSparseData) {
  const std::string path = temp_path("sparse.json");
  std::ofstream(path) << flagvec::io::to_json(flagvec::candidate_7d(), 7).dump();
  CliResult r = run("flags --sparse " + path + " --no-meta");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["f"][6], "134");
  CliResult csv = run("flags --sparse " + path + " --sparse-only --format csv");
  EXPECT_NE(csv.out.find("135,127260\n"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Flags, IncompleteSparseData) {
  const std::string path = temp_path("bad_sparse.json");
  std::ofstream(path) << R"({"d": 3, "entries": {"0": 4}})";
  EXPECT_EQ(run("flags --sparse " + path).code, 2);
  std::filesystem::remove(path);
}

TEST(CdIndex, Text) {
  EXPECT_EQ(run("cdindex polygon -n 5").out, "c^2 + 3d\n");
  EXPECT_EQ(run("cdindex simplex -d 3").out, "c^3 + 2dc + 2cd\n");
  EXPECT_EQ(run("cdindex cyclic -d 6 -n 10 --coeff c2dc2").out, "83\n");
}

TEST(CdIndex, Json) {
  json doc = json::parse(run("cdindex simplex -d 3 --format json --no-meta").out);
  EXPECT_EQ(doc["cd"], "c^3 + 2dc + 2cd");
}

TEST(CdIndex, NotEulerianExitsOne) {
  flagvec::FlagVector v = flagvec::flag_vector(flagvec::build_simplex(3));
  v.set(flagvec::RankSet{1}, 7);
  const std::string path = temp_path("broken.json");
  std::ofstream(path) << flagvec::io::to_json(v).dump();
  EXPECT_EQ(run("cdindex --input " + path).code, 1);
  std::filesystem::remove(path);
}

TEST(CdIndex, BadWord) { EXPECT_EQ(run("cdindex simplex -d 3 --coeff c2").code, 2); }

TEST(Convolve, IndexShiftExample) {
  json doc = json::parse(run("convolve g0:1 g1:2 --no-meta").out);
  EXPECT_EQ(doc["form"], "-3f_1 + f_12");
  EXPECT_EQ(doc["d"], 4);
}

TEST(Convolve, KalaiSummandOnCyclic) {
  json doc = json::parse(run("convolve g1:2 g1:2 --reduce --family cyclic -d 5 -n 8 --no-meta").out);
  EXPECT_EQ(doc["form"], "9f_2 - 6f_3 - 3f_02 + 3f_03 - f_13");
  EXPECT_EQ(doc["value"], doc["value_face_sum"]);
}

TEST(Convolve, Errors) {
  EXPECT_EQ(run("convolve g2:1 g0:0").code, 2);
  EXPECT_EQ(run("convolve g0:1 g0:1 --family cube -d 4").code, 2);
}

TEST(Candidates, SixDimensionalCsv) {
  CliResult r = run("candidates 6d --ell 0..1 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0,6,\"22,111,110,35,21,7\",1,1,1,0,"), std::string::npos);
}

TEST(Candidates, SevenDimensionalJson) {
  json doc = json::parse(run("candidates 7d --no-meta").out);
  EXPECT_EQ(doc["candidates"][0]["f"][6], "134");
  EXPECT_EQ(doc["candidates"][0]["properties"]["B"]["holds"], false);
}

TEST(Scan, LogConvexity) {
  CliResult r = run("scan logconv7 --n 8..20");
  EXPECT_EQ(r.code, 0);
  std::size_t lines = std::count(r.out.begin(), r.out.end(), '\n');
  EXPECT_EQ(lines, 14u);
  EXPECT_EQ(r.out.rfind("n,r1,r2,r3,", 0), 0u);
  EXPECT_NE(r.out.find("\n8,28/15,"), std::string::npos);
}

TEST(Scan, ConvexityTurnsNegative) {
  CliResult r = run("scan convexity5 --n 6..12");
  EXPECT_NE(r.out.find("\n7,7,21,34,30,12,1/2,0.5\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n8,8,28,52,50,20,-2,-2\n"), std::string::npos);
}

TEST(Scan, Errors) {
  EXPECT_EQ(run("scan logconv7 --n 5..7").code, 2);
  EXPECT_EQ(run("scan logconv7 --n 8-9").code, 2);
  EXPECT_EQ(run("scan other --n 8..9").code, 2);
}

TEST(Usage, MissingSubcommand) { EXPECT_EQ(run("").code, 2); }

TEST(VerifyPaper, ExitCodeMatchesReport) {
  CliResult r = run("verify-paper --samples 20 --no-meta");
  const bool any_fail = r.out.find("FAIL ") != std::string::npos;
  EXPECT_EQ(r.code, any_fail ? 1 : 0);
  for (const char* name : {"kalai-form-reduction", "candidate-7d-f6", "cyclic5-nonconvex", "oracle-cd-index",
                           "p7n-r3-at-8", "connected-sum-tetra"})
    EXPECT_NE(r.out.find(std::string("PASS ") + name + " "), std::string::npos) << name;
  EXPECT_EQ(r.out.find("# flagvec"), std::string::npos);
}

TEST(VerifyPaper, JsonIsDeterministic) {
  CliResult a = run("verify-paper --samples 20 --format json");
  CliResult b = run("verify-paper --samples 20 --format json");
  EXPECT_EQ(a.out, b.out);
  json doc = json::parse(a.out);
  EXPECT_EQ(doc["table"].size(), 20u);
  for (const json& c : doc["checks"]) EXPECT_FALSE(c["operation"].get<std::string>().empty());
}
