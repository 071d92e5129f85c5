#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef PLUCKER_CLI_PATH
#error "PLUCKER_CLI_PATH must point at the built command-line binary"
#endif

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct CliResult {
  int exitCode = -1;
  std::string out;
};

fs::path scratchDir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "plucker_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path writeFile(const std::string& name, const std::string& content) {
  const fs::path p = scratchDir() / name;
  std::ofstream(p) << content;
  return p;
}

CliResult runCli(const std::string& args) {
  const fs::path outFile = scratchDir() / "stdout.txt";
  const std::string cmd = std::string(PLUCKER_CLI_PATH) + " " + args + " > " +
                          outFile.string() + " 2> /dev/null";
  const int raw = std::system(cmd.c_str());
  CliResult r;
  r.exitCode = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ostringstream ss;
  ss << std::ifstream(outFile).rdbuf();
  r.out = ss.str();
  return r;
}

const char* kQuinticDoc = R"({
  "ambientDim": 3,
  "coords": [["1"], ["0","0","1"], ["0","0","0","1"], ["0","0","0","0","0","1"]]
})";

}  // namespace

TEST_CASE("analyze reports the quintic's invariants") {
  const fs::path doc = writeFile("quintic.json", kQuinticDoc);
  const CliResult r = runCli("analyze " + doc.string());
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("degree: 5") != std::string::npos);
  CHECK(r.out.find("R_1 = (0) + (inf)") != std::string::npos);
  CHECK(r.out.find("all identities hold") != std::string::npos);

  const CliResult j = runCli("analyze --json " + doc.string());
  CHECK(j.exitCode == 0);
  const Json parsed = Json::parse(j.out);
  CHECK(parsed["report"]["degree"] == 5);
  CHECK(parsed["report"]["passed"] == true);
  CHECK(parsed["curve"]["ambientDim"] == 3);
}

TEST_CASE("analyze accepts multiple documents and places") {
  const fs::path doc = writeFile("quintic.json", kQuinticDoc);
  const CliResult r = runCli("analyze " + doc.string() + " " + doc.string() +
                             " --place 0 --place inf --place 1");
  CHECK(r.exitCode == 0);
  // two independent reports, each with the requested vanishing sequences
  std::size_t count = 0, from = 0;
  while ((from = r.out.find("degree: 5", from)) != std::string::npos) {
    ++count;
    from += 1;
  }
  CHECK(count == 2);
  CHECK(r.out.find("at 0: vanishing sequence 0 2 3 5") != std::string::npos);
  CHECK(r.out.find("at inf: vanishing sequence 0 2 3 5") !=
        std::string::npos);
  CHECK(r.out.find("at 1: vanishing sequence 0 1 2 3") != std::string::npos);
}

TEST_CASE("contact answers negatively with exit 0") {
  const fs::path doc = writeFile(
      "noncontact.json",
      R"({"ambientDim":3,"coords":[["1"],["0","1"],["0","0","1"],["0","0","0","0","1"]]})");
  const CliResult r = runCli("contact " + doc.string());
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("contact: no") != std::string::npos);

  const CliResult j = runCli("contact --json " + doc.string());
  CHECK(j.exitCode == 0);
  CHECK(Json::parse(j.out)["isContact"] == false);
}

TEST_CASE("contact recovers the quintic's form") {
  const fs::path doc = writeFile("quintic.json", kQuinticDoc);
  const CliResult r = runCli("contact " + doc.string());
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("beta = x0^x3 - 5*x1^x2") != std::string::npos);

  // testing a supplied form
  const CliResult yes =
      runCli("contact " + doc.string() + " --beta 0,0,1,-5,0,0");
  CHECK(yes.exitCode == 0);
  CHECK(yes.out.find(": yes") != std::string::npos);
  const CliResult no =
      runCli("contact " + doc.string() + " --beta 0,0,1,-4,0,0");
  CHECK(no.exitCode == 0);
  CHECK(no.out.find(": no") != std::string::npos);
}

TEST_CASE("klein emits a document that klein-inv inverts") {
  const fs::path doc = writeFile("quintic.json", kQuinticDoc);
  const CliResult fwd = runCli("klein --json " + doc.string());
  REQUIRE(fwd.exitCode == 0);
  const Json image = Json::parse(fwd.out);
  CHECK(image["ambientDim"] == 4);
  CHECK(image["model"] == "W");
  CHECK(image["beta"].size() == 6);

  const fs::path imageFile = writeFile("image.json", fwd.out);
  const CliResult inv = runCli("klein-inv --json " + imageFile.string());
  REQUIRE(inv.exitCode == 0);
  const Json recovered = Json::parse(inv.out);
  CHECK(recovered["ambientDim"] == 3);
  CHECK(recovered["coords"] == Json::parse(kQuinticDoc)["coords"]);
}

TEST_CASE("null-complete runs the gamma pipeline") {
  const fs::path doc = writeFile(
      "gamma.json",
      R"({"gamma":[{"num":["1"],"den":["0","1"]},{"num":["i"],"den":["0","1"]},{"num":["0"]}]})");
  const CliResult r = runCli("null-complete " + doc.string());
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("degree: 1") != std::string::npos);
  CHECK(r.out.find("standardQuadric") != std::string::npos);

  // non-null input is an input error
  const fs::path bad = writeFile(
      "gamma_bad.json",
      R"({"gamma":[{"num":["0","1"]},{"num":["0","0","1"]},{"num":["0"]}]})");
  CHECK(runCli("null-complete " + bad.string()).exitCode == 2);
}

TEST_CASE("verify prints symbolic values and aggregates") {
  const CliResult r = runCli("verify deg7-unbranched");
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("8640*p^4*q") != std::string::npos);  // the cleared minor

  const CliResult all = runCli("verify all --json");
  CHECK(all.exitCode == 0);
  const Json parsed = Json::parse(all.out);
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == 5);
  for (const auto& rep : parsed) CHECK(rep["passed"] == true);

  CHECK(runCli("verify no-such-verifier").exitCode == 2);
}

TEST_CASE("profiles lists the admissible pairs") {
  const CliResult r = runCli("profiles 6");
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("(r1 = 0, r2 = 2, deg f = 4)") != std::string::npos);
  CHECK(r.out.find("(r1 = 2, r2 = 0, deg f = 5)") != std::string::npos);
  CHECK(runCli("profiles 1").exitCode == 2);
}

TEST_CASE("malformed input exits 2 with the offending field named") {
  const fs::path bad = writeFile(
      "bad.json",
      R"({"ambientDim":3,"coords":[["1"],["zzz"],["0"],["0"]]})");
  CHECK(runCli("analyze " + bad.string()).exitCode == 2);

  const fs::path truncated = writeFile("trunc.json", "{\"ambientDim\": 3");
  CHECK(runCli("analyze " + truncated.string()).exitCode == 2);

  CHECK(runCli("analyze /no/such/file.json").exitCode == 2);
  CHECK(runCli("frobnicate").exitCode == 2);

  // wrong coordinate count for the stated dimension
  const fs::path mismatch = writeFile(
      "mismatch.json", R"({"ambientDim":3,"coords":[["1"],["0","1"]]})");
  CHECK(runCli("analyze " + mismatch.string()).exitCode == 2);
}

TEST_CASE("klein of a non-contact curve is an input error") {
  const fs::path doc = writeFile(
      "noncontact.json",
      R"({"ambientDim":3,"coords":[["1"],["0","1"],["0","0","1"],["0","0","0","0","1"]]})");
  CHECK(runCli("klein " + doc.string()).exitCode == 2);
}
