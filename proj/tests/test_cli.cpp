// End-to-end checks of the command-line tool: recorded outputs, exit
// codes, determinism, and certificate round trips through report files.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "cli_cases.hpp"

namespace {

std::string fixture(const std::string& name) {
  return std::string(VBALL_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(bool(in), "cannot open " << path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs the tool with the given arguments, captures stdout, and returns
// the exit code. stderr is dropped.
int run(const std::string& args, std::string* out = nullptr) {
  static int counter = 0;
  const std::string capture = "cli_capture_" + std::to_string(++counter) + ".txt";
  const std::string cmd =
      std::string(VBALL_CLI_PATH) + " " + args + " > " + capture + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  if (out) *out = slurp(capture);
  std::remove(capture.c_str());
  REQUIRE(rc != -1);
  REQUIRE(WIFEXITED(rc));
  return WEXITSTATUS(rc);
}

void matches_golden(const std::string& args, const std::string& golden,
                    int expected_exit) {
  CAPTURE(args);
  std::string out;
  const int code = run(args, &out);
  CHECK(code == expected_exit);
  CHECK(out == slurp(std::string(VBALL_GOLDEN_DIR) + "/" + golden));
}

}  // namespace

TEST_CASE("every subcommand reproduces its recorded output") {
  for (const auto& c : vball::testing::cli_cases(VBALL_FIXTURE_DIR)) {
    matches_golden(c.args, c.golden, c.exit_code);
  }
}

TEST_CASE("help requests succeed") {
  CHECK(run("--help") == 0);
  CHECK(run("membership --help") == 0);
}

TEST_CASE("invalid inputs exit with the input-error code") {
  CHECK(run("ball " + fixture("line4.json") + " --point p1 --wobble") == 2);
  CHECK(run("check-axioms no_such_file.json") == 2);
  CHECK(run("membership " + fixture("line4.json") + " " + fixture("bad_vec.json")) == 2);
  CHECK(run("frobnicate " + fixture("line4.json")) == 2);
  CHECK(run("restrict " + fixture("line4.json")) == 2);
  CHECK(run("ball " + fixture("line4.json") + " --point жp9") == 2);
}

TEST_CASE("failed verdicts exit with the failure code") {
  CHECK(run("asymorphism " + fixture("line4.json") + " " + fixture("line4.json") + " " +
            fixture("const_map.json")) == 1);
}

TEST_CASE("reports are byte-identical across repeated runs") {
  const std::vector<std::string> cmds = {
      "ideal-probe " + fixture("line4.json") + " --samples 15 --seed 11",
      "metrize " + fixture("line4.json") + " --samples 20 --seed 11",
      "split " + fixture("line4.json") + " --axis p1 --round-trips 50 --seed 11",
      "closure " + fixture("line4.json") + " --depth 2 --seed 11",
  };
  for (const std::string& cmd : cmds) {
    CAPTURE(cmd);
    std::string first;
    std::string second;
    CHECK(run(cmd, &first) == 0);
    CHECK(run(cmd, &second) == 0);
    CHECK(first == second);
    CHECK(!first.empty());
  }
}

TEST_CASE("certificates round-trip through report files") {
  const std::string line4 = fixture("line4.json");
  const std::string cert = "cli_roundtrip_cert.json";
  const std::string reduced = "cli_roundtrip_reduced.json";

  std::string summary;
  CHECK(run("membership " + line4 + " " + fixture("vec_diff.json") +
                " --n 2 --level 2 -o " + cert,
            &summary) == 0);
  CHECK(summary == "member\n");

  const nlohmann::json report = nlohmann::json::parse(slurp(cert));
  CHECK(report.at("command") == "membership");
  CHECK(report.at("member") == true);
  CHECK(report.at("certificate").at("params").at("n") == 2);

  CHECK(run("verify " + line4 + " " + cert) == 0);

  // Keeping the whole support reduces nothing and stays verifiable.
  CHECK(run("reduce " + line4 + " " + cert +
                " --target p1 --target p2 --target p3 -o " + reduced) == 0);
  const nlohmann::json red = nlohmann::json::parse(slurp(reduced));
  CHECK(red.at("command") == "reduce");
  CHECK(red.at("eliminations") == 0);
  CHECK(run("verify " + line4 + " " + reduced) == 0);

  // Dropping an interior point merges its pairs; the certificate is only
  // valid again once the achieved power is folded into the parameters.
  CHECK(run("reduce " + line4 + " " + cert + " --target p1 --target p3 -o " + reduced) ==
        0);
  nlohmann::json elim = nlohmann::json::parse(slurp(reduced));
  CHECK(elim.at("eliminations") == 1);
  CHECK(elim.at("achievedPower") == 2);
  nlohmann::json bare = elim.at("reduced");
  const std::string bare_path = "cli_roundtrip_bare.json";
  {
    std::ofstream out(bare_path);
    out << bare.dump(2);
  }
  CHECK(run("verify " + line4 + " " + bare_path) == 1);
  bare["params"]["power"] =
      bare.at("params").at("power").get<int>() * elim.at("achievedPower").get<int>();
  {
    std::ofstream out(bare_path);
    out << bare.dump(2);
  }
  CHECK(run("verify " + line4 + " " + bare_path) == 0);

  std::remove(cert.c_str());
  std::remove(reduced.c_str());
  std::remove(bare_path.c_str());
}
