// Runs the installed command-line tool as a subprocess.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / ("skewinfo_cli_" + std::to_string(::getpid()));

int run(const std::string& args) {
  fs::create_directories(kWork);
  const std::string cmd = std::string("\"") + SKEWINFO_CLI_PATH + "\" " + args + " 2>" +
                          (kWork / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string write(const std::string& name, const std::string& content) {
  fs::create_directories(kWork);
  std::ofstream(kWork / name) << content;
  return (kWork / name).string();
}

std::string out(const std::string& name) { return (kWork / name).string(); }

}  // namespace

TEST_CASE("successful runs write CSV or JSON") {
  REQUIRE(run("example1 --theta-grid 0:pi:4 --out " + out("a.csv")) == 0);
  const std::string csv = slurp(out("a.csv"));
  CHECK(csv.rfind("# schema: skewinfo.example1.v1\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);

  REQUIRE(run("example2 --lambda-grid 0:1:2 --theta-grid 0:2pi:3 --format json --out " + out("b.json")) == 0);
  CHECK(slurp(out("b.json")).find("\"schema\": \"skewinfo.example2.v1\"") != std::string::npos);

  REQUIRE(run("example3 --theta-grid 0:pi:3 --paper-literal-ad-kraus --out " + out("c.csv")) == 0);
  CHECK(slurp(out("c.csv")).find(",literal\n") != std::string::npos);

  REQUIRE(run("example4 --p 0.5 --metric sld --theta-grid 0:pi:3 --out " + out("d.csv")) == 0);
  CHECK(run("--help > " + out("help.txt")) == 0);
}

TEST_CASE("identical configurations give byte-identical output") {
  REQUIRE(run("example1 --alpha 0.3 --out " + out("r1.csv")) == 0);
  REQUIRE(run("example1 --alpha 0.3 --out " + out("r2.csv")) == 0);
  CHECK(slurp(out("r1.csv")) == slurp(out("r2.csv")));
  CHECK_FALSE(slurp(out("r1.csv")).empty());
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(run("") == 2);
  CHECK(run("example7") == 2);
  CHECK(run("example1 --theta-grid 0:1:1") == 2);
  CHECK(run("example1 --metric banana") == 2);
  CHECK(run("example1 --metric wy --alpha 0.4") == 2);
  CHECK(run("example1 --alpha 1.5") == 2);
  CHECK(run("example1 --format xml") == 2);
  CHECK(run("example3 --p 2") == 2);
  CHECK(run("custom --state /nonexistent.json --observables /nonexistent.json") == 2);
  CHECK(run("custom --state " + write("malformed.json", "{\"dim\": 2,") + " --observables x") == 2);
  CHECK(slurp(kWork / "stderr.txt").find("malformed.json:1:") != std::string::npos);
}

TEST_CASE("validation errors exit with 3") {
  const auto obs = write("obs.json", R"({"observables": [
    {"dim": 2, "entries": [[0, 0], [1, 0], [1, 0], [0, 0]]},
    {"dim": 2, "entries": [[1, 0], [0, 0], [0, 0], [-1, 0]]}]})");
  const auto bad_state = write("bad_state.json", R"({"dim": 2, "entries": [[0.5, 0], [0, 0], [0, 0], [0.4, 0]]})");
  CHECK(run("custom --state " + bad_state + " --observables " + obs) == 3);
  CHECK(slurp(kWork / "stderr.txt").find("trace") != std::string::npos);

  const auto good_state = write("state.json", R"({"dim": 2, "entries": [[0.6, 0], [0, 0], [0, 0], [0.4, 0]]})");
  REQUIRE(run("custom --state " + good_state + " --observables " + obs + " --out " + out("custom.csv")) == 0);
  CHECK(slurp(out("custom.csv")).find("wyd:0.333333333333,2,") != std::string::npos);
}

TEST_CASE("self-check failure exits with 4 after writing output") {
  CHECK(run("example1 --theta-grid 0:1:3 --inject-bound-offset 1 --out " + out("bad.csv")) == 4);
  CHECK(slurp(out("bad.csv")).find("theta,alpha") != std::string::npos);
  CHECK(slurp(kWork / "stderr.txt").find("self-check failed") != std::string::npos);
  CHECK(run("example3 --theta-grid 0:1:2 --inject-bound-offset 1 --out " + out("bad3.csv")) == 4);
  fs::remove_all(kWork);
}
