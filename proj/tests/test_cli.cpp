#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

// Exit code of the CLI under the given arguments, output discarded.
int run_cli(const std::string& args) {
  const std::string cmd =
      std::string("\"") + LINREL_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("help and argument errors") {
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("verify --help") == 0);
  CHECK(run_cli("definitely-not-a-command") == 2);
  CHECK(run_cli("verify --suite thm9.9 --trials 2") == 2);
  CHECK(run_cli("verify --trials 0 --suite arens") == 2);
  CHECK(run_cli("verify --dims bogus --suite arens --trials 2") == 2);
  CHECK(run_cli("verify --field imaginary --suite arens --trials 2") == 2);
}

TEST_CASE("verify runs clean suites") {
  CHECK(run_cli("verify --suite thm2.3 --trials 3 --dims 3x3") == 0);
  const auto report = temp_file("linrel_cli_report.json");
  CHECK(run_cli("verify --suite arens --trials 3 --dims 2x2 --out \"" +
                report.string() + "\"") == 0);
  CHECK(std::filesystem::exists(report));
  std::filesystem::remove(report);
}

TEST_CASE("gen and check round trip") {
  const auto rel = temp_file("linrel_cli_rel.json");
  CHECK(run_cli("gen --n 3 --m 3 --dim-domain 3 --dim-mulpart 0 --seed 11 "
                "--out \"" + rel.string() + "\"") == 0);
  CHECK(std::filesystem::exists(rel));
  CHECK(run_cli("check \"" + rel.string() + "\"") == 0);
  CHECK(run_cli("check \"" + rel.string() + "\" --x [1,0,0]") == 0);
  std::filesystem::remove(rel);

  CHECK(run_cli("gen --n 2 --m 2 --dim-graph 5") == 2);
  CHECK(run_cli("gen --n 2 --m 3 --hermitian") == 2);
  CHECK(run_cli("check /no/such/file.json") == 2);
}

TEST_CASE("check rejects vectors outside the domain") {
  const auto rel = temp_file("linrel_cli_domain.json");
  {
    std::ofstream out(rel);
    out << R"({"field": "complex", "n": 2, "m": 2,
               "generators": [{"x": [1, 0], "y": [0, 1]},
                              {"x": [0, 0], "y": [1, 0]}]})";
  }
  CHECK(run_cli("check \"" + rel.string() + "\" --x [1,0]") == 0);
  CHECK(run_cli("check \"" + rel.string() + "\" --x [0,1]") == 2);
  CHECK(run_cli("check \"" + rel.string() + "\" --x [1,0,0]") == 2);
  std::filesystem::remove(rel);
}

TEST_CASE("demo exits by table health") {
  CHECK(run_cli("demo-remark24 --orders 4,8") == 0);
  CHECK(run_cli("demo-remark24 --orders 1") == 2);
}
