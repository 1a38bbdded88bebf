#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const char* bin = std::getenv("CATLAB_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  CliResult res;
  res.out = out;
  if (WIFEXITED(status)) res.code = WEXITSTATUS(status);
  return res;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

int count_substr(const std::string& text, const std::string& pat) {
  int count = 0;
  std::size_t pos = 0;
  while ((pos = text.find(pat, pos)) != std::string::npos) {
    ++count;
    pos += pat.size();
  }
  return count;
}

}  // namespace

TEST_CASE("verify identities: clean run, record stream, summary") {
  CliResult res =
      run_cli("verify --suite identities --l-max 2 --m-max 8 --n-max 2 "
              "--d-max 4");
  CHECK(res.code == 0);
  auto lines = lines_of(res.out);
  REQUIRE(lines.size() >= 2);
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    CHECK(lines[i].rfind("{\"check\":\"", 0) == 0);
    CHECK(lines[i].find("\"pass\":true}") != std::string::npos);
  }
  std::string expected_summary =
      "{\"total\":" + std::to_string(lines.size() - 1) + ",\"failed\":0}";
  CHECK(lines.back() == expected_summary);
}

TEST_CASE("verify is byte-identical across job counts") {
  const std::string base =
      "verify --suite congruences --p-max 40 --d-max 5 --r-max 3";
  CliResult one = run_cli(base + " --jobs 1");
  CliResult eight = run_cli(base + " --jobs 8");
  CHECK(one.code == 0);
  CHECK(eight.code == 0);
  CHECK(one.out == eight.out);
  REQUIRE(!one.out.empty());
}

TEST_CASE("corrupt hook surfaces exactly the tampered records") {
  CliResult res =
      run_cli("verify --suite identities --l-max 2 --m-max 8 --n-max 2 "
              "--d-max 4 --corrupt eq1.0:7");
  CHECK(res.code == 1);
  // eq1.0 has 3 * 9 = 27 records; every 7th corrupted -> 3 failures
  CHECK(res.out.find("\"failed\":3}") != std::string::npos);
  // 3 failing records inline + 3 re-emitted in the footer
  CHECK(count_substr(res.out, "\"pass\":false") == 6);
  auto lines = lines_of(res.out);
  REQUIRE(lines.size() >= 4);
  CHECK(lines[lines.size() - 2].find("\"check\":\"eq1.0\"") !=
        std::string::npos);
  CHECK(lines[lines.size() - 2].find("\"pass\":false") != std::string::npos);
}

TEST_CASE("csv format: header, rows, footer") {
  CliResult res = run_cli(
      "verify --suite harmonic --d-max 3 --p-max 30 --format csv");
  CHECK(res.code == 0);
  auto lines = lines_of(res.out);
  REQUIRE(lines.size() >= 3);
  CHECK(lines.front() == "check,params,lhs,rhs,pass");
  CHECK(lines.back().rfind("# total=", 0) == 0);
  CHECK(lines.back().find("failed=0") != std::string::npos);
  CHECK(lines[1].rfind("harm.trunc,d=0 p=5,", 0) == 0);
  CliResult bad = run_cli(
      "verify --suite harmonic --d-max 3 --p-max 30 --format csv "
      "--corrupt harm.trunc:5");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("# FAIL harm.trunc,") != std::string::npos);
}

TEST_CASE("fg command prints the class constants record") {
  CliResult res = run_cli("fg 0 2");
  CHECK(res.code == 0);
  CHECK(res.out == "{\"d\":0,\"r\":2,\"F\":\"-2/3\",\"G\":\"-1/3\"}\n");
  CliResult res2 = run_cli("fg 1 1");
  CHECK(res2.out == "{\"d\":1,\"r\":1,\"F\":\"-2\",\"G\":\"2\"}\n");
  CHECK(run_cli("fg -1 0").code == 2);
  CHECK(run_cli("fg 0").code == 2);
}

TEST_CASE("oracle command prints the direct residue") {
  CliResult a = run_cli("oracle 5 0 2");
  CHECK(a.code == 0);
  CHECK(a.out == "3\n");
  CliResult b = run_cli("oracle 7 0 2");
  CHECK(b.code == 0);
  CHECK(b.out == "4\n");
  CHECK(run_cli("oracle 4 0 0").code == 2);
  CHECK(run_cli("oracle 5 0").code == 2);
  CHECK(run_cli("oracle 5 -1 0").code == 2);
}

TEST_CASE("table command emits sorted CSV tables") {
  CliResult fg = run_cli("table fg --d-max 1 --r-max 1");
  CHECK(fg.code == 0);
  auto fg_lines = lines_of(fg.out);
  REQUIRE(fg_lines.size() == 5);
  CHECK(fg_lines[0] == "d,r,F,G");
  CHECK(fg_lines[1] == "0,0,0,-3");
  CHECK(fg_lines[2].rfind("0,1,", 0) == 0);
  CHECK(fg_lines[3].rfind("1,0,", 0) == 0);
  CHECK(fg_lines[4] == "1,1,-2,2");

  CliResult harm = run_cli("table harmonic --d-max 3");
  CHECK(harm.code == 0);
  auto harm_lines = lines_of(harm.out);
  REQUIRE(harm_lines.size() == 5);
  CHECK(harm_lines[0] == "d,A,B");
  CHECK(harm_lines[1] == "0,3/2,-3/2");
  CHECK(harm_lines[4] == "3,-47/24,69/8");

  CliResult empty = run_cli("table fg --d-max -1");
  CHECK(empty.code == 0);
  CHECK(empty.out == "d,r,F,G\n");

  CHECK(run_cli("table bogus").code == 2);
}

TEST_CASE("usage and configuration errors exit 2") {
  CHECK(run_cli("verify --suite bogus").code == 2);
  CHECK(run_cli("verify --suite identities --classes 5").code == 2);
  CHECK(run_cli("verify --suite identities --format xml").code == 2);
  CHECK(run_cli("verify --suite identities --jobs 0").code == 2);
  CHECK(run_cli("verify").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("--bogus-flag").code == 2);
  CHECK(run_cli("verify --suite fg --classes 3").code == 2);
  CHECK(run_cli("verify --suite identities --corrupt eq1.0").code == 2);
}

TEST_CASE("series-check matches verify --suite series") {
  CliResult direct = run_cli("series-check --l-max 2 --n-max 4");
  CliResult via_verify = run_cli("verify --suite series --l-max 2 --n-max 4");
  CHECK(direct.code == 0);
  CHECK(via_verify.code == 0);
  CHECK(direct.out == via_verify.out);
}

TEST_CASE("--out writes the report to a file") {
  std::string path = "/tmp/catlab_cli_out_" + std::to_string(getpid()) +
                     ".json";
  const std::string base = "verify --suite fg --d-max 2 --r-max 2 --p-max 40";
  CliResult to_file = run_cli(base + " --out " + path);
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream content;
  content << in.rdbuf();
  CliResult direct = run_cli(base);
  CHECK(content.str() == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("classes flag widens or narrows the prime sweep") {
  CliResult with3 = run_cli(
      "verify --suite congruences --p-max 10 --d-max 2 --r-max 1 "
      "--classes 1,2,3");
  CHECK(with3.code == 0);
  CHECK(with3.out.find("\"p\":3,") != std::string::npos);
  CliResult without3 = run_cli(
      "verify --suite congruences --p-max 10 --d-max 2 --r-max 1");
  CHECK(without3.code == 0);
  CHECK(without3.out.find("\"p\":3,") == std::string::npos);
  CliResult only1 = run_cli(
      "verify --suite harmonic --d-max 1 --p-max 30 --classes 1");
  CHECK(only1.code == 0);
  CHECK(only1.out.find("\"p\":7}") != std::string::npos);
  CHECK(only1.out.find("\"p\":5}") == std::string::npos);
}

TEST_CASE("oracle suite runs clean") {
  CliResult res = run_cli(
      "verify --suite oracle --l-max 3 --m-max 15 --n-max 3 --d-max 5 "
      "--p-max 20");
  CHECK(res.code == 0);
  CHECK(res.out.find("\"check\":\"lucas.grid\"") != std::string::npos);
  CHECK(res.out.find("\"failed\":0}") != std::string::npos);
}
