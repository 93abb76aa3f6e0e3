// End-to-end checks of the command-line tool: exit codes, output grammar,
// CSV determinism. The binary path comes in via PQ_CLI_PATH.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(PQ_CLI_PATH) + " " + args + " 2>/dev/null";
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli: frac prints num/den and the decimal value") {
  auto r = run_cli("frac --kind h --g 2 --n 15");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("3/5") != std::string::npos);
  CHECK(r.out.find("0.59999999999999998") != std::string::npos);

  auto f = run_cli("frac --kind f --g 2 --n 15");
  CHECK(f.out.find("3/15") != std::string::npos);
}

TEST_CASE("cli: sum emits the documented JSON object") {
  auto r = run_cli("sum --kind S --g 2 --a 1 --limit 6 --json --no-timing");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"kind\":\"S\"") != std::string::npos);
  CHECK(r.out.find("\"g\":2") != std::string::npos);
  CHECK(r.out.find("\"a\":1") != std::string::npos);
  CHECK(r.out.find("\"limit\":6") != std::string::npos);
  CHECK(r.out.find("\"re\":-1.4999999999999998") != std::string::npos);
  CHECK(r.out.find("\"im\":0.86602540378443") != std::string::npos);
  CHECK(r.out.find("\"terms\":2") != std::string::npos);
  CHECK(r.out.find("\"elapsed_s\":0") != std::string::npos);
  // Key order is fixed.
  CHECK(r.out.find("\"kind\"") < r.out.find("\"g\""));
  CHECK(r.out.find("\"re\"") < r.out.find("\"im\""));
  CHECK(r.out.find("\"im\"") < r.out.find("\"abs\""));
}

TEST_CASE("cli: usage errors exit with code 2") {
  CHECK(run_cli("--bogus-flag").exit_code == 2);
  CHECK(run_cli("sum --kind S --g 2 --limit 6").exit_code == 2);  // missing --a
  CHECK(run_cli("sum --kind X --g 2 --a 1 --limit 6").exit_code == 2);
  CHECK(run_cli("frac --kind q --g 2 --n 5").exit_code == 2);
  CHECK(run_cli("sum --kind S --g 2 --a 0 --limit 6").exit_code == 2);  // a = 0 rejected
  CHECK(run_cli("verify --suite no-such-suite").exit_code == 2);
}

TEST_CASE("cli: resource errors exit with code 3") {
  CHECK(run_cli("sieve --load definitely_missing.bin").exit_code == 3);
}

TEST_CASE("cli: csv reports are byte-identical across runs") {
  auto r1 = run_cli("sum --kind S --g 2 --a 1 --limit 1000 --no-timing --csv cli_sum_a.csv");
  auto r2 = run_cli("sum --kind S --g 2 --a 1 --limit 1000 --no-timing --csv cli_sum_b.csv");
  REQUIRE(r1.exit_code == 0);
  REQUIRE(r2.exit_code == 0);
  std::string a = slurp("cli_sum_a.csv"), b = slurp("cli_sum_b.csv");
  CHECK(!a.empty());
  CHECK(a == b);
  CHECK(a.rfind("kind,g,a,limit,re,im,abs,terms,elapsed_s\n", 0) == 0);
  CHECK(a.find('\r') == std::string::npos);  // LF endings only

  // Round-trip: the re field parses back to the same double the engine got.
  std::string row = a.substr(a.find('\n') + 1);
  std::istringstream fields(row);
  std::string kind, g, aa, limit, re;
  std::getline(fields, kind, ',');
  std::getline(fields, g, ',');
  std::getline(fields, aa, ',');
  std::getline(fields, limit, ',');
  std::getline(fields, re, ',');
  double re_parsed = std::strtod(re.c_str(), nullptr);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", re_parsed);
  CHECK(re == buf);
  std::remove("cli_sum_a.csv");
  std::remove("cli_sum_b.csv");
}

TEST_CASE("cli: discrepancy emits report and histogram CSVs") {
  auto r = run_cli(
      "discrepancy --kind h --g 2 --limit 1000 --et-H 10 --bins 4 "
      "--csv cli_disc.csv --hist-csv cli_hist.csv");
  REQUIRE(r.exit_code == 0);
  std::string disc = slurp("cli_disc.csv");
  CHECK(disc.rfind("N,d_star,et_bound,et_H\n", 0) == 0);
  CHECK(disc.find("831,") != std::string::npos);
  std::string hist = slurp("cli_hist.csv");
  CHECK(hist.rfind("bin_lo,bin_hi,count\n", 0) == 0);
  // 4 bins -> header + 4 rows.
  int lines = 0;
  for (char c : hist)
    if (c == '\n') ++lines;
  CHECK(lines == 5);
  std::remove("cli_disc.csv");
  std::remove("cli_hist.csv");

  // Without --et-H the bound column is left empty.
  auto plain = run_cli("discrepancy --kind h --g 2 --limit 1000 --csv cli_disc2.csv");
  REQUIRE(plain.exit_code == 0);
  std::string disc2 = slurp("cli_disc2.csv");
  CHECK(disc2.find(",,") != std::string::npos);
  std::remove("cli_disc2.csv");
}

TEST_CASE("cli: census subcommands") {
  auto car = run_cli("census carmichael --limit 1000");
  CHECK(car.exit_code == 0);
  CHECK(car.out.find("561") != std::string::npos);

  auto psp = run_cli("census psp --limit 600 --g 2 --csv cli_psp.csv");
  CHECK(psp.exit_code == 0);
  CHECK(slurp("cli_psp.csv") == "n\n341\n561\n");
  std::remove("cli_psp.csv");

  auto smooth = run_cli("census smooth --x 10 --y 2");
  CHECK(smooth.out.find("= 4") != std::string::npos);

  auto tset = run_cli("census tset --limit 10000 --g 2");
  CHECK(tset.out.find("#T = 1718") != std::string::npos);
}

TEST_CASE("cli: sieve save/load round trip and manifest") {
  auto build = run_cli("--manifest cli_manifest.json sieve --limit 2000 --save cli_sieve.bin");
  REQUIRE(build.exit_code == 0);
  auto load = run_cli("sieve --load cli_sieve.bin");
  CHECK(load.exit_code == 0);
  CHECK(load.out.find("limit=2000") != std::string::npos);

  std::string manifest = slurp("cli_manifest.json");
  CHECK(manifest.find("\"subcommand\": \"sieve\"") != std::string::npos);
  CHECK(manifest.find("\"artifact_version\": \"0.1.0\"") != std::string::npos);
  CHECK(manifest.find("cli_sieve.bin") != std::string::npos);
  CHECK(manifest.find("\"fnv1a64\"") != std::string::npos);
  std::remove("cli_sieve.bin");
  std::remove("cli_manifest.json");
}

TEST_CASE("cli: sieve cache directory is honored") {
  // Populate the cache, then run a sum that auto-loads it; the result must
  // be byte-identical to a cacheless run.
  auto build = run_cli("sieve --limit 3000 --save lpfsieve_3000.bin");
  REQUIRE(build.exit_code == 0);
  std::string env = "PSEUDOQUOT_SIEVE_DIR=. ";
  std::string cmd = "sum --kind S --g 2 --a 1 --limit 3000 --json --no-timing";
  std::FILE* pipe = popen((env + PQ_CLI_PATH + " " + cmd).c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string cached;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) cached.append(buf.data(), got);
  pclose(pipe);
  auto plain = run_cli(cmd);
  CHECK(cached == plain.out);
  CHECK(!cached.empty());
  std::remove("lpfsieve_3000.bin");
}

TEST_CASE("cli: verify lists suites") {
  auto r = run_cli("verify --list");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("gamma-oracle") != std::string::npos);
  CHECK(r.out.find("performance") != std::string::npos);
  CHECK(r.out.find("all") != std::string::npos);
}

TEST_CASE("cli: one fast verify suite end to end") {
  auto r = run_cli("verify --suite carmichael-census");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[PASS] 03 carmichael-census") != std::string::npos);
}
