#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pancake_cli/cli.hpp"

namespace cli = pancake::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture_head(const std::string& name, int lines) {
  std::ifstream in(std::string(PANCAKE_FIXTURE_DIR) + "/" + name);
  std::string text, line;
  for (int i = 0; i < lines && std::getline(in, line); ++i) text += line + "\n";
  return text;
}

}  // namespace

TEST_CASE("table rows") {
  CHECK(run({"table", "--graph", "plain", "--n", "4"}).out == "n,k0,k1,k2,k3,k4\n4,1,3,6,11,3\n");
  CHECK(run({"table", "--graph", "burnt", "--n", "2"}).out == "n,k0,k1,k2,k3,k4\n2,1,2,2,2,1\n");
  CHECK(run({"table", "--graph", "plain", "--n", "1"}).out == "n,k0\n1,1\n");
  // Rows are zero-padded to a common width.
  CHECK(run({"table", "--graph", "plain", "--n", "2..3"}).out == "n,k0,k1,k2,k3\n2,1,1,0,0\n3,1,2,2,1\n");
}

TEST_CASE("table output is byte-identical to the transcribed fixtures") {
  CHECK(run({"table", "--graph", "plain", "--n", "1..9", "--width", "12"}).out == fixture_head("table1.csv", 10));
  CHECK(run({"table", "--graph", "burnt", "--n", "1..5", "--width", "12"}).out == fixture_head("table2.csv", 6));
}

TEST_CASE("table json and files") {
  const auto j = nlohmann::json::parse(run({"table", "--graph", "burnt", "--n", "1..2", "--format", "json"}).out);
  CHECK(j["format_version"] == 1);
  CHECK(j["rows"].size() == 2);

  const fs::path path = fs::temp_directory_path() / "pancake_cli_table.csv";
  CHECK(run({"table", "--graph", "plain", "--n", "3", "--output", path.string()}).code == 0);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first == "n,k0,k1,k2,k3");

  CHECK(run({"table", "--graph", "plain", "--n", "3", "--output", "/nonexistent-dir/x.csv"}).code == cli::kIoError);
}

TEST_CASE("memory limits are checked up front") {
  const Run r = run({"table", "--graph", "plain", "--n", "3..12", "--memory-limit", "1M"});
  CHECK(r.code == cli::kUsage);
  CHECK(r.out.empty());
  CHECK(r.err.find("P_10") != std::string::npos);

  ::setenv("PANCAKE_MEM_LIMIT", "10", 1);
  CHECK(run({"table", "--graph", "plain", "--n", "5"}).code == cli::kUsage);
  CHECK(run({"table", "--graph", "plain", "--n", "5", "--memory-limit", "1K"}).code == cli::kOk);
  ::setenv("PANCAKE_MEM_LIMIT", "lots", 1);
  CHECK(run({"table", "--graph", "plain", "--n", "5"}).code == cli::kUsage);
  ::unsetenv("PANCAKE_MEM_LIMIT");
}

TEST_CASE("checkpoint and resume through the tool") {
  const fs::path path = fs::temp_directory_path() / "pancake_cli_p6.ckpt";
  fs::remove(path);
  CHECK(run({"table", "--graph", "plain", "--n", "6", "--checkpoint", path.string()}).code == 0);
  const Run again = run({"table", "--resume", path.string()});
  CHECK(again.code == 0);
  CHECK(again.out == run({"table", "--graph", "plain", "--n", "6"}).out);

  {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(30);
    f.put('\x7f');
  }
  CHECK(run({"table", "--resume", path.string()}).code == cli::kIoError);
  CHECK(run({"table", "--resume", "/nonexistent/ckpt"}).code == cli::kIoError);
}

TEST_CASE("distance and sort") {
  CHECK(run({"distance", "--graph", "plain", "2", "1", "3", "4"}).out == "1\n");
  CHECK(run({"distance", "[2 1]"}).out == "3\n");
  CHECK(run({"distance", "--", "-1", "-2"}).out == "4\n");

  const Run sorted = run({"sort", "--graph", "burnt", "[1 2 3]"});
  CHECK(sorted.code == 0);
  CHECK(sorted.out.rfind("distance 0\nflips\n", 0) == 0);

  const Run hard = run({"sort", "--graph", "burnt", "[-1 -2]"});
  CHECK(hard.out == "distance 4\nflips 1 2 1 2\n   [-1 -2]\nr1  [1 -2]\nr2  [2 -1]\nr1  [-2 -1]\nr2  [1 2]\n");

  const Run bad = run({"distance", "1", "x", "3"});
  CHECK(bad.code == cli::kUsage);
  CHECK(bad.err.find("'x'") != std::string::npos);
  CHECK(run({"distance", "--graph", "plain", "[-1 2]"}).code == cli::kUsage);
  CHECK(run({"distance", "1", "1"}).code == cli::kUsage);
}

TEST_CASE("cycles") {
  const Run bp3 = run({"cycles", "--graph", "burnt", "--n", "3", "--length", "8"});
  CHECK(bp3.code == 0);
  CHECK(bp3.out.find("cycles through identity 6") != std::string::npos);
  CHECK(bp3.out.find("classification confirmed") != std::string::npos);

  CHECK(run({"cycles", "--graph", "plain", "--n", "5", "--length", "9"}).code == 0);

  const Run bp2 = run({"cycles", "--graph", "burnt", "--n", "2", "--length", "9", "--format", "json"});
  CHECK(bp2.code == 0);
  CHECK(nlohmann::json::parse(bp2.out)["total_cycles_through_identity"] == 0);

  CHECK(run({"cycles", "--graph", "plain", "--n", "5", "--length", "11"}).code == cli::kUsage);
  CHECK(run({"cycles", "--graph", "plain", "--n", "9", "--length", "12", "--node-budget", "100"}).code ==
        cli::kUsage);
}

TEST_CASE("formulas") {
  const Run r4b = run({"formulas", "check", "--which", "r4-burnt", "--n", "1..8"});
  CHECK(r4b.code == 0);
  CHECK(r4b.out.find("verified (8 compared, 0 mismatched)") != std::string::npos);

  const Run cor = run({"formulas", "check", "--which", "recurrence", "--k", "4", "--n", "10"});
  CHECK(cor.code == 0);
  CHECK(cor.out.find("recurrence k=4 n=10: holds") != std::string::npos);

  CHECK(run({"formulas", "check", "--which", "expansion"}).code == 0);
  CHECK(run({"formulas", "check", "--which", "cor62", "--k", "4", "--n", "10"}).out == cor.out);
  CHECK(run({"formulas", "check", "--which", "r5-burnt", "--format", "json"}).code == 0);
  CHECK(run({"formulas", "check", "--which", "r4-plain", "--n", "4..8", "--source", "bfs"}).code == 0);

  // The published-elsewhere eighth-layer polynomial is off at n = 8, 9: a result, not a crash.
  CHECK(run({"formulas", "check", "--which", "r8-plain"}).code == cli::kConjectureMismatch);
  CHECK(run({"formulas", "check", "--which", "all"}).code == cli::kConjectureMismatch);

  CHECK(run({"formulas", "check", "--which", "r99"}).code == cli::kUsage);
  CHECK(run({"formulas", "check", "--which", "recurrence", "--k", "8"}).code == cli::kUsage);
}

TEST_CASE("fit reproduces the fifth burnt conjecture") {
  const Run fit = run({"formulas", "fit", "--graph", "burnt", "--k", "5", "--n", "1..7"});
  CHECK(fit.code == 0);
  CHECK(fit.out.find("degree 5") != std::string::npos);
  CHECK(fit.out.find("coefficients 0 0 6 106 220 120\n") != std::string::npos);
  CHECK(fit.out.find("agrees with R5_burnt_conj") != std::string::npos);

  CHECK(run({"formulas", "fit", "--graph", "burnt", "--k", "5", "--n", "1..3"}).code == cli::kUsage);
  CHECK(run({"formulas", "fit", "--graph", "plain", "--k", "9", "--n", "14..16"}).code == cli::kUsage);
}

TEST_CASE("eval and list") {
  CHECK(run({"formulas", "eval", "--which", "r7-plain", "--n", "6..8"}).out ==
        "6 2 (tabulated exception)\n7 1016 (tabulated exception)\n8 15011\n");
  CHECK(run({"formulas", "eval", "--which", "r4-plain", "--n", "3"}).out == "3 -\n");
  CHECK(run({"formulas", "list"}).out.find("R9_burnt_conj k=9 burnt conjectured") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"table", "--graph", "toast", "--n", "3"}).code == cli::kUsage);
  CHECK(run({"table", "--graph", "plain", "--n", "5..3"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("argument parsers") {
  CHECK(cli::parse_byte_size("4G") == std::uint64_t{4} << 30);
  CHECK(cli::parse_byte_size("512MiB") == std::uint64_t{512} << 20);
  CHECK(cli::parse_byte_size("100") == 100);
  CHECK_THROWS_AS(cli::parse_byte_size("G"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_byte_size("3 parsecs"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_byte_size("99999999999T"), std::invalid_argument);
  CHECK(cli::parse_range("3..9") == std::pair{3, 9});
  CHECK(cli::parse_range("7") == std::pair{7, 7});
  CHECK_THROWS_AS(cli::parse_range("9..3"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("a..3"), std::invalid_argument);
}
