#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <locale>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "reference_tables.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = kgy::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (std::size_t pos; (pos = line.find(',', start)) != std::string::npos; start = pos + 1) {
      cells.push_back(line.substr(start, pos - start));
    }
    cells.push_back(line.substr(start));
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("kgy_cli_" + name);
}

void write_file(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

const std::vector<std::string> kTableArgs = {"--a", "0.05", "--mass", "1", "--n-range", "1:3",
                                             "--l-range", "0:2", "--dim-range", "3:10"};

struct CommaDecimal : std::numpunct<char> {
  char do_decimal_point() const override { return ','; }
  char do_thousands_sep() const override { return '.'; }
  std::string do_grouping() const override { return "\3"; }
};

}  // namespace

TEST_CASE("solve prints the tabulated ground state") {
  const auto r = run({"solve", "--v0", "0.2", "--s0", "0.1", "--a", "0.05", "--mass", "1", "--n", "1", "--l", "0",
                      "--dim", "3"});
  CHECK(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"dim", "n", "l", "energy", "epsilon", "residual", "iterations"});
  CHECK(rows[1][3] == "-0.98885705");
}

TEST_CASE("exit codes") {
  CHECK(run({"solve", "--v0", "0.2", "--s0", "0.1", "--a", "0"}).code == 1);
  const auto cc = run({"solve", "--v0", "5", "--s0", "0", "--a", "0.05", "--dim", "3", "--l", "0"});
  CHECK(cc.code == 2);
  CHECK(cc.err.find("ComplexChannel") != std::string::npos);
  CHECK(cc.out.empty());
  CHECK(run({"solve", "--v0", "0.2", "--a", "0.05"}).code == 1);
  CHECK(run({"solve", "--v0", "0.2", "--s0", "0.1", "--beta", "0.5", "--a", "0.05"}).code == 1);
  CHECK(run({"solve", "--v0", "0.2", "--s0", "0.1", "--a", "0.05", "--n", "0"}).code == 1);
  CHECK(run({"solve", "--v0", "0.2", "--s0", "0.1", "--a", "5"}).code == 2);  // no bound state
  CHECK(run({"solve", "--v0", "abc", "--s0", "0.1", "--a", "0.05"}).code == 1);
  CHECK(run({"solve", "--v0", "0.2", "--s0", "0.1", "--a", "0.05", "--format", "xml"}).code == 1);
  CHECK(run({"table", "--v0", "0.2", "--s0", "0.1", "--a", "0.05", "--n-range", "3:1"}).code == 1);
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({}).code == 1);
  const auto help = run({"table", "--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("--dim-range") != std::string::npos);
}

TEST_CASE("beta is an alternative to s0") {
  const auto a = run({"solve", "--v0", "0.2", "--beta", "0.5", "--a", "0.05"});
  const auto b = run({"solve", "--v0", "0.2", "--s0", "0.1", "--a", "0.05"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("table reproduces the reference tables") {
  for (const auto* ref : kgy::testing::kAllTables) {
    auto args = kTableArgs;
    args.insert(args.begin(), {"table", "--v0", std::to_string(ref->v0), "--s0", std::to_string(ref->s0)});
    const auto r = run(args);
    CHECK(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 49);
    CHECK(rows[0] == std::vector<std::string>{"dim", "n", "l", "energy", "residual", "status"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const int d = std::stoi(rows[i][0]), n = std::stoi(rows[i][1]), l = std::stoi(rows[i][2]);
      int col = 0;
      while (kgy::testing::kColumns[col].n != n || kgy::testing::kColumns[col].l != l) ++col;
      INFO(ref->name << " D=" << d << " n=" << n << " l=" << l);
      CHECK(rows[i][5] == "ok");
      CHECK(std::abs(std::stod(rows[i][3]) - ref->energy[d - 3][col]) <= 1e-7);
    }
  }
}

TEST_CASE("table is deterministic across thread counts") {
  auto args = kTableArgs;
  args.insert(args.begin(), {"table", "--v0", "0.2", "--s0", "-0.2", "--threads", "1"});
  const auto one = run(args);
  args[6] = "8";
  const auto eight = run(args);
  CHECK(one.code == 0);
  CHECK(one.out == eight.out);
}

TEST_CASE("table marks missing states") {
  const auto r = run({"table", "--v0", "0.2", "--s0", "0.1", "--a", "5", "--n-range", "1:2", "--l-range", "0:1"});
  CHECK(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 4);  // (1,0), (2,0), (2,1)
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][3].empty());
    CHECK(rows[i][5] == "no_bound_state");
  }
}

TEST_CASE("json output") {
  const auto r = run({"table", "--v0", "0.2", "--s0", "0.1", "--a", "0.05", "--n-range", "1:2", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["status"] == "ok");
  CHECK(doc[0]["energy"].get<double>() == doctest::Approx(-0.98885705).epsilon(1e-8));
}

TEST_CASE("config file mirrors flags and flags win") {
  const auto cfg = temp_path("config.json");
  write_file(cfg, R"({"v0": 0.2, "s0": 0.1, "a": 0.05, "n": 2, "l": 1, "dim": 3, "format": "json"})");
  const auto from_file = run({"solve", "--config", cfg.string()});
  CHECK(from_file.code == 0);
  CHECK(nlohmann::json::parse(from_file.out)["n"] == 2);
  const auto overridden = run({"solve", "--config", cfg.string(), "--n", "1", "--l", "0", "--format", "csv"});
  CHECK(parse_csv(overridden.out)[1][3] == "-0.98885705");

  write_file(cfg, R"({"v0": 0.2, "s0": 0.1, "a": 0.05, "n-range": [1, 2], "dim-range": "3:4"})");
  CHECK(parse_csv(run({"table", "--config", cfg.string()}).out).size() == 5);

  write_file(cfg, R"({"v0": 0.2, "typo": 1})");
  CHECK(run({"solve", "--config", cfg.string()}).code == 1);
  write_file(cfg, "{not json");
  CHECK(run({"solve", "--config", cfg.string()}).code == 1);
  write_file(cfg, R"({"v0": "0.2"})");
  CHECK(run({"solve", "--config", cfg.string()}).code == 1);
  CHECK(run({"solve", "--config", temp_path("missing.json").string()}).code == 1);
  std::filesystem::remove(cfg);
}

TEST_CASE("--out writes only on success") {
  const auto out = temp_path("out.csv");
  std::filesystem::remove(out);
  const auto bad = run({"solve", "--v0", "0.2", "--s0", "0.1", "--a", "0", "--out", out.string()});
  CHECK(bad.code == 1);
  CHECK_FALSE(std::filesystem::exists(out));
  const auto good = run({"solve", "--v0", "0.2", "--s0", "0.1", "--a", "0.05", "--out", out.string()});
  CHECK(good.code == 0);
  CHECK(good.out.empty());
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str().find("-0.98885705") != std::string::npos);
  std::filesystem::remove(out);
}

TEST_CASE("output ignores the global locale") {
  const auto before = run({"potential", "--v0", "0.2", "--a", "0.05", "--points", "3"});
  const auto saved = std::locale::global(std::locale(std::locale::classic(), new CommaDecimal));
  const auto after = run({"potential", "--v0", "0.2", "--a", "0.05", "--points", "3"});
  std::locale::global(saved);
  CHECK(before.out == after.out);
}

TEST_CASE("potential profile") {
  const auto r = run({"potential", "--v0", "1", "--a", "0.05", "--r-min", "0.1", "--r-max", "2", "--points", "20"});
  CHECK(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 21);
  CHECK(rows[0] == std::vector<std::string>{"r", "exact", "approx", "abs_err", "rel_err"});
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][4]) < 0.05);
  CHECK(run({"potential", "--v0", "1", "--a", "0"}).code == 1);
}

TEST_CASE("degeneracy scan") {
  const auto r = run({"degeneracy", "--v0", "0.2", "--s0", "0.1", "--a", "0.05", "--n-range", "1:3", "--l-range",
                      "0:2", "--dim-range", "3:6"});
  CHECK(r.code == 0);
  CHECK(r.err.find("max |dE|") != std::string::npos);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() > 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][9] == "ok");
    CHECK(std::stod(rows[i][8]) <= 1e-10);
  }
}

TEST_CASE("wavefunction export") {
  const auto r = run({"wavefunction", "--v0", "0.2", "--s0", "0.1", "--a", "0.05", "--n", "2", "--points", "512"});
  CHECK(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 513);
  CHECK(rows[0] == std::vector<std::string>{"r", "R"});
  CHECK(r.err.find("nodes") != std::string::npos);
}

TEST_CASE("oracle comparison rows") {
  const auto r = run({"oracle", "--v0", "0.5", "--s0", "0.5", "--a", "0.05", "--n", "1", "--points", "2000"});
  CHECK(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1][3] == "approximated");
  CHECK(rows[2][3] == "exact");
  CHECK(rows[1][10] == "ok");
  CHECK(run({"oracle", "--v0", "0.5", "--s0", "0.5", "--a", "0.05", "--mode", "both-ish"}).code == 1);
}

TEST_CASE("limits report") {
  const auto r = run({"limits", "--mass", "1", "--v0", "0.02", "--a", "0.01", "--steps", "3"});
  CHECK(r.code == 0);
  CHECK(r.err.find("monotonically: yes") != std::string::npos);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][8] == "ok");
  const auto below = run({"limits", "--mass", "1", "--v0", "0.02", "--a", "0.002", "--steps", "1"});
  CHECK(below.code == 0);
  CHECK(parse_csv(below.out)[1][8] == "no_bound_state");
}
