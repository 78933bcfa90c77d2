#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fibsemi/cli.hpp"
#include "fibsemi/sweep.hpp"

using namespace fibsemi;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"fibsemi"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parse_int_list") {
  CHECK(cli::parse_int_list("3..5") == std::vector<int>{3, 4, 5});
  CHECK(cli::parse_int_list("2,4,6") == std::vector<int>{2, 4, 6});
  CHECK(cli::parse_int_list("6,2..3,2") == std::vector<int>{2, 3, 6});
  CHECK_THROWS_AS(cli::parse_int_list(""), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_int_list("5..3"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_int_list("x"), std::invalid_argument);
}

TEST_CASE("summary") {
  auto r = run({"summary", "--seq", "1,1", "--n", "5", "--d", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("F = 42\n") != std::string::npos);
  CHECK(r.out.find("g = 22\n") != std::string::npos);

  r = run({"summary", "--seq", "1,3", "--n", "1", "--d", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("F = -1\n") != std::string::npos);
  CHECK(r.out.find("g = 0\n") != std::string::npos);

  r = run({"summary", "--seq", "1,1", "--n", "6", "--d", "6"});
  CHECK(r.code == 2);
  CHECK(r.err.find("gcd(V_n, F_d) = 8") != std::string::npos);

  r = run({"summary", "--fib", "--n", "5", "--d", "4", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"a\": 1, \"b\": 1, \"n\": 5, \"d\": 4, \"kappa\": 2, \"generators\": [5, 34], "
        "\"frobenius\": 131, \"genus\": 66}\n");

  r = run({"summary", "--fib", "--n", "5", "--d", "2", "--verify"});
  CHECK(r.code == 0);

  CHECK(run({"summary", "--n", "5"}).code == 2);
  CHECK(run({"summary", "--seq", "2,4", "--n", "3", "--d", "2"}).code == 2);
  CHECK(run({"summary", "--fib", "--lucas", "--n", "3", "--d", "2"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("apery") {
  auto r = run({"apery", "--fib", "--n", "5", "--d", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "0 0\n1 26\n2 47\n3 13\n4 34\n");

  r = run({"apery", "--lucas", "--n", "1", "--d", "2"});
  CHECK(r.out == "0 0\n");

  r = run({"apery", "--lucas", "--n", "4", "--d", "2"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--fib", "--n", "5", "--d", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("4/4 checks passed") != std::string::npos);

  r = run({"verify", "--fib", "--n", "4", "--d", "2"});
  CHECK(r.code == 0);

  r = run({"verify", "--fib", "--n", "60", "--d", "2"});
  CHECK(r.code == 3);

  setenv("FIBSEMI_ORACLE_MAX_BITS", "64", 1);
  r = run({"verify", "--fib", "--n", "5", "--d", "2"});
  CHECK(r.code == 3);
  setenv("FIBSEMI_ORACLE_MAX_BITS", "junk", 1);
  CHECK(run({"verify", "--fib", "--n", "5", "--d", "2"}).code == 2);
  unsetenv("FIBSEMI_ORACLE_MAX_BITS");
}

TEST_CASE("sweep") {
  auto r = run({"sweep", "--fib", "--n", "3..8", "--d", "2", "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(std::filesystem::path(FIBSEMI_GOLDEN_DIR) / "sweep_fib_n3-8_d2.csv"));

  r = run({"sweep", "--fib", "--n", "5,6", "--d", "2,6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1,1,6,6,,,,false,\"not a numerical semigroup: gcd(V_n, F_d) = 8\"") !=
        std::string::npos);

  CHECK(run({"sweep", "--fib", "--n", "3..8", "--d", ""}).code == 2);
  CHECK(run({"sweep", "--fib", "--n", "3..8", "--d", "2", "--out", "/nonexistent/dir/x.csv"}).code ==
        4);

  // Lexicographic by (a, b, n, d) whatever the flag order.
  r = run({"sweep", "--lucas", "--seq", "2,5", "--fib", "--n", "4", "--d", "2"});
  CHECK(r.out.find("1,1,4") < r.out.find("1,3,4"));
  CHECK(r.out.find("1,3,4") < r.out.find("2,5,4"));
}

TEST_CASE("csv and json carry the same rows") {
  SweepOptions opts;
  opts.specs = {SequenceSpec::fibonacci(), SequenceSpec::lucas()};
  opts.ns = {1, 2, 3, 4, 5, 6};
  opts.ds = {2, 6};
  opts.verify = true;
  const auto rows = run_sweep(opts);
  opts.jobs = 3;
  const auto threaded = run_sweep(opts);
  CHECK(render_csv(rows) == render_csv(threaded));
  CHECK(render_json(rows) == render_json(threaded));

  const std::string csv = render_csv(rows);
  const std::string json = render_json(rows);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(rows.size()) + 1);
  CHECK(std::count(json.begin(), json.end(), '{') == static_cast<long>(rows.size()));
  for (const auto& row : rows) {
    if (row.error) {
      CHECK(json.find("\"error\": \"" + *row.error + "\"") != std::string::npos);
      continue;
    }
    const std::string csv_line = to_string(row.a) + "," + to_string(row.b) + "," +
                                 std::to_string(row.n) + "," + std::to_string(row.d) + "," +
                                 std::to_string(*row.kappa) + "," + to_string(*row.frobenius) +
                                 "," + to_string(*row.genus) + ",true,\"\"";
    CHECK(csv.find(csv_line) != std::string::npos);
    const std::string json_frag = "\"n\": " + std::to_string(row.n) + ", \"d\": " +
                                  std::to_string(row.d) + ", \"kappa\": " +
                                  std::to_string(*row.kappa) + ", \"frobenius\": " +
                                  to_string(*row.frobenius) + ", \"genus\": " +
                                  to_string(*row.genus) + ", \"verified\": true";
    CHECK(json.find(json_frag) != std::string::npos);
  }
}
