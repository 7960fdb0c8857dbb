#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rees/json_io.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace rees;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(REES_CLI_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("rational strings") {
  CHECK(rational_to_string(Rational(-1)) == "-1");
  CHECK(rational_to_string(Rational(3) / 2) == "3/2");
  CHECK(rational_from_string("3/2") == Rational(3) / 2);
  CHECK(rational_from_string("-7") == Rational(-7));
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}

TEST_CASE("polynomial JSON round-trips over whole generator systems") {
  for (auto [n, a, b] : {std::tuple{3, 7, 3}, {2, 5, 2}, {4, 9, 2}}) {
    UniformParams P = reduction_data(n, a, b);
    for (const Polynomial& g : rees_generators(P)) {
      Json j = poly_to_json(g);
      CHECK(poly_from_json(j) == g);
      CHECK(Json::parse(j.dump()) == j);
    }
  }
}

TEST_CASE("polynomial JSON validation") {
  UniformParams P = reduction_data(2, 5, 2);
  Json j = poly_to_json(taylor_syzygy(P, 1));
  CHECK(j["vars"]["n"] == 2);
  CHECK(j["terms"][0]["c"] == "1");
  CHECK(j["terms"][0]["e"].size() == 5);

  Json bad = j;
  bad["terms"][0]["c"] = "0";
  CHECK_THROWS_AS(poly_from_json(bad), std::invalid_argument);
  Json badlen = j;
  badlen["terms"][0]["e"] = Json::array({1, 2});
  CHECK_THROWS_AS(poly_from_json(badlen), std::invalid_argument);
}

TEST_CASE("cli: params") {
  RunResult j = run_cli("params --n 3 --a 7 --b 3");
  CHECK(j.exit_code == 0);
  CHECK(j.out.find("case=J") != std::string::npos);
  CHECK(j.out.find("p=3") != std::string::npos);
  CHECK(j.out.find("r=2") != std::string::npos);

  RunResult q = run_cli("params --n 2 --a 5 --b 2");
  CHECK(q.exit_code == 0);
  CHECK(q.out.find("case=Q") != std::string::npos);
  CHECK(q.out.find("r=1") != std::string::npos);

  RunResult bad = run_cli("params --n 2 --a 4 --b 2");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("a > 2b") != std::string::npos);
}

TEST_CASE("cli: gens") {
  RunResult t = run_cli("gens --n 2 --a 5 --b 2");
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("4 generators") != std::string::npos);
  CHECK(t.out.find("x1*x2*w^2 - y1*y2") != std::string::npos);

  RunResult j = run_cli("gens --n 2 --a 5 --b 2 --format json");
  CHECK(j.exit_code == 0);
  Json parsed = Json::parse(j.out);
  UniformParams P = reduction_data(2, 5, 2);
  auto gens = rees_generators(P);
  REQUIRE(parsed["generators"].size() == gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    CHECK(poly_from_json(parsed["generators"][i]) == gens[i]);
}

TEST_CASE("cli: oracle agrees with gens up to normalization") {
  RunResult j = run_cli("oracle --n 3 --a 7 --b 3 --format json");
  CHECK(j.exit_code == 0);
  Json parsed = Json::parse(j.out);
  UniformParams P = reduction_data(3, 7, 3);
  REQUIRE(parsed["generators"].size() == 10);
  // every oracle element is, up to sign, a constructed generator
  auto constructed = rees_generators(P);
  for (const Json& gj : parsed["generators"]) {
    Polynomial g = poly_from_json(gj);
    bool found = false;
    for (const Polynomial& c : constructed)
      if (c == g || c == -g) found = true;
    CHECK(found);
  }

  // the binary case keeps all four ladder elements in the minimalized basis
  RunResult q = run_cli("oracle --n 2 --a 5 --b 2 --format json");
  Json qparsed = Json::parse(q.out);
  UniformParams Q = reduction_data(2, 5, 2);
  auto qgens = rees_generators(Q);
  REQUIRE(qparsed["generators"].size() == qgens.size());
  for (const Json& gj : qparsed["generators"]) {
    Polynomial g = poly_from_json(gj);
    bool found = false;
    for (const Polynomial& c : qgens)
      if (c == g || c == -g) found = true;
    CHECK(found);
  }

  // byte-identical across runs
  RunResult again = run_cli("oracle --n 3 --a 7 --b 3 --format json");
  CHECK(again.out == j.out);

  RunResult capped = run_cli("oracle --n 5 --a 20 --b 9");
  CHECK(capped.exit_code == 3);
}

TEST_CASE("cli: verify") {
  RunResult ok = run_cli("verify --n 3 --a 7 --b 3 --suite all");
  CHECK(ok.exit_code == 0);

  RunResult acm = run_cli("verify --n 2 --a 5 --b 2 --suite acm --format json");
  CHECK(acm.exit_code == 0);
  Json parsed = Json::parse(acm.out);
  CHECK(parsed[0]["params"]["case"] == "Q");
  CHECK(parsed[0]["params"]["p"].is_null());
  for (const Json& c : parsed[0]["claims"]) {
    CHECK(c["status"] == "pass");
    CHECK(c["ms"] == 0);  // timings only with --timings, keeping output stable
  }

  // a grid containing an excluded point is rejected per point
  std::string grid_path = "/tmp/rees_test_grid.txt";
  {
    std::ofstream out(grid_path);
    out << "# one good, one rejected\n3 7 3\n2 4 2\n";
  }
  RunResult grid = run_cli("verify --grid " + grid_path + " --suite gb");
  CHECK(grid.exit_code == 2);
  CHECK(grid.out.find("rejected") != std::string::npos);

  RunResult usage = run_cli("verify --bogus-flag");
  CHECK(usage.exit_code == 64);
  RunResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
  RunResult missing = run_cli("gens --n 2 --a 5");
  CHECK(missing.exit_code == 64);
}

TEST_CASE("cli: depth suite aggregates to pass over the shipped grid") {
  RunResult r = run_cli("verify --grid " REES_SOURCE_DIR "/grids/default.grid --suite acm --jobs 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("cli: repeated verify runs are byte-identical") {
  RunResult a = run_cli("verify --n 3 --a 7 --b 3 --suite gb --format json");
  RunResult b = run_cli("verify --n 3 --a 7 --b 3 --suite gb --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}
