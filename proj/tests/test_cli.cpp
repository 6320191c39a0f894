#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fatpoints/acm.hpp"
#include "fatpoints/cli.hpp"
#include "fatpoints/io.hpp"

using namespace fatpoints;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_tmp(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream f(p);
  f << content;
  return p.string();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("scheme files parse, serialize, and reject malformed input") {
  GridScheme s = load_scheme("data/y1.json");
  CHECK(s.rows() == 4);
  CHECK(s.has_coords());
  CHECK(s.col_coords->at(3) == ProjPoint{1, 5});

  // Round trip through JSON.
  GridScheme back = parse_scheme_json(scheme_to_json(s));
  CHECK(back.mult == s.mult);
  CHECK(back.row_coords == s.row_coords);
  CHECK(back.col_coords == s.col_coords);

  CHECK_THROWS_AS((void)load_scheme("data/nonexistent.json"), Error);
  CHECK_THROWS_AS(
      (void)load_scheme(write_tmp("fp_bad1.json", "{not json")), Error);
  CHECK_THROWS_AS(
      (void)load_scheme(write_tmp("fp_bad2.json", R"({"mult": []})")), Error);
  CHECK_THROWS_AS((void)load_scheme(write_tmp(
                      "fp_bad3.json", R"({"mult": [[1, 2], [3]]})")),
                  Error);
  CHECK_THROWS_AS((void)load_scheme(write_tmp(
                      "fp_bad4.json", R"({"mult": [[1]], "row_coords": []})")),
                  Error);
}

TEST_CASE("hilbert tables survive a JSON round trip bit-exactly") {
  for (auto mult : {std::vector<std::vector<int>>{{3, 2}, {2, 0}},
                    std::vector<std::vector<int>>{{2, 2}, {2, 0}}}) {
    GridScheme s;
    s.mult = mult;
    HilbertTable t = combinatorial_hilbert(s, {6, 6});
    HilbertTable back = table_from_json(table_to_json(t));
    CHECK(back == t);
  }
}

TEST_CASE("alpha/beta/border commands print the worked example") {
  CliResult a = run_cli({"alpha", "data/example3.json"});
  CHECK(a.code == 0);
  auto al = lines(a.out);
  REQUIRE(al.size() == 3);
  CHECK(al[0] == "alpha_raw: (6,4,2,1) (3,2,1) (2,1) (3,2,1)");
  CHECK(al[1] == "alpha: (6,4,3,3,2,2,2,2,1,1,1,1)");
  CHECK(al[2] == "m = 12");

  CliResult b = run_cli({"beta", "data/example3.json"});
  auto bl = lines(b.out);
  REQUIRE(bl.size() == 3);
  CHECK(bl[0] == "beta_raw: (7,5,3,1) (4,2) (3,2,1)");
  CHECK(bl[1] == "beta: (7,5,4,3,3,2,2,1,1)");
  CHECK(bl[2] == "m' = 9");

  CliResult c = run_cli({"border", "data/example3.json"});
  auto cl = lines(c.out);
  REQUIRE(cl.size() == 3);
  CHECK(cl[0] == "B_C: 12 20 24 26 27 28 28 28 28");
  CHECK(cl[1] == "B_R: 9 16 21 24 26 27 28 28 28 28 28 28");
  CHECK(cl[2] == "eventual: 28");
}

TEST_CASE("acm command prints the certificate verdict") {
  CliResult r = run_cli({"acm", "data/example3.json"});
  CHECK(r.code == 0);
  CHECK(lines(r.out)[0] ==
        "NOT ACM: α* = (12,8,4,2,1,1) ≠ β = (7,5,4,3,3,2,2,1,1)");

  std::string f = write_tmp("fp_acm.json", R"({"mult": [[3,2],[2,0]]})");
  CliResult y = run_cli({"acm", f});
  CHECK(y.code == 0);
  CHECK(lines(y.out)[0] == "ACM: α* = β = (5,3,2,1,1)");
}

TEST_CASE("resolution command prints both notations") {
  CliResult r = run_cli({"resolution", "data/doublepoint.json"});
  CHECK(r.code == 0);
  auto rl = lines(r.out);
  REQUIRE(rl.size() == 2);
  CHECK(rl[0] == "C = {(0,2),(1,1),(2,0)}  V = {(1,2),(2,1)}");
  CHECK(rl[1] ==
        "0 -> R(-1,-2)(+)R(-2,-1) -> R(0,-2)(+)R(-1,-1)(+)R(-2,0) -> "
        "I_Z -> 0");

  std::string f = write_tmp("fp_nonacm.json", R"({"mult": [[2,2],[2,0]]})");
  CliResult no = run_cli({"resolution", f});
  CHECK(no.code == 2);  // refusing non-ACM input is a precondition failure
  CHECK(no.err.find("NotAcm") != std::string::npos);
}

TEST_CASE("hilbert command windows, oracle mode, and JSON round trip") {
  CliResult pretty =
      run_cli({"hilbert", "data/y1.json", "--window", "4x4", "--oracle"});
  CHECK(pretty.code == 0);
  auto pl = lines(pretty.out);
  REQUIRE(pl.size() == 5);
  CHECK(pl[0] == "1 2 3 4 4");
  CHECK(pl[1] == "2 4 4 4 4");
  CHECK(pl[4] == "4 4 4 4 4");

  CliResult js = run_cli({"hilbert", "data/example3.json", "--format", "json"});
  CHECK(js.code == 0);
  HilbertTable parsed = table_from_json(nlohmann::json::parse(js.out));
  GridScheme s = load_scheme("data/example3.json");
  CHECK(parsed == combinatorial_hilbert(s, {12, 9}));

  CliResult holes = run_cli({"hilbert", "data/example3.json"});
  CHECK(holes.out.find('?') != std::string::npos);

  CliResult no_coords =
      run_cli({"hilbert", "data/example3.json", "--oracle"});
  CHECK(no_coords.code == 2);
  CHECK(no_coords.err.find("MissingCoordinates") != std::string::npos);
}

TEST_CASE("oracle and verify commands") {
  CliResult v1 = run_cli({"oracle", "data/y1.json", "--at", "1,1"});
  CHECK(v1.code == 0);
  CHECK(v1.out == "4\n");
  CliResult v2 = run_cli({"oracle", "data/y2.json", "--at", "1,1"});
  CHECK(v2.out == "3\n");
  CliResult v3 =
      run_cli({"oracle", "data/y2.json", "--at", "1,1", "--exact"});
  CHECK(v3.out == "3\n");

  CliResult ver = run_cli({"verify", "data/example3.json"});
  CHECK(ver.code == 0);
  CHECK(ver.out.find("border: ok") != std::string::npos);
  CHECK(ver.out.find("agree") != std::string::npos);

  CliResult seeded =
      run_cli({"verify", "data/example3.json", "--seed", "99"});
  CHECK(seeded.code == 0);

  CliResult vjson =
      run_cli({"verify", "data/y2.json", "--format", "json"});
  CHECK(vjson.code == 0);
  auto j = nlohmann::json::parse(vjson.out);
  CHECK(j["ok"] == true);
  CHECK(j["agree"] == true);
  CHECK(j["border_ok"] == true);
}

TEST_CASE("sweep command smoke run") {
  CliResult r = run_cli({"sweep", "--max-grid", "2x2", "--max-mult", "2",
                         "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schemes"] == 66);
  CHECK(j["ok"] == true);
  CHECK(j["oracle_tables"] > 0);
}

TEST_CASE("exit codes on the error corpus") {
  CHECK(run_cli({}).code == 2);                          // no command
  CHECK(run_cli({"frobnicate"}).code == 2);              // unknown command
  CHECK(run_cli({"alpha"}).code == 2);                   // missing file
  CHECK(run_cli({"alpha", "data/missing.json"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"hilbert", "data/y1.json", "--window", "bogus"}).code == 2);
  CHECK(run_cli({"oracle", "data/y1.json", "--at", "1;1"}).code == 2);
  CHECK(run_cli({"oracle", "data/y1.json", "--at", "1,1", "--prime", "91"})
            .code == 2);  // composite modulus
  CHECK(run_cli({"oracle", "data/y1.json", "--at", "1,1", "--prime", "91",
                 "--exact"})
            .code == 2);  // --prime and --exact exclude each other
  CHECK(run_cli({"sweep", "--max-grid", "0x2"}).code == 2);

  std::string zero =
      write_tmp("fp_zerorow.json", R"({"mult": [[0,0],[1,1]]})");
  CHECK(run_cli({"alpha", zero}).code == 2);
}

TEST_CASE("the environment variable sets the prime and the flag wins") {
  setenv("FATPOINTS_PRIME", "91", 1);  // composite: must be rejected when used
  CHECK(run_cli({"oracle", "data/y1.json", "--at", "1,1"}).code == 2);
  CliResult flag =
      run_cli({"oracle", "data/y1.json", "--at", "1,1", "--prime", "101"});
  CHECK(flag.code == 0);  // explicit flag bypasses the environment
  CHECK(flag.out == "4\n");
  setenv("FATPOINTS_PRIME", "1000003", 1);
  CliResult env = run_cli({"oracle", "data/y1.json", "--at", "1,1"});
  CHECK(env.code == 0);
  CHECK(env.out == "4\n");
  unsetenv("FATPOINTS_PRIME");
}
