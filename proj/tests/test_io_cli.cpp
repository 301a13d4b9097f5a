#include <doctest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <sstream>
#include <string>

#include "ghx/errors.hpp"
#include "ghx/io.hpp"
#include "ghx/rng.hpp"
#include "ghx/sampling.hpp"

using namespace ghx;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::filesystem::create_directories("cli_tmp");
  const std::string cmd = env_prefix + "\"" + GHX_CLI_PATH + "\" " + args +
                          " > cli_tmp/stdout.txt 2> cli_tmp/stderr.txt";
  const int raw = std::system(cmd.c_str());
  CliResult r;
  if (WIFEXITED(raw)) r.code = WEXITSTATUS(raw);
  r.out = slurp("cli_tmp/stdout.txt");
  return r;
}

std::string put_matrix(const std::string& name, const HermitianForm& A) {
  std::filesystem::create_directories("cli_tmp");
  const std::string path = "cli_tmp/" + name;
  write_text_file(path, format_matrix(A));
  return path;
}

}  // namespace

TEST_CASE("matrix text round-trips bit for bit") {
  CounterRng rng(81);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + int(rng.next_u64() % 6);
    const HermitianForm A = random_hermitian(n, rng);
    const HermitianForm back = parse_matrix_text(format_matrix(A));
    REQUIRE(back.dim() == n);
    for (int r = 0; r < n; ++r)
      for (int c = r; c < n; ++c) CHECK(back.at(r, c) == A.at(r, c));
  }
}

TEST_CASE("parser reports positions for malformed input") {
  auto expect_at = [](const std::string& text, int line, int column) {
    try {
      parse_matrix_text(text);
      FAIL("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      CHECK(e.column == column);
    }
  };
  expect_at("", 1, 1);
  expect_at("x\n", 1, 1);
  expect_at("2 2\n1 0\n0 1\n", 1, 3);
  expect_at("2\n1 0\n0\n", 3, 1);
  expect_at("2\n1 0\n0 zebra\n", 3, 3);
  expect_at("2\n1 2+1i\n2+1i 1\n", 3, 1);  // partner of (0,1) must be the conjugate
  expect_at("2\n1+2i 0\n0 1\n", 2, 1);     // complex diagonal
  expect_at("1\n", 2, 1);                  // missing row
}

TEST_CASE("complex literals cover bare and signed imaginary forms") {
  const HermitianForm A = parse_matrix_text("2\n0 i\n-i 3\n");
  CHECK(A.at(0, 1) == Complex(0.0, 1.0));
  const HermitianForm B = parse_matrix_text("2\n1 -2.5-0.5i\n-2.5+0.5i 2\n");
  CHECK(B.at(0, 1) == Complex(-2.5, -0.5));
  CHECK(B.at(1, 0) == Complex(-2.5, 0.5));
}

TEST_CASE("format_double survives a parse round trip") {
  CounterRng rng(82);
  for (int trial = 0; trial < 1000; ++trial) {
    const double v = std::ldexp(rng.next_gaussian(), int(rng.next_u64() % 40) - 20);
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("dump_json17 is deterministic and handles non-finite floats") {
  Json j;
  j["b"] = 0.1;
  j["a"] = std::vector<double>{1.0, 1e-300};
  j["nan"] = std::numeric_limits<double>::quiet_NaN();
  j["inf"] = std::numeric_limits<double>::infinity();
  j["nested"] = Json::object();
  j["flag"] = true;
  const std::string once = dump_json17(j);
  CHECK(once == dump_json17(j));
  CHECK(once.find("\"b\"") < once.find("\"a\""));  // insertion order, not sorted
  CHECK(once.find("\"nan\": null") != std::string::npos);
  CHECK(once.find("\"inf\": null") != std::string::npos);
  CHECK(once.find("0.10000000000000001") != std::string::npos);

  const Json back = Json::parse(once);
  CHECK(back["b"].get<double>() == 0.1);
  CHECK(back["a"][1].get<double>() == 1e-300);
}

TEST_CASE("cli: cone membership uses exit codes 0 and 2") {
  const std::string member = put_matrix("pd.txt", HermitianForm::diagonal({2.0, 1.0}));
  auto r = run_cli("cone " + member + " --m 2");
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["schema"] == "ghx/1");
  CHECK(j["member"] == true);
  CHECK(j["m"] == 2);
  CHECK(j["margins"].size() == 2);

  const std::string outside = put_matrix("npd.txt", HermitianForm::diagonal({1.0, -2.0}));
  r = run_cli("cone " + outside + " --m 2");
  CHECK(r.code == 2);
  const Json k = Json::parse(r.out);
  CHECK(k["member"] == false);
  CHECK(k["roots"].size() == 2);
  CHECK(k["roots"][1].get<double>() > 0.0);
}

TEST_CASE("cli: IO and usage failures exit 1") {
  CHECK(run_cli("cone cli_tmp/no_such_file.txt --m 2").code == 1);
  write_text_file("cli_tmp/broken.txt", "2\n1 0\n0\n");
  CHECK(run_cli("cone cli_tmp/broken.txt --m 2").code == 1);
  CHECK(run_cli("garding cli_tmp/broken.txt").code == 1);
  CHECK(run_cli("definitely-not-a-subcommand").code == 1);
  CHECK(run_cli("").code == 1);
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("cli: garding single run diagnoses equality") {
  const std::string a = put_matrix("ga.txt", HermitianForm::diagonal({1.0, 2.0}));
  const std::string b = put_matrix("gb.txt", HermitianForm::diagonal({2.0, 4.0}));
  const auto r = run_cli("garding " + a + " " + b);
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["equality"] == true);
  CHECK(std::abs(j["pairwise"][0].get<double>() - 0.5) <= 1e-9);
  CHECK(j["violation"] == false);
  CHECK(std::abs(j["gap"].get<double>()) <= 1e-9 * j["rhs"].get<double>());
}

TEST_CASE("cli: campaign reports are byte-identical across thread counts") {
  const std::string args =
      "garding --random --n 3 --m 2 --samples 40 --seed 17 --json-out cli_tmp/camp";
  CHECK(run_cli(args + "1.json", "GHX_THREADS=1 ").code == 0);
  CHECK(run_cli(args + "4.json", "GHX_THREADS=4 ").code == 0);
  const std::string one = slurp("cli_tmp/camp1.json");
  const std::string four = slurp("cli_tmp/camp4.json");
  REQUIRE(!one.empty());
  CHECK(one == four);
  const Json j = Json::parse(one);
  CHECK(j["samples"] == 40);
  CHECK(j["seed"] == 17);
  CHECK(j["violation_count"] == 0);
  CHECK(j["worst_relative_gap"].get<double>() >= 0.0);
}

TEST_CASE("cli: hodge single prints the Lorentzian signature") {
  const std::string a = put_matrix("ha.txt", HermitianForm::diagonal({3.0, 3.0, 1.0}));
  const auto r = run_cli("hodge " + a);
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["signature"][0] == 1);
  CHECK(j["signature"][1] == 0);
  CHECK(j["signature"][2] == 8);
  CHECK(j["verdicts"]["hyperbolic"] == true);
  CHECK(j["verdicts"]["primitive_negative"] == true);
  CHECK(j["verdicts"]["decomposition_ok"] == true);
  CHECK(j["verdicts"]["nonsingular"] == true);
}

TEST_CASE("cli: logconcavity single run") {
  const std::string a = put_matrix("la.txt", HermitianForm::diagonal({1.0, 1.0, 1.0}));
  const std::string b = put_matrix("lb.txt", HermitianForm::diagonal({1.0, 2.0, 3.0}));
  const auto r = run_cli("logconcavity --alpha " + a + " --beta " + b + " --m 3");
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j["a"].size() == 4);
  for (const auto& v : j["a"]) CHECK(v.get<double>() > 0.0);
  CHECK(j["violation"] == false);
}

TEST_CASE("cli: config file supplies defaults, flags win") {
  write_text_file("cli_tmp/cfg.json", "{\"samples\": 5, \"seed\": 3, \"m\": 2}\n");
  auto r = run_cli("garding --random --n 2 --config cli_tmp/cfg.json");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["samples"] == 5);
  CHECK(j["seed"] == 3);
  CHECK(j["m"] == 2);

  r = run_cli("garding --random --n 2 --config cli_tmp/cfg.json --samples 7");
  CHECK(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["samples"] == 7);
  CHECK(j["seed"] == 3);

  write_text_file("cli_tmp/badcfg.json", "[1, 2]\n");
  CHECK(run_cli("garding --random --config cli_tmp/badcfg.json").code == 1);
}

TEST_CASE("cli: selftest --list names every case") {
  const auto r = run_cli("selftest --list");
  CHECK(r.code == 0);
  int lines = 0;
  std::istringstream in(r.out);
  std::string line;
  bool saw_all_modules = true;
  int herm = 0, sympoly = 0, garding = 0, hodge = 0, torus = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++lines;
    herm += line.rfind("herm/", 0) == 0;
    sympoly += line.rfind("sympoly/", 0) == 0;
    garding += line.rfind("garding/", 0) == 0;
    hodge += line.rfind("hodge/", 0) == 0;
    torus += line.rfind("torus/", 0) == 0;
  }
  CHECK(saw_all_modules);
  CHECK(lines >= 50);
  CHECK(herm >= 5);
  CHECK(sympoly >= 10);
  CHECK(garding >= 8);
  CHECK(hodge >= 10);
  CHECK(torus >= 10);
}

TEST_CASE("cli: torus single run exports the solved potential") {
  CounterRng rng(83);
  const HermitianForm alpha = random_metric(2, rng, 0.5, 2.0);
  const std::string a = put_matrix("ta.txt", alpha);
  const std::string beta = put_matrix("tb.txt", HermitianForm::diagonal({1.0, -1.0}));
  const auto r = run_cli("torus " + a + " --beta " + beta +
                         " --grid 8 --psi-seed 5 --export-phi cli_tmp/phi.ghxf");
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["grid"] == 8);
  CHECK(j["psi_seed"] == 5);
  CHECK(j["verdicts"]["pointwise_ok"] == true);
  CHECK(j["verdicts"]["match_ok"] == true);
  CHECK(j["integrated"].get<double>() < 0.0);
  CHECK(std::filesystem::exists("cli_tmp/phi.ghxf"));
  CHECK(std::filesystem::exists("cli_tmp/phi.ghxf.json"));

  // Zero class: every residual collapses to the noise floor, still a pass.
  const auto z = run_cli("torus " + a + " --grid 8");
  CHECK(z.code == 0);
  const Json k = Json::parse(z.out);
  CHECK(k["psi_seed"].is_null());
  CHECK(k["verdicts"]["match_ok"] == true);
}
