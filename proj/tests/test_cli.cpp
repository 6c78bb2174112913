#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "entopt/json_io.hpp"

using namespace entopt;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(ENTOPT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (true) {
    const size_t n = std::fread(buf, 1, sizeof buf, pipe);
    if (n == 0) break;
    out.append(buf, n);
  }
  const int status = ::pclose(pipe);
  CliResult r;
  r.out = std::move(out);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("entopt-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("constants command prints the exact values") {
  const CliResult r = run_cli("constants");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["W_EF"].get<double>() == doctest::Approx(0.550047759583).epsilon(1e-12));
  CHECK(j["GHZ_EA"].get<double>() == 1.0);
}

TEST_CASE("decompose defaults to the W state in the computational basis") {
  const CliResult r = run_cli("decompose");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["average_entropy_bits"].get<double>() ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-11));
  CHECK(j["branches"].size() == 2);
}

TEST_CASE("sweep emits the pinned CSV grid") {
  const CliResult r = run_cli("sweep --state ghz --theta-steps 3 --phi-steps 1");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("theta,phi,avg_entropy_bits\n", 0) == 0);
  int lines = 0;
  for (char ch : r.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 4);
}

TEST_CASE("check reports stationarity both ways") {
  const CliResult flat = run_cli("check --state ghz --basis computational");
  CHECK(flat.code == 0);
  CHECK(nlohmann::json::parse(flat.out)["stationary"].get<bool>());

  const CliResult tilted = run_cli("check --state w --basis bloch --theta 0.7 --phi 0.2");
  CHECK(tilted.code == 0);
  CHECK_FALSE(nlohmann::json::parse(tilted.out)["stationary"].get<bool>());

  const CliResult eigen_form = run_cli("check --state w --eigen-form");
  CHECK(eigen_form.code == 0);
  CHECK(nlohmann::json::parse(eigen_form.out)["stationary"].get<bool>());
}

TEST_CASE("degree angles match their radian equivalents") {
  const CliResult deg = run_cli("decompose --state ghz --basis bloch --theta 90 --degrees");
  const CliResult rad = run_cli("decompose --state ghz --basis bloch --theta 1.5707963267948966");
  CHECK(deg.code == 0);
  CHECK(deg.out == rad.out);
}

TEST_CASE("optimize finds the W minimum and is byte-deterministic") {
  const std::string args = "optimize --state w --target min --starts 3 --seed 9";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["value_bits"].get<double>() == doctest::Approx(0.550047759583).epsilon(1e-9));
  CHECK(j["classification"] == "minimum");
}

TEST_CASE("bound runs on a fixture state and on a density file") {
  const CliResult from_state = run_cli("bound --state ghz --starts 2 --seed 4");
  CHECK(from_state.code == 0);
  const auto rows = nlohmann::json::parse(from_state.out);
  REQUIRE(rows.size() >= 2);
  for (const auto& row : rows) {
    CHECK(std::abs(row["ef_bound_bits"].get<double>()) < 1e-6);
    CHECK(std::abs(row["ea_bound_bits"].get<double>() - 1.0) < 1e-6);
  }

  TempDir tmp;
  const std::string rho_path = tmp.file("rho.json");
  save_density_json(reduced_density(w_state(), Part::AB), 2, 2, rho_path);
  const CliResult from_file =
      run_cli("bound --density " + rho_path + " --ancilla-dims 1,2 --starts 2 --seed 4");
  CHECK(from_file.code == 0);
  const auto table = nlohmann::json::parse(from_file.out);
  REQUIRE(table.size() == 2);
  CHECK(table[0]["ancilla_dim"] == 1);
  CHECK(table[1]["ancilla_dim"] == 2);
}

TEST_CASE("output files are written atomically where asked") {
  TempDir tmp;
  const std::string out = tmp.file("sweep.csv");
  const CliResult r = run_cli("sweep --state w --theta-steps 5 --phi-steps 1 --out " + out);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  REQUIRE(in.good());
  std::string first;
  std::getline(in, first);
  CHECK(first == "theta,phi,avg_entropy_bits");
}

TEST_CASE("state files feed every subcommand") {
  TempDir tmp;
  const std::string path = tmp.file("state.json");
  save_state_json(haar_random_state(2, 2, 2, 33), path);
  const CliResult r = run_cli("decompose --state " + path);
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["branches"].size() == 2);
}

TEST_CASE("usage problems exit with code 2 and name the trouble") {
  CHECK(run_cli("optimize --state w").code == 2);               // missing --target
  CHECK(run_cli("frobnicate").code == 2);                       // unknown command
  CHECK(run_cli("optimize --state w --target sideways").code == 2);
  CHECK(run_cli("bound").code == 2);                            // neither input given

  const CliResult missing = run_cli("decompose --state /nonexistent/state.json");
  CHECK(missing.code == 2);
  CHECK(missing.out.find("/nonexistent/state.json") != std::string::npos);

  TempDir tmp;
  const std::string path = tmp.file("wide.json");
  save_state_json(haar_random_state(2, 2, 3, 8), path);
  const CliResult wide = run_cli("sweep --state " + path);
  CHECK(wide.code == 2);  // sweep needs a qubit C

  const CliResult both =
      run_cli("bound --state w --density " + std::string("/nonexistent/rho.json"));
  CHECK(both.code == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("optimize --help").code == 0);
}
