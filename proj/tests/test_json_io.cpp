#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "entopt/analytic.hpp"
#include "entopt/json_io.hpp"
#include "helpers.hpp"

using namespace entopt;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("entopt-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void put(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

TEST_CASE("state JSON round-trips exactly") {
  TempDir tmp;
  const TripartiteState s = haar_random_state(2, 3, 2, 70);
  const std::string path = tmp.file("state.json");
  save_state_json(s, path);
  const TripartiteState back = load_state_json(path);
  CHECK(back.dim_a() == 2);
  CHECK(back.dim_b() == 3);
  CHECK(back.dim_c() == 2);
  CHECK((back.amplitudes() - s.amplitudes()).norm() == 0.0);
}

TEST_CASE("density JSON round-trips with dimensions") {
  TempDir tmp;
  const CMatrix rho_in = reduced_density(w_state(), Part::AB).matrix();
  const std::string path = tmp.file("rho.json");
  save_density_json(DensityMatrix(rho_in), 2, 2, path);
  int da = 0, db = 0;
  const DensityMatrix back = load_density_json(path, &da, &db);
  CHECK(da == 2);
  CHECK(db == 2);
  CHECK(entopt::test::mdiff(back.matrix(), rho_in) == 0.0);
}

TEST_CASE("basis JSON round-trips exactly") {
  TempDir tmp;
  const MeasurementBasis b = entopt::test::seeded_basis(3, 71);
  const std::string path = tmp.file("basis.json");
  save_basis_json(b, path);
  const MeasurementBasis back = load_basis_json(path);
  CHECK(entopt::test::mdiff(back.columns(), b.columns()) == 0.0);
}

TEST_CASE("state loading reports what is wrong") {
  TempDir tmp;
  CHECK_THROWS_AS(load_state_json(tmp.file("missing.json")), ParseError);
  const std::string bad_syntax = tmp.file("syntax.json");
  put(bad_syntax, "{not json");
  CHECK_THROWS_AS(load_state_json(bad_syntax), ParseError);

  const std::string short_amps = tmp.file("short.json");
  put(short_amps, R"({"dims":[2,2,2],"amplitudes":[[1.0,0.0]]})");
  try {
    load_state_json(short_amps);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("8") != std::string::npos);  // names the expected count
  }

  const std::string no_dims = tmp.file("nodims.json");
  put(no_dims, R"({"amplitudes":[[1.0,0.0]]})");
  CHECK_THROWS_AS(load_state_json(no_dims), ParseError);
}

TEST_CASE("density loading renormalizes a near-unit trace and rejects junk") {
  TempDir tmp;
  const std::string near = tmp.file("near.json");
  put(near, R"({"dims":[1,2],"matrix":[[[0.5000000499,0.0],[0.0,0.0]],[[0.0,0.0],[0.5,0.0]]]})");
  const DensityMatrix rho = load_density_json(near);
  CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-12);

  const std::string far = tmp.file("far.json");
  put(far, R"({"dims":[1,2],"matrix":[[[0.7,0.0],[0.0,0.0]],[[0.0,0.0],[0.5,0.0]]]})");
  CHECK_THROWS_AS(load_density_json(far), ParseError);
}

TEST_CASE("basis loading rejects non-orthonormal columns naming the file") {
  TempDir tmp;
  const std::string path = tmp.file("skew.json");
  put(path, R"({"columns":[[[1.0,0.0],[0.0,0.0]],[[1.0,0.0],[0.0,0.0]]]})");
  try {
    load_basis_json(path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(path) != std::string::npos);
    CHECK(std::string(e.what()).find("orthonormal") != std::string::npos);
  }
}

TEST_CASE("decomposition report carries rounded values") {
  const Decomposition d = decompose(w_state(), MeasurementBasis::computational(2));
  const auto j = nlohmann::json::parse(decomposition_json(d));
  CHECK(j["average_entropy_bits"].get<double>() == round_12(2.0 / 3.0));
  REQUIRE(j["branches"].size() == 2);
  CHECK(j["branches"][0]["probability"].get<double>() == round_12(2.0 / 3.0));
  CHECK(j["branches"][0]["entropy_bits"].get<double>() == 1.0);
  CHECK(j["branches"][0]["state"].size() == 4);
}

TEST_CASE("stationarity report serializes verdict and pairs") {
  const auto stat = nlohmann::json::parse(
      report_json(check_optimality(w_state(), MeasurementBasis::computational(2))));
  CHECK(stat["stationary"].get<bool>());
  CHECK(stat["worst_pair"].is_null());
  REQUIRE(stat["pairs"].size() == 2);
  CHECK(stat["pairs"][0]["kind"] == "real");
  CHECK(stat["pairs"][1]["kind"] == "phase");

  const auto off = nlohmann::json::parse(
      report_json(check_optimality(w_state(), bloch_basis(0.9, 0.1))));
  CHECK_FALSE(off["stationary"].get<bool>());
  CHECK(off["worst_pair"]["i"] == 0);
  CHECK(off["worst_pair"]["j"] == 1);
  CHECK(off["worst_residual"].get<double>() > 0.0);
}

TEST_CASE("optimize report serializes the classification when present") {
  OptimizeConfig cfg;
  cfg.starts = 2;
  const OptimizeResult r = optimize(w_state(), Target::Min, cfg);
  const auto j = nlohmann::json::parse(optimize_json(r));
  CHECK(j["target"] == "min");
  CHECK(j["converged"].get<bool>());
  CHECK(j["classification"] == "minimum");
  CHECK(j["value_bits"].get<double>() == round_12(r.value));
  CHECK(j["per_start_values"].size() == 2);
  CHECK(j["basis_columns"].size() == 2);
}

TEST_CASE("bound rows and constants serialize with stable keys") {
  const auto rows = nlohmann::json::parse(
      bounds_json({{1, 0.5, 0.6, true}, {2, 0.4, 0.7, false}}));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["ancilla_dim"] == 1);
  CHECK(rows[1]["converged"] == false);
  CHECK(rows[1]["ef_bound_bits"].get<double>() == 0.4);

  const auto consts = nlohmann::json::parse(constants_json());
  CHECK(consts["W_EF"].get<double>() == round_12(exact_constants().w_ef));
  CHECK(consts["W_EA"].get<double>() == round_12(2.0 / 3.0));
  CHECK(consts["GHZ_EF"].get<double>() == 0.0);
  CHECK(consts["GHZ_EA"].get<double>() == 1.0);
}

TEST_CASE("sweep CSV has the pinned header and 12-digit fields") {
  const auto table = sweep(ghz_state(), 3, 1);
  const std::string csv = sweep_csv(table);
  CHECK(csv.rfind("theta,phi,avg_entropy_bits\n", 0) == 0);
  // one header plus one line per row, newline-terminated
  int lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 4);
  CHECK(csv.find("1.57079632679") != std::string::npos);  // pi/2 to 12 digits
}

TEST_CASE("format_12 and round_12 agree") {
  CHECK(format_12(2.0 / 3.0) == "0.666666666667");
  CHECK(format_12(0.0) == "0");
  CHECK(round_12(2.0 / 3.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-11));
  CHECK(format_12(round_12(0.550047759582757)) == format_12(0.550047759582757));
}

TEST_CASE("atomic writes land complete and leave no temp file") {
  TempDir tmp;
  const std::string path = tmp.file("out.txt");
  write_file_atomic(path, "first\n");
  write_file_atomic(path, "second\n");
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "second\n");
  int entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(tmp.path)) ++entries;
  CHECK(entries == 1);
}
