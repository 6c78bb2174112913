// Command-line front end: decompositions, angle sweeps, stationarity checks,
// optimization, and mixed-state bounding. Exit codes: 0 success, 2 bad input,
// 3 numerical non-convergence.

#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entopt/json_io.hpp"

namespace {

using namespace entopt;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

TripartiteState state_from_spec(const std::string& spec) {
  if (spec == "w") return w_state();
  if (spec == "ghz") return ghz_state();
  if (spec == "product") return product_state();
  return load_state_json(spec);
}

struct BasisSpec {
  std::string name = "computational";
  double theta = 0.0;
  double phi = 0.0;
  bool degrees = false;

  double rad(double angle) const { return degrees ? angle * std::numbers::pi / 180.0 : angle; }

  MeasurementBasis build(const TripartiteState& state) const {
    if (name == "computational") return MeasurementBasis::computational(state.dim_c());
    if (name == "eigen") return MeasurementBasis::eigenbasis_of_c(state);
    if (name == "bloch") {
      if (state.dim_c() != 2) {
        throw DimensionMismatch("--basis bloch needs a qubit part C, got dimension " +
                                std::to_string(state.dim_c()));
      }
      return bloch_basis(rad(theta), rad(phi));
    }
    return load_basis_json(name);
  }
};

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file_atomic(out_path, content);
  }
}

std::vector<int> parse_dims_list(const std::string& csv) {
  std::vector<int> dims;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      dims.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw DomainError("--ancilla-dims entry \"" + item + "\" is not an integer");
    }
    if (dims.back() < 1) {
      throw DomainError("--ancilla-dims entries must be >= 1");
    }
  }
  if (dims.empty()) {
    throw DomainError("--ancilla-dims must name at least one dimension");
  }
  return dims;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Average-entanglement analysis of tripartite pure states"};
  app.require_subcommand(1);

  std::string state_spec = "w";
  BasisSpec basis;
  std::string out_path;

  const auto add_state_flag = [&](CLI::App* cmd) {
    cmd->add_option("--state", state_spec, "w | ghz | product | path to a state JSON file")
        ->capture_default_str();
  };
  const auto add_basis_flags = [&](CLI::App* cmd) {
    cmd->add_option("--basis", basis.name,
                    "computational | eigen | bloch | path to a basis JSON file")
        ->capture_default_str();
    cmd->add_option("--theta", basis.theta, "polar angle for --basis bloch");
    cmd->add_option("--phi", basis.phi, "azimuth for --basis bloch");
    cmd->add_flag("--degrees", basis.degrees, "interpret angles in degrees");
  };
  const auto add_out_flag = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output file (stdout when omitted)");
  };

  auto* decompose_cmd = app.add_subcommand("decompose", "Measure C and list the branches");
  add_state_flag(decompose_cmd);
  add_basis_flags(decompose_cmd);
  add_out_flag(decompose_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Average entropy over a (theta, phi) grid");
  int theta_steps = 181;
  int phi_steps = 1;
  add_state_flag(sweep_cmd);
  add_out_flag(sweep_cmd);
  sweep_cmd->add_option("--theta-steps", theta_steps, "grid points over [0, pi]")
      ->capture_default_str();
  sweep_cmd->add_option("--phi-steps", phi_steps, "grid points over [0, 2*pi)")
      ->capture_default_str();

  auto* check_cmd = app.add_subcommand("check", "First-order stationarity report");
  double check_tol = kStationaryTol;
  bool eigen_form = false;
  add_state_flag(check_cmd);
  add_basis_flags(check_cmd);
  add_out_flag(check_cmd);
  check_cmd->add_option("--tol", check_tol, "stationarity tolerance")->capture_default_str();
  check_cmd->add_flag("--eigen-form", eigen_form,
                      "use the reduced trace condition at the eigenbasis of rho^C "
                      "(ignores --basis)");

  auto* optimize_cmd = app.add_subcommand("optimize", "Extremize the average entropy");
  std::string target_name;
  OptimizeConfig opt_config;
  add_state_flag(optimize_cmd);
  add_out_flag(optimize_cmd);
  optimize_cmd->add_option("--target", target_name, "min | max")
      ->required()
      ->check(CLI::IsMember({"min", "max"}));
  optimize_cmd->add_option("--starts", opt_config.starts, "number of starts")
      ->capture_default_str();
  optimize_cmd->add_option("--max-iter", opt_config.max_iter, "iteration cap per start")
      ->capture_default_str();
  optimize_cmd->add_option("--tol", opt_config.tol, "convergence threshold on max |sbar1|")
      ->capture_default_str();
  optimize_cmd->add_option("--seed", opt_config.seed, "seed for the random starts")
      ->capture_default_str();

  auto* bound_cmd = app.add_subcommand(
      "bound", "Entanglement bounds of a bipartite mixed state via purification");
  std::string density_path;
  std::string ancilla_dims_csv;
  OptimizeConfig bound_config;
  bound_cmd->add_option("--density", density_path, "density matrix JSON file");
  bound_cmd->add_option("--state", state_spec,
                        "w | ghz | product | state JSON file; uses its A+B reduction");
  bound_cmd->add_option("--ancilla-dims", ancilla_dims_csv,
                        "comma-separated ancilla dimensions (default: doubling up to rank)");
  bound_cmd->add_option("--starts", bound_config.starts, "number of starts per optimization")
      ->capture_default_str();
  bound_cmd->add_option("--max-iter", bound_config.max_iter, "iteration cap per start")
      ->capture_default_str();
  bound_cmd->add_option("--tol", bound_config.tol, "convergence threshold")
      ->capture_default_str();
  bound_cmd->add_option("--seed", bound_config.seed, "seed for the random starts")
      ->capture_default_str();
  add_out_flag(bound_cmd);

  auto* constants_cmd = app.add_subcommand("constants", "Closed-form extremal values");
  add_out_flag(constants_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help requests exit 0; any parse problem is a usage error
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (decompose_cmd->parsed()) {
      const TripartiteState state = state_from_spec(state_spec);
      emit(out_path, decomposition_json(decompose(state, basis.build(state))));
      return kExitOk;
    }
    if (sweep_cmd->parsed()) {
      const TripartiteState state = state_from_spec(state_spec);
      emit(out_path, sweep_csv(sweep(state, theta_steps, phi_steps)));
      return kExitOk;
    }
    if (check_cmd->parsed()) {
      const TripartiteState state = state_from_spec(state_spec);
      const OptimalityReport report =
          eigen_form ? check_eigenbasis_condition(state, check_tol)
                     : check_optimality(state, basis.build(state), check_tol);
      emit(out_path, report_json(report));
      return kExitOk;
    }
    if (optimize_cmd->parsed()) {
      const TripartiteState state = state_from_spec(state_spec);
      const Target target = target_name == "min" ? Target::Min : Target::Max;
      const OptimizeResult result = optimize(state, target, opt_config);
      emit(out_path, optimize_json(result));
      return result.converged ? kExitOk : kExitNoConvergence;
    }
    if (bound_cmd->parsed()) {
      if (density_path.empty() == !bound_cmd->count("--state")) {
        std::cerr << "bound needs exactly one of --density or --state\n";
        return kExitUsage;
      }
      int dim_a = 0;
      int dim_b = 0;
      std::optional<DensityMatrix> rho;
      if (!density_path.empty()) {
        rho = load_density_json(density_path, &dim_a, &dim_b);
      } else {
        const TripartiteState state = state_from_spec(state_spec);
        dim_a = state.dim_a();
        dim_b = state.dim_b();
        rho = reduced_density(state, Part::AB);
      }
      const std::vector<int> dims = ancilla_dims_csv.empty()
                                        ? default_ancilla_dims(*rho)
                                        : parse_dims_list(ancilla_dims_csv);
      const std::vector<BoundRow> rows =
          bound_mixed_state(*rho, dim_a, dim_b, dims, bound_config);
      emit(out_path, bounds_json(rows));
      for (const BoundRow& row : rows) {
        if (!row.converged) return kExitNoConvergence;
      }
      return kExitOk;
    }
    if (constants_cmd->parsed()) {
      emit(out_path, constants_json());
      return kExitOk;
    }
  } catch (const NoConvergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
