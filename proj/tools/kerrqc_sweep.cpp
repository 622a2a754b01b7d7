// Sweep CLI: evaluates the equilibrium, transient and two-bath steady-state
// models (plus raw horizon geometry) over parameter grids and writes CSV,
// optionally with a static SVG line plot next to it.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>

#include "kerrqc/sweep.hpp"

namespace {

using kerrqc::sweep::Model;
using kerrqc::sweep::ScenarioConfig;

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = val;
  }
  return kv;
}

void apply_config_file(ScenarioConfig& cfg, const std::string& path) {
  for (const auto& [key, val] : read_config_file(path)) {
    if (key == "mass-range") cfg.mass = kerrqc::sweep::parse_range(val);
    else if (key == "spin-range") cfg.spin = kerrqc::sweep::parse_range(val);
    else if (key == "dr-range") cfg.dr = kerrqc::sweep::parse_range(val);
    else if (key == "time-range") cfg.time = kerrqc::sweep::parse_range(val);
    else if (key == "radial-factor") cfg.radial_factor = std::stod(val);
    else if (key == "omega") cfg.omega = std::stod(val);
    else if (key == "mu") cfg.mu = std::stod(val);
    else if (key == "coupling-k") cfg.coupling_k = std::stod(val);
    else if (key == "tau-star") cfg.tau_star = std::stod(val);
    else if (key == "out") cfg.out_path = val;
    else if (key == "svg") cfg.svg = (val == "1" || val == "true");
    else throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

struct SubcommandState {
  std::string config_path;
  std::string out_path;
  std::string mass, spin, dr, time;
  double radial_factor = -1.0, omega = -1.0, mu = -1.0, coupling_k = -1.0;
  double tau_star = -99.0;
  bool tau_star_set = false;
  bool svg = false;
};

void add_common_flags(CLI::App* sub, SubcommandState& st) {
  sub->add_option("--config", st.config_path, "flat key=value config file");
  sub->add_option("--out", st.out_path, "output CSV path ('-' for stdout)");
  sub->add_option("--mass-range", st.mass, "mass grid lo:hi:n");
  sub->add_option("--spin-range", st.spin, "spin grid lo:hi:n");
  sub->add_option("--dr-range", st.dr, "separation grid lo:hi:n (neq-steady)");
  sub->add_option("--time-range", st.time, "scaled-time grid lo:hi:n (transient)");
  sub->add_option("--radial-factor", st.radial_factor, "detector position in units of r_plus");
  sub->add_option("--omega", st.omega, "detector gap");
  sub->add_option("--mu", st.mu, "field coupling");
  sub->add_option("--coupling-k", st.coupling_k, "inter-qubit coupling (neq-steady)");
  sub->add_option("--tau-star", st.tau_star, "conserved tau_* (equilibrium)")
      ->each([&st](const std::string&) { st.tau_star_set = true; });
  sub->add_flag("--svg", st.svg, "also write a line plot next to the CSV");
}

ScenarioConfig assemble(Model model, const SubcommandState& st) {
  ScenarioConfig cfg = ScenarioConfig::defaults(model);
  if (!st.config_path.empty()) apply_config_file(cfg, st.config_path);
  if (!st.mass.empty()) cfg.mass = kerrqc::sweep::parse_range(st.mass);
  if (!st.spin.empty()) cfg.spin = kerrqc::sweep::parse_range(st.spin);
  if (!st.dr.empty()) cfg.dr = kerrqc::sweep::parse_range(st.dr);
  if (!st.time.empty()) cfg.time = kerrqc::sweep::parse_range(st.time);
  if (st.radial_factor > 0.0) cfg.radial_factor = st.radial_factor;
  if (st.omega > 0.0) cfg.omega = st.omega;
  if (st.mu > 0.0) cfg.mu = st.mu;
  if (st.coupling_k > 0.0) cfg.coupling_k = st.coupling_k;
  if (st.tau_star_set) cfg.tau_star = st.tau_star;
  if (!st.out_path.empty()) cfg.out_path = st.out_path;
  if (st.svg) cfg.svg = true;
  return cfg;
}

int run_model(const ScenarioConfig& cfg) {
  kerrqc::sweep::Table table;
  try {
    table = kerrqc::sweep::run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  if (cfg.out_path == "-") {
    kerrqc::sweep::write_csv(table, std::cout);
  } else {
    std::ofstream out(cfg.out_path);
    if (!out) {
      std::cerr << "cannot open output '" << cfg.out_path << "'\n";
      return 2;
    }
    kerrqc::sweep::write_csv(table, out);
  }
  if (cfg.svg) {
    const std::string svg_path =
        (cfg.out_path == "-" ? std::string("sweep") : cfg.out_path) + ".svg";
    std::ofstream out(svg_path);
    if (!out) {
      std::cerr << "cannot open output '" << svg_path << "'\n";
      return 2;
    }
    kerrqc::sweep::write_svg(table, kerrqc::sweep::default_x_column(cfg.model),
                             kerrqc::sweep::default_plot_columns(cfg.model), out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum correlations of Unruh-DeWitt detectors near a Kerr horizon"};
  app.require_subcommand(1);

  std::map<std::string, Model> models = {
      {"geometry", Model::geometry},
      {"equilibrium", Model::equilibrium},
      {"transient", Model::transient},
      {"neq-steady", Model::neq_steady},
  };
  std::map<std::string, SubcommandState> states;
  for (auto& [name, model] : models) {
    auto* sub = app.add_subcommand(name, "run the " + name + " sweep");
    add_common_flags(sub, states[name]);
  }

  CLI11_PARSE(app, argc, argv);

  for (auto& [name, model] : models) {
    if (app.got_subcommand(name)) {
      ScenarioConfig cfg;
      try {
        cfg = assemble(model, states[name]);
      } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
      }
      return run_model(cfg);
    }
  }
  return 2;
}
