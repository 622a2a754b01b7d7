#ifndef KERRQC_SWEEP_HPP
#define KERRQC_SWEEP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kerrqc::sweep {

/// Inclusive linear grid lo..hi with n points (n = 1 pins the value at lo).
struct Range {
  double lo = 0.0;
  double hi = 0.0;
  int n = 1;

  std::vector<double> points() const;
};

Range parse_range(const std::string& text);  // "lo:hi:n"

enum class Model { geometry, equilibrium, transient, neq_steady };

Model parse_model(const std::string& name);
std::string model_name(Model m);

struct ScenarioConfig {
  Model model = Model::equilibrium;
  Range mass;
  Range spin;
  Range dr;          // neq-steady separation grid, in units of r_plus
  Range time;        // transient grid, in units of 1/mu^2
  double radial_factor = 1.01;
  double omega = 0.1;
  double mu = 0.01;
  double coupling_k = 0.005;  // 0.05 * omega
  double tau_star = -1.0;
  std::string out_path = "-";
  bool svg = false;

  static ScenarioConfig defaults(Model m);
};

struct Table {
  std::vector<std::string> meta;     // emitted as '# ...' lines
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

Table run_geometry(const ScenarioConfig& cfg);
Table run_equilibrium(const ScenarioConfig& cfg);
Table run_transient(const ScenarioConfig& cfg);
Table run_neq_steady(const ScenarioConfig& cfg);
Table run(const ScenarioConfig& cfg);

/// Fixed-format CSV: '#' metadata, header line, 12 significant digits,
/// decimal point, no locale.
void write_csv(const Table& t, std::ostream& os);

/// Static SVG line plot of the named y columns against the x column.
void write_svg(const Table& t, const std::string& x_column,
               const std::vector<std::string>& y_columns, std::ostream& os);

/// Default plot columns for a model's table.
std::vector<std::string> default_plot_columns(Model m);
std::string default_x_column(Model m);

}  // namespace kerrqc::sweep

#endif
