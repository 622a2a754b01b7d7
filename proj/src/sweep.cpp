#include "kerrqc/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "kerrqc/gksl.hpp"
#include "kerrqc/kerr_geometry.hpp"
#include "kerrqc/measures.hpp"
#include "kerrqc/two_bath.hpp"

namespace kerrqc::sweep {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string range_str(const Range& r) {
  return fmt(r.lo) + ":" + fmt(r.hi) + ":" + std::to_string(r.n);
}

std::vector<std::string> common_meta(const ScenarioConfig& cfg) {
  std::vector<std::string> m;
  m.push_back("kerrqc sweep v0.1.0");
  m.push_back("model=" + model_name(cfg.model));
  m.push_back("mass-range=" + range_str(cfg.mass));
  m.push_back("spin-range=" + range_str(cfg.spin));
  if (cfg.model == Model::neq_steady) m.push_back("dr-range=" + range_str(cfg.dr));
  if (cfg.model == Model::transient) m.push_back("time-range=" + range_str(cfg.time));
  m.push_back("radial-factor=" + fmt(cfg.radial_factor));
  m.push_back("omega=" + fmt(cfg.omega));
  m.push_back("mu=" + fmt(cfg.mu));
  if (cfg.model == Model::neq_steady) m.push_back("coupling-k=" + fmt(cfg.coupling_k));
  if (cfg.model == Model::equilibrium) m.push_back("tau-star=" + fmt(cfg.tau_star));
  return m;
}

void push_report(std::vector<double>& row, const CorrelationReport& rep) {
  row.insert(row.end(), {rep.concurrence, rep.coherence_l1, rep.mutual_info,
                         rep.classical_corr, rep.discord, rep.vn_entropy, rep.entropy_A,
                         rep.entropy_B});
}

const std::vector<std::string> kReportColumns = {
    "concurrence", "coherence_l1", "mutual_info", "classical_corr",
    "discord",     "vn_entropy",   "entropy_A",   "entropy_B"};
}  // namespace

std::vector<double> Range::points() const {
  if (n < 1) throw std::invalid_argument("range must have at least one point");
  std::vector<double> p;
  p.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    p.push_back(lo);
    return p;
  }
  for (int i = 0; i < n; ++i)
    p.push_back(lo + (hi - lo) * static_cast<double>(i) / (n - 1));
  return p;
}

Range parse_range(const std::string& text) {
  Range r;
  char colon1 = 0, colon2 = 0;
  std::istringstream is(text);
  if (!(is >> r.lo >> colon1 >> r.hi >> colon2 >> r.n) || colon1 != ':' || colon2 != ':' ||
      r.n < 1 || (is >> std::ws, !is.eof()))
    throw std::invalid_argument("bad range '" + text + "', expected lo:hi:n");
  return r;
}

Model parse_model(const std::string& name) {
  if (name == "geometry") return Model::geometry;
  if (name == "equilibrium") return Model::equilibrium;
  if (name == "transient") return Model::transient;
  if (name == "neq-steady") return Model::neq_steady;
  throw std::invalid_argument("unknown model '" + name + "'");
}

std::string model_name(Model m) {
  switch (m) {
    case Model::geometry: return "geometry";
    case Model::equilibrium: return "equilibrium";
    case Model::transient: return "transient";
    case Model::neq_steady: return "neq-steady";
  }
  return "?";
}

ScenarioConfig ScenarioConfig::defaults(Model m) {
  ScenarioConfig cfg;
  cfg.model = m;
  cfg.mass = {10.0, 50.0, 80};
  cfg.spin = {10.0, 10.0, 1};
  cfg.dr = {0.0, 0.5, 100};
  cfg.time = {0.0, 100.0, 200};
  switch (m) {
    case Model::geometry:
      cfg.mass = {10.0, 50.0, 80};
      cfg.spin = {0.1, 9.99, 80};
      break;
    case Model::equilibrium:
    case Model::transient:
      break;
    case Model::neq_steady:
      cfg.mass = {10.01, 10.01, 1};
      cfg.spin = {10.0, 10.0, 1};
      cfg.radial_factor = 1.006;
      break;
  }
  return cfg;
}

Table run_geometry(const ScenarioConfig& cfg) {
  Table t;
  t.meta = common_meta(cfg);
  t.columns = {"mass",  "spin",      "r_plus",    "r_minus", "kappa",
               "kappa_r", "kappa_kerr", "T_eff",     "flag"};
  for (double m : cfg.mass.points()) {
    for (double a : cfg.spin.points()) {
      std::vector<double> row = {m, a};
      try {
        const BlackHoleParams bh(m, a);
        const HorizonData h = horizons(bh);
        const DetectorPosition pos(cfg.radial_factor);
        const double kr = local_acceleration(bh, pos);
        row.insert(row.end(), {h.r_plus, h.r_minus, h.kappa, kr, kerr_spring_gravity(bh),
                               kr / (2.0 * M_PI), h.extremal ? 1.0 : 0.0});
      } catch (const std::exception&) {
        row.insert(row.end(), {kNan, kNan, kNan, kNan, kNan, kNan, 1.0});
      }
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

Table run_equilibrium(const ScenarioConfig& cfg) {
  Table t;
  t.meta = common_meta(cfg);
  t.columns = {"mass", "spin", "kappa_r", "T_eff", "R"};
  t.columns.insert(t.columns.end(), kReportColumns.begin(), kReportColumns.end());
  t.columns.push_back("flag");
  const Vec3 n = {0.0, 0.0, 1.0};
  for (double m : cfg.mass.points()) {
    for (double a : cfg.spin.points()) {
      std::vector<double> row = {m, a};
      try {
        const BlackHoleParams bh(m, a);
        if (bh.extremal()) throw std::domain_error("extremal");
        const DetectorPosition pos(cfg.radial_factor);
        const double kr = local_acceleration(bh, pos);
        const BathSpectrum bath(VacuumKind::Unruh, kr);
        const DissipationCoeffs dc = dissipation_coeffs(bath, cfg.omega, cfg.mu);
        const PauliCoeffs state = equilibrium_steady_state(dc.R, cfg.tau_star, n);
        const Matrix4cd rho = pauli_to_density(state);
        validate_density(rho);
        row.insert(row.end(), {kr, kr / (2.0 * M_PI), dc.R});
        push_report(row, correlation_report(rho));
        row.push_back(0.0);
      } catch (const std::exception&) {
        row.resize(2);
        row.insert(row.end(), t.columns.size() - 3, kNan);
        row.push_back(1.0);
      }
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

Table run_transient(const ScenarioConfig& cfg) {
  Table t;
  t.meta = common_meta(cfg);
  t.columns = {"mass", "spin", "kappa_r", "t"};
  t.columns.insert(t.columns.end(), kReportColumns.begin(), kReportColumns.end());
  t.columns.insert(t.columns.end(),
                   {"epr", "ep_bound", "decay_concurrence", "decay_coherence",
                    "decay_mutual_info", "decay_discord", "decay_vn_entropy", "flag"});
  const PauliCoeffs bell = PauliCoeffs::bell();
  const CorrelationReport rep0 = correlation_report(pauli_to_density(bell));
  const double mu2 = cfg.mu * cfg.mu;
  for (double m : cfg.mass.points()) {
    for (double a : cfg.spin.points()) {
      double kr = kNan;
      double rate_A = kNan, rate_B = kNan;
      bool ok = true;
      try {
        const BlackHoleParams bh(m, a);
        if (bh.extremal()) throw std::domain_error("extremal");
        kr = local_acceleration(bh, DetectorPosition(cfg.radial_factor));
        const BathSpectrum bath(VacuumKind::Unruh, kr);
        const DissipationCoeffs dc = dissipation_coeffs(bath, cfg.omega, cfg.mu);
        rate_A = dc.gamma_plus + dc.gamma_minus;
        rate_B = dc.gamma_minus - dc.gamma_plus;  // oriented to the Gibbs asymptote
      } catch (const std::exception&) {
        ok = false;
      }
      for (double time : cfg.time.points()) {
        std::vector<double> row = {m, a, kr, time};
        if (!ok) {
          row.insert(row.end(), t.columns.size() - 5, kNan);
          row.push_back(1.0);
          t.rows.push_back(std::move(row));
          continue;
        }
        const double tau = time / mu2;
        const PauliCoeffs p = transient_evolution(bell, rate_A, rate_B, cfg.omega, tau);
        const Matrix4cd rho = pauli_to_density(p);
        validate_density(rho);
        const CorrelationReport rep = correlation_report(rho);
        push_report(row, rep);
        if (time > 0.0) {
          row.push_back(decay_rate(rep0.mutual_info, rep.mutual_info, time));  // epr
          row.push_back(entropy_production_bound(rep0.mutual_info, rep.mutual_info));
          row.push_back(decay_rate(rep0.concurrence, rep.concurrence, time));
          row.push_back(decay_rate(rep0.coherence_l1, rep.coherence_l1, time));
          row.push_back(decay_rate(rep0.mutual_info, rep.mutual_info, time));
          row.push_back(decay_rate(rep0.discord, rep.discord, time));
          row.push_back(decay_rate(rep0.vn_entropy, rep.vn_entropy, time));
        } else {
          row.insert(row.end(), {kNan, 0.0, kNan, kNan, kNan, kNan, kNan});
        }
        row.push_back(0.0);
        t.rows.push_back(std::move(row));
      }
    }
  }
  return t;
}

Table run_neq_steady(const ScenarioConfig& cfg) {
  Table t;
  t.meta = common_meta(cfg);
  t.columns = {"mass", "spin", "dr", "kappa_r1", "kappa_r2", "T1", "T2"};
  t.columns.insert(t.columns.end(), kReportColumns.begin(), kReportColumns.end());
  t.columns.insert(t.columns.end(),
                   {"flux1", "flux2", "flux_sum", "effective_epr", "steady", "flag"});
  const TwoQubitHamiltonian ham(cfg.omega, cfg.omega, cfg.coupling_k);
  const EigenStructure es = eigen_structure(ham);
  const TransitionOps ops = transition_ops(es);
  for (double m : cfg.mass.points()) {
    for (double a : cfg.spin.points()) {
      for (double dr : cfg.dr.points()) {
        std::vector<double> row = {m, a, dr};
        try {
          const BlackHoleParams bh(m, a);
          if (bh.extremal()) throw std::domain_error("extremal");
          const double kr1 = local_acceleration(bh, DetectorPosition(cfg.radial_factor));
          const double kr2 =
              local_acceleration(bh, DetectorPosition(cfg.radial_factor + dr));
          const BathSpectrum bath1(VacuumKind::Unruh, kr1);
          const BathSpectrum bath2(VacuumKind::Unruh, kr2);
          const Matrix4cd rho = neq_steady_state_closed_form(es, bath1, bath2);
          validate_density(rho);
          const FluxReport fr = two_bath_flux(es, ops, bath1, bath2, cfg.mu, ham, rho);
          const double T1 = kr1 / (2.0 * M_PI);
          const double T2 = kr2 / (2.0 * M_PI);
          row.insert(row.end(), {kr1, kr2, T1, T2});
          push_report(row, correlation_report(rho));
          row.insert(row.end(),
                     {fr.into_system_1, fr.into_system_2,
                      fr.into_system_1 + fr.into_system_2,
                      effective_epr(fr.into_system_1, T1, T2), fr.steady ? 1.0 : 0.0, 0.0});
        } catch (const std::exception&) {
          row.resize(3);
          row.insert(row.end(), t.columns.size() - 4, kNan);
          row.push_back(1.0);
        }
        t.rows.push_back(std::move(row));
      }
    }
  }
  return t;
}

Table run(const ScenarioConfig& cfg) {
  switch (cfg.model) {
    case Model::geometry: return run_geometry(cfg);
    case Model::equilibrium: return run_equilibrium(cfg);
    case Model::transient: return run_transient(cfg);
    case Model::neq_steady: return run_neq_steady(cfg);
  }
  throw std::logic_error("unreachable");
}

void write_csv(const Table& t, std::ostream& os) {
  for (const auto& m : t.meta) os << "# " << m << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << fmt(row[i]);
    os << "\n";
  }
}

namespace {
int column_index(const Table& t, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    if (t.columns[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("no column '" + name + "'");
}
}  // namespace

void write_svg(const Table& t, const std::string& x_column,
               const std::vector<std::string>& y_columns, std::ostream& os) {
  const int xi = column_index(t, x_column);
  const int width = 720, height = 480, margin = 60;
  double xmin = kNan, xmax = kNan, ymin = kNan, ymax = kNan;
  auto grow = [](double& lo, double& hi, double v) {
    if (std::isnan(v)) return;
    if (std::isnan(lo) || v < lo) lo = v;
    if (std::isnan(hi) || v > hi) hi = v;
  };
  std::vector<int> yi;
  for (const auto& name : y_columns) yi.push_back(column_index(t, name));
  for (const auto& row : t.rows) {
    grow(xmin, xmax, row[xi]);
    for (int c : yi) grow(ymin, ymax, row[c]);
  }
  if (std::isnan(xmin) || std::isnan(ymin)) throw std::runtime_error("svg: no finite data");
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;
  auto px = [&](double x) {
    return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin);
  };
  auto py = [&](double y) {
    return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin);
  };
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << height
     << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
  os << "<line x1='" << margin << "' y1='" << height - margin << "' x2='" << width - margin
     << "' y2='" << height - margin << "' stroke='black'/>\n";
  os << "<line x1='" << margin << "' y1='" << margin << "' x2='" << margin << "' y2='"
     << height - margin << "' stroke='black'/>\n";
  os << "<text x='" << width / 2 << "' y='" << height - margin / 4 << "'>" << x_column
     << "</text>\n";
  for (std::size_t s = 0; s < yi.size(); ++s) {
    os << "<polyline fill='none' stroke='" << palette[s % 8] << "' points='";
    for (const auto& row : t.rows) {
      if (std::isnan(row[xi]) || std::isnan(row[yi[s]])) continue;
      os << fmt(px(row[xi])) << "," << fmt(py(row[yi[s]])) << " ";
    }
    os << "'/>\n";
    os << "<text x='" << width - margin + 4 << "' y='" << margin + 16 * s << "' fill='"
       << palette[s % 8] << "' font-size='12'>" << y_columns[s] << "</text>\n";
  }
  os << "</svg>\n";
}

std::vector<std::string> default_plot_columns(Model m) {
  switch (m) {
    case Model::geometry: return {"kappa", "kappa_r", "kappa_kerr"};
    case Model::equilibrium:
    case Model::transient:
      return {"concurrence", "coherence_l1", "mutual_info", "discord", "vn_entropy"};
    case Model::neq_steady:
      return {"concurrence", "coherence_l1", "mutual_info", "discord", "vn_entropy",
              "flux1", "effective_epr"};
  }
  return {};
}

std::string default_x_column(Model m) {
  switch (m) {
    case Model::geometry: return "mass";
    case Model::equilibrium: return "mass";
    case Model::transient: return "t";
    case Model::neq_steady: return "dr";
  }
  return "mass";
}

}  // namespace kerrqc::sweep
