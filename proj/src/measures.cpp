#include "kerrqc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kerrqc {

namespace {
double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// -p * log2(p/q) with the 0 log 0 convention.
double cond_term(double p, double q) {
  if (p <= 0.0) return 0.0;
  return -p * std::log2(p / q);
}
}  // namespace

double vn_entropy(const Eigen::MatrixXcd& m) {
  const Eigen::VectorXd ev = clipped_spectrum(m);
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) s -= xlog2x(ev[i]);
  return s;
}

double l1_coherence(const Eigen::MatrixXcd& m) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j) s += std::abs(m(i, j));
  return s;
}

double concurrence(const Matrix4cd& m) {
  const Matrix4cd yy = sigma2(2, 2);
  const Matrix4cd tilde = yy * m.conjugate() * yy;
  Eigen::ComplexEigenSolver<Matrix4cd> es(m * tilde, false);
  std::array<double, 4> lam;
  for (int i = 0; i < 4; ++i)
    lam[i] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
  std::sort(lam.begin(), lam.end(), std::greater<double>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double concurrence_xstate(const Matrix4cd& m) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && i + j != 3 && std::abs(m(i, j)) > 1e-12)
        throw std::invalid_argument("concurrence_xstate: not an X state");
  const double inner = std::abs(m(1, 2)) - std::sqrt(std::max(0.0, m(0, 0).real() * m(3, 3).real()));
  const double outer = std::abs(m(0, 3)) - std::sqrt(std::max(0.0, m(1, 1).real() * m(2, 2).real()));
  return 2.0 * std::max({0.0, inner, outer});
}

double mutual_information(const Matrix4cd& m) {
  return vn_entropy(partial_trace_B(m)) + vn_entropy(partial_trace_A(m)) - vn_entropy(m);
}

DiscordResult discord_xstate(const Matrix4cd& m) {
  const PauliCoeffs p = density_to_pauli(m);
  const double a = 4.0 * p.c[3][0];
  const double b = 4.0 * p.c[0][3];
  // Bloch vectors must be along z and the correlation block must decouple z.
  const double tol = 1e-9;
  if (std::abs(p.c[1][0]) > tol || std::abs(p.c[2][0]) > tol ||
      std::abs(p.c[0][1]) > tol || std::abs(p.c[0][2]) > tol ||
      std::abs(p.c[1][3]) > tol || std::abs(p.c[2][3]) > tol ||
      std::abs(p.c[3][1]) > tol || std::abs(p.c[3][2]) > tol)
    throw std::invalid_argument("discord_xstate: state not reducible to Bloch-diagonal form");

  // Local z-rotations realize independent SO(2) actions on the xy block; its
  // singular values are the attainable diagonal |C1| >= |C2|.
  Eigen::Matrix2d xy;
  xy << 4.0 * p.c[1][1], 4.0 * p.c[1][2], 4.0 * p.c[2][1], 4.0 * p.c[2][2];
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(xy);
  const double c1 = svd.singularValues()(0);
  const double c3 = 4.0 * p.c[3][3];

  const double s_a = vn_entropy(partial_trace_B(m));

  double s1 = cond_term((1 + a + b + c3) / 4.0, (1 + b) / 2.0) +
              cond_term((1 - a + b - c3) / 4.0, (1 + b) / 2.0) +
              cond_term((1 + a - b - c3) / 4.0, (1 - b) / 2.0) +
              cond_term((1 - a - b + c3) / 4.0, (1 - b) / 2.0);

  const double t = std::min(1.0, std::sqrt(a * a + c1 * c1));
  const double f = -0.5 * (xlog2x(1 - t) + xlog2x(1 + t));
  const double s2 = 1.0 + f;

  DiscordResult r;
  r.classical_corr = s_a - std::min(s1, s2);
  r.discord = mutual_information(m) - r.classical_corr;
  if (r.discord < 0.0 && r.discord >= -1e-9) r.discord = 0.0;
  return r;
}

CorrelationReport correlation_report(const Matrix4cd& m) {
  CorrelationReport rep;
  rep.concurrence = concurrence(m);
  rep.coherence_l1 = l1_coherence(m);
  rep.mutual_info = mutual_information(m);
  const DiscordResult d = discord_xstate(m);
  rep.classical_corr = d.classical_corr;
  rep.discord = d.discord;
  rep.vn_entropy = vn_entropy(m);
  rep.entropy_A = vn_entropy(partial_trace_B(m));
  rep.entropy_B = vn_entropy(partial_trace_A(m));
  return rep;
}

double entropy_production_bound(double mi_initial, double mi_final) {
  const double bound = mi_initial - mi_final;
  if (bound < -1e-9)
    throw std::domain_error("entropy_production_bound: negative beyond tolerance");
  return std::max(0.0, bound);
}

std::vector<double> epr_series(const std::vector<double>& mi_series,
                               const std::vector<double>& times) {
  if (mi_series.size() != times.size() || times.empty() || times.front() != 0.0)
    throw std::invalid_argument("epr_series: times must start at 0 and match mi_series");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (times[i] <= times[i - 1])
      throw std::invalid_argument("epr_series: times must be strictly increasing");
  std::vector<double> out;
  out.reserve(times.size() - 1);
  for (std::size_t i = 1; i < times.size(); ++i)
    out.push_back((mi_series.front() - mi_series[i]) / times[i]);
  return out;
}

double decay_rate(double qc0, double qct, double t) {
  if (t <= 0.0) throw std::domain_error("decay_rate: t must be positive");
  return (qc0 - qct) / t;
}

double effective_epr(double flux_from_bath1, double T1, double T2) {
  if (T1 <= 0.0 || T2 <= 0.0)
    throw std::domain_error("effective_epr: temperatures must be positive");
  return flux_from_bath1 * (1.0 / T2 - 1.0 / T1);
}

double relative_entropy(const Matrix4cd& rho, const Matrix4cd& sigma) {
  const Eigen::VectorXd rho_ev = clipped_spectrum(rho);
  double tr_rho_log_rho = 0.0;
  for (Eigen::Index i = 0; i < rho_ev.size(); ++i) tr_rho_log_rho += xlog2x(rho_ev[i]);

  Eigen::SelfAdjointEigenSolver<Matrix4cd> es(sigma);
  double tr_rho_log_sigma = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double s = es.eigenvalues()(i);
    const double overlap =
        (es.eigenvectors().col(i).adjoint() * rho * es.eigenvectors().col(i))(0).real();
    if (s <= 1e-14) {
      if (overlap > 1e-12) return std::numeric_limits<double>::infinity();
      continue;
    }
    tr_rho_log_sigma += overlap * std::log2(s);
  }
  return std::max(0.0, tr_rho_log_rho - tr_rho_log_sigma);
}

}  // namespace kerrqc
