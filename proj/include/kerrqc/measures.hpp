#ifndef KERRQC_MEASURES_HPP
#define KERRQC_MEASURES_HPP

#include <vector>

#include "kerrqc/pauli.hpp"

namespace kerrqc {

/// Von Neumann entropy in bits; 0 log 0 := 0. Eigenvalues in [-1e-10, 0) are
/// clipped; anything more negative is an error.
double vn_entropy(const Eigen::MatrixXcd& m);

/// Sum of absolute off-diagonal entries in the supplied basis.
double l1_coherence(const Eigen::MatrixXcd& m);

/// Wootters concurrence from the square-root eigenvalues of rho rho~.
double concurrence(const Matrix4cd& m);

/// X-state shortcut 2 max(0, |rho_14| - sqrt(rho_22 rho_33), |rho_23| - sqrt(rho_11 rho_44)).
/// Throws if m has entries off the diagonal/anti-diagonal above 1e-12.
double concurrence_xstate(const Matrix4cd& m);

/// S(rho_A) + S(rho_B) - S(rho_AB).
double mutual_information(const Matrix4cd& m);

struct DiscordResult {
  double discord;
  double classical_corr;
};

/// X-state quantum discord via the two-measurement-family classical
/// correlation CC = S(rho_A) - min(S1, S2). The input must have both Bloch
/// vectors along z and a correlation block reducible to diagonal form by
/// local z-rotations (cross terms involving z below tolerance).
DiscordResult discord_xstate(const Matrix4cd& m);

/// All scalar measures for one state.
struct CorrelationReport {
  double concurrence;
  double coherence_l1;
  double mutual_info;
  double classical_corr;
  double discord;
  double vn_entropy;
  double entropy_A;
  double entropy_B;
};

CorrelationReport correlation_report(const Matrix4cd& m);

/// Mutual-information lower bound on the entropy production over [t_i, t_f].
double entropy_production_bound(double mi_initial, double mi_final);

/// EPR(t) = (I(0) - I(t)) / t pointwise over a time series; times strictly
/// increasing from 0, first entry skipped in the output.
std::vector<double> epr_series(const std::vector<double>& mi_series,
                               const std::vector<double>& times);

/// Decay rate (QC(0) - QC(t)) / t.
double decay_rate(double qc0, double qct, double t);

/// Effective entropy production rate of the two-bath steady state, oriented
/// to be >= 0 for hot-to-cold flux: flux * (1/T2 - 1/T1) with flux measured
/// into the system from bath 1.
double effective_epr(double flux_from_bath1, double T1, double T2);

/// Relative entropy S(rho || sigma) in bits; +infinity when supp(rho) is not
/// contained in supp(sigma).
double relative_entropy(const Matrix4cd& rho, const Matrix4cd& sigma);

}  // namespace kerrqc

#endif
