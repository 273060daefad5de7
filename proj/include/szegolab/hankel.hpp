#pragma once
// Hankel matrix of a symbol, its singular spectrum, and the trace-norm
// inequalities. The Hankel operator h -> P(u conj(h)) is antilinear; its
// modulus has the same spectrum as |Gamma| for the complex Hankel matrix
// Gamma_{kl} = u_hat(k+l), so Tr|H_u| is computed as the nuclear norm of
// Gamma. For a degree-N symbol the (N+1)x(N+1) corner carries the full
// operator: every entry beyond it is exactly zero.

#include <Eigen/Dense>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "szegolab/dynamics.hpp"
#include "szegolab/hardy.hpp"

namespace szego {

/// (N+1)x(N+1) matrix with entry (k,l) = u_hat(k+l), zero when k+l > N.
/// Symmetric under the plain (non-conjugating) transpose.
Eigen::MatrixXcd hankel_matrix(const HardySeries& u);

struct SvdFactors {
  Eigen::MatrixXcd u;
  Eigen::VectorXd sigma;  // non-increasing, non-negative
  Eigen::MatrixXcd v;     // m == u * sigma.asDiagonal() * v.adjoint()
};

/// Deterministic dense Jacobi SVD. Throws NumericalError (with size and norm
/// diagnostics) if the iteration does not converge.
SvdFactors svd_decompose(const Eigen::MatrixXcd& m);

std::vector<double> singular_values(const Eigen::MatrixXcd& m);

/// Nuclear norm of the Hankel matrix of u (= Tr|H_u|).
double trace_norm(const HardySeries& u);

struct InequalityCheck {
  bool pass = false;
  double slack = 0.0;  // how far the inequality holds; negative = violated
};

struct HankelReport {
  std::vector<double> singular_values;
  double trace_norm = 0.0;
  double wiener_half = 0.0;    // (1/2) ||u||_W
  double parity_even = 0.0;    // sum |u_hat(2k)|
  double parity_odd = 0.0;     // sum |u_hat(2k+1)|
  double column_energy = 0.0;  // sum_k (sum_l |u_hat(k+l)|^2)^{1/2}
  /// (s, sqrt(s/(s-1)) * (sum_n (1+n)^{2s} |u_hat(n)|^2)^{1/2}) per requested s.
  std::vector<std::pair<double, double>> hs_chain;
  std::map<std::string, InequalityCheck> checks;

  bool all_pass() const;
};

/// Populates every field and evaluates the bound inequalities with slacks
/// (tolerance -1e-10 absorbs rounding). Each s must be > 1, else
/// std::domain_error: the chain constant sqrt(s/(s-1)) blows up.
HankelReport hankel_report(const HardySeries& u, const std::vector<double>& s_list);

/// Lax-pair consequence: the singular spectrum of the Hankel matrix is
/// time-invariant under the exact flow. Returns the max over samples, over
/// the top 10 singular values, of |sigma_i(t) - sigma_i(0)| / max(sigma_1(0),
/// 1e-300). Must shrink under (N, dt) refinement.
double isospectral_drift(const Trajectory& traj);

}  // namespace szego
