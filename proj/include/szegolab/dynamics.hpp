#pragma once
// Galerkin truncation of the cubic Szego equation i u_t = P( |u|^2 u ) on the
// Hardy space of the torus, integrated with fixed-step RK4. The nonlinear
// term has two interchangeable evaluations: exact direct convolution and a
// zero-padded FFT (transform length: smallest power of two >= 3N+3, so the
// cubic product is alias-free). Both are exact up to rounding and must agree
// to 1e-12 relative.

#include <string>
#include <vector>

#include "szegolab/hardy.hpp"

namespace szego {

enum class NonlinearMode { kDirect, kFft };

NonlinearMode nonlinear_mode_from_string(const std::string& s);
std::string to_string(NonlinearMode mode);

struct SimConfig {
  int degree = 128;        // Galerkin cutoff N
  double dt = 1e-3;        // step magnitude, > 0
  double t_end = 1.0;      // nonzero; negative runs step backward with -dt
  int sample_every = 100;  // record every k-th step (plus step 0 and the last)
  NonlinearMode nonlinear_mode = NonlinearMode::kFft;
  HardySeries initial;     // degree <= N; zero-padded to N by simulate

  long long step_count() const;
  /// Throws std::invalid_argument naming the offending field ("sim.dt ...").
  void validate() const;
};

struct ConservationSample {
  double l2 = 0.0;
  double momentum = 0.0;
  double hamiltonian = 0.0;
};

struct Trajectory {
  std::vector<double> times;  // strictly monotone, starts at 0
  std::vector<HardySeries> states;
  std::vector<ConservationSample> conservation;
};

/// Max over samples of |Q(t)-Q(0)| / max(|Q(0)|, 1e-300).
struct ConservationReport {
  double max_rel_drift_l2 = 0.0;
  double max_rel_drift_momentum = 0.0;
  double max_rel_drift_hamiltonian = 0.0;
};

struct SimulationResult {
  Trajectory trajectory;
  ConservationReport conservation;
};

/// F(u) = P_N( |u|^2 u ): coefficient k equals
/// sum_{n-j+m=k, 0<=n,j,m<=N} u_hat(n) conj(u_hat(j)) u_hat(m).
HardySeries nonlinear_term(const HardySeries& u,
                           NonlinearMode mode = NonlinearMode::kFft);
HardySeries nonlinear_term_direct(const HardySeries& u);
HardySeries nonlinear_term_fft(const HardySeries& u);

/// Right-hand side of the coefficient ODE: -i F(u).
HardySeries rhs(const HardySeries& u, NonlinearMode mode = NonlinearMode::kFft);

/// One classical RK4 step of du/dt = rhs(u); dt may be negative.
HardySeries rk4_step(const HardySeries& u, double dt,
                     NonlinearMode mode = NonlinearMode::kFft);

/// Truncated Szego energy (1/4) sum_{|k|<=N} |(|u|^2)_hat(k)|^2; conserved
/// exactly by the Galerkin flow, tracked as an extra drift diagnostic.
double hamiltonian(const HardySeries& u);

/// Fixed-step RK4 from 0 to t_end (backward when t_end < 0). Deterministic:
/// identical config gives a bit-identical trajectory. Throws NumericalError
/// (with the step index) if the state stops being finite.
SimulationResult simulate(const SimConfig& config);

struct ConvergenceRow {
  double dt = 0.0;
  double error = 0.0;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  /// log2(error_i / error_{i+1}); ~4 for RK4 on smooth data.
  std::vector<double> observed_orders() const;
};

/// Successive dt halvings starting from config.dt. Error is measured against
/// the single-mode closed form e^{-i|c|^2 t} c when the initial datum has
/// exactly one nonzero mode, otherwise against a dt/4 reference run.
ConvergenceTable convergence_study(const SimConfig& config, int refinements);

}  // namespace szego
