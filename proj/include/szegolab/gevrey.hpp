#pragma once
// Explicit constants and analyticity-radius lower bounds for the cubic Szego
// flow, the persistence check ||u_N(t)||_{G_tau(t)(W)} <= C0, and an
// empirical radius estimator.
//
// The estimator measures the exponential decay rate of the resolved modes by
// a log-linear fit. Truncated polynomials are entire, so this is a decay-rate
// proxy for the radius of analyticity, not a literal divergence radius; the
// noise floor and the contiguous-window rule exclude truncation-garbage
// modes.

#include <optional>
#include <vector>

#include "szegolab/dynamics.hpp"
#include "szegolab/hardy.hpp"

namespace szego {

struct RadiusBoundParams {
  double sigma = 0.0;   // initial Gevrey radius
  double C1 = 0.0;      // all-time Wiener bound + 1
  double C0 = 0.0;      // max{ ||u0||_{G_sigma(W)}, phi e C1 }
  double lambda = 0.0;  // 4 C0 C1
};

/// 2 Tr|H_{u0}| + 1. The trace norm is conserved, so this bounds
/// ||u(t)||_W + 1 for the exact flow at every time. u0 must be nonzero.
double constant_C1(const HardySeries& u0);

/// max{ ||u0||_{G_sigma(W)}, (1+sqrt(5))/2 * e * C1 }.
double constant_C0(const HardySeries& u0, double sigma, double C1);

/// Piecewise form of the decay rate: 2(1+sqrt(5)) e C1^2 on the small-data
/// branch, 4 C1 ||u0||_{G_sigma(W)} on the large-data branch. Identical to
/// 4 * constant_C0 * C1 in both branches.
double lambda_piecewise(const HardySeries& u0, double sigma, double C1);

/// Bundles sigma, C1, C0, lambda for one initial datum.
RadiusBoundParams radius_bound_params(const HardySeries& u0, double sigma);

/// tau(t) = sigma e^{-lambda |t|}; even in t. Values below 1e-300 are
/// reported as 0 (the caller sees the underflow via the exact zero).
double tau(double t, const RadiusBoundParams& params);

/// Riccati threshold z* = (1+sqrt(5))/2 * e * C1: the envelope derivative is
/// negative above it.
double z_star(double C1);

/// max(z0, z_star(C1)), the all-time envelope bound.
double z_bound(double z0, double C1);

/// lambda~(t) = 2 C1 [2 g0 / (C1 |t|) + 5 e^2 C1^2]^{1/2} + 2 e C1^2 where
/// g0 = ||u0||_{G_sigma(W)}. Throws std::domain_error at t = 0.
double lambda_tilde(double t, double gevrey_norm0, double C1);

/// Limit 2 (1+sqrt(5)) e C1^2 of lambda~ as |t| -> infinity (independent of
/// the Gevrey norm of the initial datum).
double lambda_tilde_limit(double C1);

/// tau~(t) = sigma e^{-lambda~(t) |t|}, |t| > 0; same underflow clamp as tau.
double tau_tilde(double t, double gevrey_norm0, double sigma, double C1);

/// Least-squares slope of log|u_hat(k)| against k over the contiguous window
/// of modes above the floor (k = 0 excluded); returns -slope, or nullopt when
/// fewer than min_window modes qualify. floor > 0, min_window >= 4.
std::optional<double> estimate_radius(const HardySeries& u, double floor = 1e-13,
                                      int min_window = 4);

struct RadiusTrace {
  std::vector<double> times;
  std::vector<std::optional<double>> fitted_radius;  // nullopt = undetermined
  std::vector<double> tau_curve;
  std::vector<double> tau_tilde_curve;  // limit value sigma recorded at t = 0
  std::vector<double> gevrey_at_tau;    // ||u_N(t)||_{G_tau(t)(W)}
  std::vector<bool> tau_underflow;
};

struct PersistenceResult {
  RadiusBoundParams params;
  RadiusTrace trace;
  bool pass = false;
  double max_ratio = 0.0;          // max_t gevrey_at_tau / C0
  int wiener_above_c1_count = 0;   // samples with ||u_N(t)||_W > C1
};

/// Evaluates the persistence bound along a sampled trajectory: computes C1
/// from the initial state's trace norm, C0 and lambda from it, then checks
/// ||u_N(t)||_{G_tau(t)(W)} <= C0 (1 + 1e-9) at every sample. A Gevrey
/// overflow at early times raises std::range_error advising smaller sigma
/// or degree.
PersistenceResult persistence_check(const Trajectory& traj, double sigma,
                                    double floor = 1e-13, int min_window = 4);

struct HsGrowthResult {
  bool pass = false;
  double max_ratio = 0.0;  // max_t LHS/RHS over evaluated samples
  int skipped_samples = 0; // samples skipped because tau underflowed to 0
};

/// Pointwise check of ||u||_{H^s}^2 <= ||u||_W [ e^{-2s} (2s/tau)^{2s}
/// ||u||_{G_tau(W)} + ||u||_W ] at tau = tau(t), for s > 1/2.
HsGrowthResult hs_growth_check(const Trajectory& traj, double s,
                               const RadiusBoundParams& params);

}  // namespace szego
