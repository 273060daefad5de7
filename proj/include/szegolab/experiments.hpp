#pragma once
// Named, reproducible experiments: initial-data presets, the full analysis
// pipeline (simulation + conservation + Hankel + persistence checks), the
// epsilon-shrinkage sweep, and bound-comparison tables.
//
// Random presets draw from std::mt19937_64 with the 53-bit mapping
// (x >> 11) * 2^-53 and unit-disc rejection sampling; the generator and the
// mapping are frozen so a seed pins the data across platforms and versions.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "szegolab/dynamics.hpp"
#include "szegolab/gevrey.hpp"
#include "szegolab/hankel.hpp"
#include "szegolab/hardy.hpp"

namespace szego {

struct SingleModePreset {
  int mode = 0;
  Complex amplitude{1.0, 0.0};
};

/// u0 = e^{i theta} + eps, the wave-plus-constant datum of the shrinkage
/// experiment.
struct EpsPlusWavePreset {
  double eps = 0.5;
};

/// u_hat(k) = e^{-rho k} g_k with g_k uniform on the complex unit disc.
struct RandomAnalyticPreset {
  double rho = 0.5;
  std::uint64_t seed = 0;
  int degree = 64;
};

struct CustomPreset {
  std::vector<Complex> coeffs;
};

using Preset =
    std::variant<SingleModePreset, EpsPlusWavePreset, RandomAnalyticPreset, CustomPreset>;

HardySeries build_preset(const Preset& preset);
int preset_degree(const Preset& preset);

struct AnalysisConfig {
  double sigma = 0.2;                           // Gevrey radius for persistence
  std::vector<double> s_list{1.1, 1.5, 2.0, 3.0};  // Hankel chain exponents, > 1
  double floor = 1e-13;                         // radius-estimator noise floor
  int min_window = 4;
  std::vector<double> growth_s_list{0.6, 1.0, 2.0};  // H^s growth exponents
  double conservation_tol = 1e-9;               // verdict threshold for drifts
};

struct SweepConfig {
  std::vector<double> eps_values;          // descending, each in (0,1)
  std::optional<double> synthetic_c;       // bypass simulation when set
};

struct ExperimentSpec {
  std::string name = "experiment";
  Preset preset;
  SimConfig sim;        // sim.initial is filled from the preset at run time
  AnalysisConfig analysis;
  std::optional<SweepConfig> sweep;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct Verdict {
  bool pass = false;
  double slack = 0.0;
  std::string note;
};

struct ExperimentResult {
  ExperimentSpec spec;
  long long steps = 0;
  int samples = 0;
  double final_time = 0.0;
  double final_l2 = 0.0;
  double final_wiener = 0.0;
  double isospectral = 0.0;
  ConservationReport conservation;
  HankelReport hankel_initial;
  HankelReport hankel_final;
  PersistenceResult persistence;
  std::map<std::string, Verdict> verdicts;
  Trajectory trajectory;

  bool all_pass() const;
};

/// Runs the simulation and every enabled check. Analysis errors are recorded
/// in the verdicts (as failures, with the message) instead of aborting the
/// run. Deterministic: identical specs give identical results.
ExperimentResult run_experiment(const ExperimentSpec& spec);

struct SweepRow {
  double eps = 0.0;
  double t_eval = 0.0;                 // pi / eps
  std::optional<double> rho_hat;       // nullopt = undetermined, excluded
};

struct SweepResult {
  std::vector<SweepRow> rows;
  double exponent = 0.0;  // least-squares slope of log rho_hat vs log eps
  int valid_rows = 0;
};

/// For each eps, integrates u0 = e^{i theta} + eps to t = pi/eps (dt scaled
/// proportionally to eps, snapped to divide the horizon) and estimates the
/// radius there; fits log rho_hat against log eps. With synthetic_c set, the
/// coefficient profiles u_hat(k) = e^{-c eps^2 k} are fed to the estimator
/// directly, which must recover exponent 2 to regression accuracy.
/// Requires >= 3 eps values and a template t_end reaching pi/min(eps).
/// jobs > 1 evaluates entries concurrently; rows are returned in input order.
SweepResult epsilon_sweep(const std::vector<double>& eps_values,
                          const ExperimentSpec& tmpl,
                          std::optional<double> synthetic_c = std::nullopt,
                          int jobs = 1);

struct BoundsRow {
  double t = 0.0;
  std::optional<double> rho_hat;
  double tau = 0.0;
  double tau_tilde = 0.0;
  bool flagged = false;  // rho_hat determined and below tau - 0.05 sigma
};

/// The three curves rho_hat(t), tau(t), tau~(t) side by side. Samples where
/// the heuristic estimator drops below the theorem curve are flagged, not
/// failed.
std::vector<BoundsRow> compare_bounds(const ExperimentResult& result);

}  // namespace szego
