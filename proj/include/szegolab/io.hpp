#pragma once
// Serialization: JSON documents and plot-ready CSV. Every floating-point
// value is written with 17 significant digits ("%.17g" equivalent via
// std::to_chars), which round-trips IEEE-754 doubles bit-exactly, and object
// keys are emitted in sorted order, so identical data produces identical
// bytes. JSON cannot carry NaN/Inf; non-finite doubles serialize as null.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "szegolab/experiments.hpp"

namespace szego::io {

using json = nlohmann::json;

std::string format_double(double x);

/// Deterministic compact dump: sorted keys, 17-significant-digit doubles.
std::string dump(const json& j);

json parse_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

// --- JSON (de)serialization -------------------------------------------------

json to_json(const HardySeries& u);               // {"coeffs": [[re, im], ...]}
HardySeries hardy_from_json(const json& j);

json to_json(const SimConfig& c);                 // without the initial series
json to_json(const Preset& p);
json to_json(const AnalysisConfig& a);
json to_json(const SweepConfig& s);
json to_json(const ExperimentSpec& spec);
ExperimentSpec experiment_spec_from_json(const json& j);

json to_json(const ConservationReport& r);
json to_json(const HankelReport& r);
json to_json(const RadiusBoundParams& p);
json to_json(const RadiusTrace& t);
json to_json(const PersistenceResult& p);
json to_json(const Trajectory& t);                // array of {t, coeffs}
json to_json(const SweepResult& s);
json to_json(const ExperimentResult& r);          // spec echo + summary + verdicts

// --- CSV ---------------------------------------------------------------------

std::string trajectory_csv(const Trajectory& t);          // t,k,re,im (long format)
std::string conservation_csv(const Trajectory& t);        // t,l2,momentum,hamiltonian
std::string radius_trace_csv(const RadiusTrace& t, double C0);
std::string singular_values_csv(const std::vector<double>& sv);  // i,sigma_i
std::string bounds_csv(const std::vector<BoundsRow>& rows);
std::string sweep_csv(const SweepResult& s);

/// Writes result.json plus companion CSVs into out_dir/<spec.name>/ and an
/// index.json listing the artifacts. Returns the experiment directory.
std::filesystem::path write_experiment(const ExperimentResult& result,
                                       const std::filesystem::path& out_dir);

}  // namespace szego::io
