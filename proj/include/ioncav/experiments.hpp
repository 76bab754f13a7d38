#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ioncav/mcwf.hpp"
#include "ioncav/reduce.hpp"

namespace ioncav {

enum class ModelKind { DickeIdeal, DickeLossy, EffectiveTwoLevel, FullThreeLevel };
enum class EngineKind { ClosedForm, Lindblad, MCWF };

std::string to_string(ModelKind m);
std::string to_string(EngineKind e);
ModelKind parse_model_kind(const std::string& s);
EngineKind parse_engine_kind(const std::string& s);

/// One simulation: a model, its parameters, an initial state and an engine.
/// Dicke models use the effective couplings of `params`; DickeIdeal drops
/// the cavity loss.
struct Scenario {
    std::string name = "run";
    ModelKind model = ModelKind::EffectiveTwoLevel;
    EngineKind engine = EngineKind::Lindblad;
    ModelParams params;
    /// "10", "01", "sub" or "super" (the last two relative to the effective r^(j)).
    std::string initial_state = "10";
    /// Overrides the laser detuning with the Stark-compensating value.
    bool resonant = false;
    /// Spontaneous-emission channels of the effective model.
    bool emission = true;
    double t_max = 10.0;
    int n_points = 400;
    std::size_t n_traj = 1000;
    std::uint64_t seed = 1;
    int n_max = 2;

    void validate() const;
    /// params with the resonance override applied.
    ModelParams resolved_params() const;
};

struct ScenarioResult {
    /// t_us, rho_00_00, rho_01_01, rho_10_10, rho_11_11, rho_01_10_re,
    /// rho_01_10_im, rho_01_10_abs, concurrence, trace (+ "_se" for MCWF).
    TimeSeriesTable table;
    std::optional<JumpStatistics> jumps;
    EffectiveParams effective;
    double t_rabi = 0;   // 1 / |Omega_g| of the effective Dicke parameters (us)
    std::vector<std::string> warnings;
};

ScenarioResult run_scenario(const Scenario& s);

/// Initial amplitudes (c10, c01) named by s.initial_state.
dicke::AmplitudePair initial_amplitudes(const Scenario& s);

enum class SweepAxis { R1, DeltaL, Delta, Kappa };
std::string to_string(SweepAxis a);
SweepAxis parse_sweep_axis(const std::string& s);

struct SweepSpec {
    SweepAxis axis = SweepAxis::R1;
    std::vector<double> grid;
    Scenario base;

    void validate() const;
    /// The base scenario at one grid value.
    Scenario at(double value) const;
};

struct SweepSummary {
    double value = 0;
    double peak_c = 0;
    double peak_c_se = 0;
    double peak_time = 0;
    double final_c = 0;
    double stationary_c = 0;   // closed-form long-time value for the point's couplings
    double delta_eff = 0;
    double early_exchange = 0; // rho_00,00 at t = 1 / (4 |alpha_T|), deterministic engine
};

struct SweepResult {
    SweepSpec spec;
    std::vector<ScenarioResult> runs;
    std::vector<SweepSummary> summary;

    std::size_t argmax_peak() const;
    std::size_t argmax_stationary() const;
    std::size_t argmax_early_exchange() const;
    TimeSeriesTable summary_table() const;
};

/// Default grids: r1 in {0.02k}, delta_L in 0..0.8 step 0.02.
std::vector<double> default_grid(SweepAxis a);

SweepResult sweep(const SweepSpec& spec);

/// |g_eff|, Gamma_S, kappa and 4 |beta_T g_eff| / kappa against Delta.
TimeSeriesTable scaling_report(const std::vector<double>& delta_grid, const ModelParams& base);
std::vector<double> log_grid(double lo, double hi, int n);
/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

enum class StateCharacter { SubradiantLike, IPhaseLike };
struct DispersiveCharacter {
    StateCharacter kind = StateCharacter::SubradiantLike;
    std::size_t peak_index = 0;
    double re = 0;
    double im = 0;
    double ratio = 0;   // |Im| / |Re| at the concurrence peak
};
/// Which quadrature of rho_01,10 dominates at the concurrence peak.
DispersiveCharacter dispersive_character(const TimeSeriesTable& series);
std::string to_string(StateCharacter c);

}  // namespace ioncav
