#pragma once

#include <vector>

#include "ioncav/channel.hpp"
#include "ioncav/dicke.hpp"
#include "ioncav/model_params.hpp"

namespace ioncav {

/// Effective two-level description obtained by eliminating the P level.
/// Per-ion vectors are indexed by ion j - 1.
struct EffectiveParams {
    double xi = 1;
    double beta_T = 0;                 // |beta_T|
    cplx g_eff;                        // alpha_eff^(j) = beta^(j) g_eff
    std::vector<cplx> alpha_eff;
    double omega_C_eff = 0;
    std::vector<double> omega_A_eff;
    std::vector<double> delta_eff;     // omega_A_eff^(j) - omega_C_eff
    std::vector<double> Gamma_S;
    std::vector<double> Gamma_D;
    double stark_cavity = 0;           // S^(C)
    std::vector<double> stark_ion;     // S^(j)
    std::vector<cplx> lambda;          // lambda^(j) = alpha_eff^(j)
    double nu = 0;
    double mu = 0;                     // (S^(C) + nu) / 3
    double kappa = 0;
    /// max(Omega, |beta g|) / Delta; above 0.1 the elimination is questionable.
    double validity_ratio = 0;

    bool validity_warning() const { return validity_ratio > 0.1; }
    double alpha_total() const;
    /// Collective Dicke parameters seen by ion pair (r^(j) = alpha_eff^(j) / |alpha_T|).
    /// Needs two ions sharing one detuning.
    dicke::DickeParams dicke() const;
};

/// e^{i k_L x} sin(k_C x) per ion.
std::vector<cplx> beta_from_positions(double k_L, double k_C, const std::vector<double>& x);

/// Real placement pair whose relative coupling r^(1) equals r1, larger entry 1.
std::vector<cplx> beta_from_target_r1(double r1);

double xi_factor(double delta_raman, double gamma_S, double gamma_D);

EffectiveParams reduce(const ModelParams& p, double nu = 0.0);

/// Shared laser detuning that cancels the Stark shifts (delta_eff = 0):
/// xi (Omega^2 - |beta_T g|^2) / Delta. Needs one Omega for all ions.
double resonant_laser_detuning(const ModelParams& p);

struct DecayRates {
    std::vector<double> Gamma_S;
    std::vector<double> Gamma_D;
};
DecayRates decay_rates(const ModelParams& p);

/// (1 + |beta g / Omega|^2) / |beta g / Omega| * gamma_S / Delta for ion j (1-based).
double decay_vs_coupling(const ModelParams& p, int j);

/// Emission channels CS<j>, CD<j> for every ion followed by the cavity channel "a".
std::vector<JumpChannel> build_jump_channels(const ModelParams& p);

/// Rotated: time-independent Tavis-Cummings form with the nu rotation.
/// StarkExplicit: Stark-shifted generator at time t with explicit laser phases.
struct FrameSpec {
    enum class Kind { Rotated, StarkExplicit };
    Kind kind = Kind::Rotated;
    double nu = 0;
    double t = 0;

    static FrameSpec rotated(double nu = 0.0) { return {Kind::Rotated, nu, 0.0}; }
    static FrameSpec stark(double t) { return {Kind::StarkExplicit, 0.0, t}; }
};

LinearOp build_effective_hamiltonian(const ModelParams& p, const FrameSpec& frame = FrameSpec::rotated());

/// Jump channels matching the StarkExplicit frame at time t.
std::vector<JumpChannel> build_jump_channels_stark(const ModelParams& p, double t);

/// Diagonal phases theta with psi_rotated = diag(e^{-i 2pi theta t}) psi_stark.
std::vector<double> stark_to_rotated_phases(const ModelParams& p, double nu = 0.0);

/// H - (i/2) sum_m rate_m C_m^+ C_m in the nu = 0 frame.
LinearOp build_mc_hamiltonian(const ModelParams& p, bool emission = true);
LinearOp mc_hamiltonian(const LinearOp& h, const std::vector<JumpChannel>& channels);

/// Three-level ions in a truncated cavity, laser detuning removed by a
/// diagonal rotation. Channels: "a" (kappa), "SP<j>" (gamma_S), "DP<j>" (gamma_D).
struct FullLambdaModel {
    LinearOp hamiltonian;
    std::vector<JumpChannel> channels;
};
FullLambdaModel build_full_lambda(const ModelParams& p, int n_max = 2);

/// Restricted-basis index of the state with only ion j (1-based) excited.
int single_excitation_index(const HilbertSpace& restricted, int j);
/// Restricted-basis index of the state with one photon and ground-state ions.
int photon_index(const HilbertSpace& restricted);

}  // namespace ioncav
