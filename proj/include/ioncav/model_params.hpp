#pragma once

#include <cmath>
#include <vector>

#include "ioncav/types.hpp"

namespace ioncav {

/// Reference values of the calcium ion-cavity setup (2pi MHz).
namespace table1 {
inline constexpr double kOmega = 9.0;
inline const double kG = 6.5 / std::sqrt(3.0);  // Clebsch-Gordan reduced
inline constexpr double kGammaS = 22.3;
inline constexpr double kGammaD = 1.7;
inline constexpr double kDelta0 = 20.0;
inline constexpr double kKappa0 = 1.2;
}  // namespace table1

/// Physical parameters of N three-level ions in a lossy cavity. All
/// frequencies are 2pi MHz numbers; time is in microseconds.
struct ModelParams {
    double omega_rabi = table1::kOmega;   // laser coupling Omega
    double g_cavity = table1::kG;         // bare cavity coupling g
    double gamma_S = table1::kGammaS;     // P -> S decay
    double gamma_D = table1::kGammaD;     // P -> D decay
    double delta_raman = table1::kDelta0; // one-photon detuning Delta
    double kappa = table1::kKappa0;       // cavity field damping

    /// Per-ion placement coefficients beta^(j) = e^{i k_L x} sin(k_C x).
    std::vector<cplx> beta{1.0, 1.0};
    /// Per-ion laser detunings delta_L^(j).
    std::vector<double> delta_laser{0.0, 0.0};
    /// Optional per-ion |Omega^(j)|; empty means every ion sees omega_rabi.
    std::vector<double> omega_per_ion;

    int n_ions() const { return static_cast<int>(beta.size()); }
    double omega(int j) const;

    /// Set every ion's laser detuning to the same value.
    void set_shared_laser_detuning(double delta_l);
    /// True when all ions share one laser detuning and one Omega.
    bool single_laser() const;

    /// Throws ValidationError when an invariant is violated.
    void validate() const;

    /// Table I values with Delta = delta_factor * Delta0 and
    /// kappa = kappa_factor * kappa0, beta = (1, 1), delta_L = 0.
    static ModelParams table_one(double delta_factor = 1.0, double kappa_factor = 1.0);
};

}  // namespace ioncav
