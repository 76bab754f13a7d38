#pragma once

#include <utility>

#include "ioncav/types.hpp"

namespace ioncav::dicke {

/// Two-ion lossy Dicke model. Frequencies are 2pi MHz numbers, t in us.
struct DickeParams {
    double alpha_total = 0;   // |alpha_T| (or |chi_T| W)
    cplx r1{1.0, 0.0};        // relative coupling r^(1)
    cplx r2{0.0, 0.0};        // relative coupling r^(2)
    double delta = 0;         // detuning omega_A - omega_C
    double kappa = 0;         // cavity loss

    /// Real-positive parametrization r2 = sqrt(1 - r1^2).
    static DickeParams from_real_r1(double alpha_total, double r1, double delta, double kappa);
    /// |r1|^2 + |r2|^2 = 1 to 1e-12, alpha_total >= 0, kappa >= 0, finite.
    void validate() const;
};

/// Amplitudes on |1(1)0(2)> and |0(1)1(2)>.
struct AmplitudePair {
    cplx c10;
    cplx c01;
    double norm2() const { return std::norm(c10) + std::norm(c01); }
};

enum class Branch { Principal, Negated };

/// sqrt(4 alpha_T^2 + delta^2), nonnegative.
double vacuum_rabi(double alpha_total, double delta);

/// sqrt(4 |chi_T W|^2 + delta^2 + i delta kappa - kappa^2 / 4) on the chosen branch.
cplx generalized_rabi(double chi_total_w, double delta, double kappa, Branch branch = Branch::Principal);

/// Lossy envelope E(t); reduces to the lossless cosine form at kappa = 0.
cplx envelope(double t, const DickeParams& p, Branch branch = Branch::Principal);

/// Lossless envelope e^{i delta t/2} [cos(Omega_v t/2) - i delta/Omega_v sin(Omega_v t/2)].
cplx envelope_lossless(double t, double alpha_total, double delta);

AmplitudePair evolve_amplitudes(double t, const AmplitudePair& c0, const DickeParams& p);

/// Projections (beta_plus, beta_minus) onto the super- and subradiant states
/// psi_+ = r1* |10> + r2* |01>, psi_- = r2 |10> - r1 |01>.
std::pair<cplx, cplx> sub_super_decompose(const AmplitudePair& c0, cplx r1, cplx r2);
AmplitudePair reconstruct(cplx beta_plus, cplx beta_minus, cplx r1, cplx r2);

/// Long-time concurrence 2 |r1 r2| |beta_minus|^2.
double stationary_concurrence(const AmplitudePair& c0, cplx r1, cplx r2);

/// 2 |c10 c01*|.
double concurrence(const AmplitudePair& c);

}  // namespace ioncav::dicke
