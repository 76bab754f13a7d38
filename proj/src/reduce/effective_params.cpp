#include "ioncav/reduce.hpp"

#include <algorithm>
#include <cmath>

namespace ioncav {

double EffectiveParams::alpha_total() const
{
    double s = 0;
    for (const cplx& a : alpha_eff) s += std::norm(a);
    return std::sqrt(s);
}

dicke::DickeParams EffectiveParams::dicke() const
{
    if (alpha_eff.size() != 2) throw ValidationError("Dicke mapping needs exactly two ions");
    if (std::abs(delta_eff[0] - delta_eff[1]) > 1e-12) {
        throw ValidationError("Dicke mapping needs both ions at the same effective detuning");
    }
    dicke::DickeParams d;
    d.alpha_total = alpha_total();
    if (d.alpha_total > 0) {
        d.r1 = alpha_eff[0] / d.alpha_total;
        d.r2 = alpha_eff[1] / d.alpha_total;
    } else {
        d.r1 = 1.0;
        d.r2 = 0.0;
    }
    d.delta = delta_eff[0];
    d.kappa = kappa;
    return d;
}

std::vector<cplx> beta_from_positions(double k_L, double k_C, const std::vector<double>& x)
{
    if (!(k_L > 0) || !(k_C > 0)) throw ValidationError("wavenumbers must be positive");
    std::vector<cplx> out;
    out.reserve(x.size());
    for (double xj : x) out.push_back(std::exp(kI * (k_L * xj)) * std::sin(k_C * xj));
    return out;
}

std::vector<cplx> beta_from_target_r1(double r1)
{
    if (!(r1 >= 0.0 && r1 <= 1.0)) throw ValidationError("target r1 must lie in [0, 1]");
    const double other = std::sqrt(std::max(0.0, 1.0 - r1 * r1));
    if (r1 <= other) return {r1 / other, 1.0};
    return {1.0, other / r1};
}

double xi_factor(double delta_raman, double gamma_S, double gamma_D)
{
    if (!(delta_raman > 0)) throw ValidationError("Delta must be > 0");
    const double g = gamma_S + gamma_D;
    return delta_raman * delta_raman / (delta_raman * delta_raman + g * g / 4.0);
}

EffectiveParams reduce(const ModelParams& p, double nu)
{
    p.validate();
    const int n = p.n_ions();
    const double delta = p.delta_raman;
    EffectiveParams e;
    e.xi = xi_factor(delta, p.gamma_S, p.gamma_D);
    e.kappa = p.kappa;
    e.nu = nu;
    e.g_eff = -e.xi * std::conj(cplx(p.g_cavity)) * p.omega_rabi / delta;

    double beta2 = 0;
    double strongest = 0;
    for (int j = 0; j < n; ++j) {
        beta2 += std::norm(p.beta[j]);
        strongest = std::max({strongest, p.omega(j), std::abs(p.beta[j] * p.g_cavity)});
    }
    e.beta_T = std::sqrt(beta2);
    e.validity_ratio = strongest / delta;
    e.stark_cavity = -e.xi * beta2 * p.g_cavity * p.g_cavity / delta;
    e.mu = (e.stark_cavity + nu) / 3.0;
    e.omega_C_eff = 2.0 * e.stark_cavity / 3.0 + 2.0 * nu / 3.0;

    const DecayRates rates = decay_rates(p);
    e.Gamma_S = rates.Gamma_S;
    e.Gamma_D = rates.Gamma_D;
    for (int j = 0; j < n; ++j) {
        const double om = p.omega(j);
        const cplx alpha = -e.xi * p.beta[j] * std::conj(cplx(p.g_cavity)) * om / delta;
        const double stark = -e.xi * om * om / delta;
        const double omega_a = p.delta_laser[j] + stark - e.stark_cavity / 3.0 + 2.0 * nu / 3.0;
        e.alpha_eff.push_back(alpha);
        e.lambda.push_back(alpha);
        e.stark_ion.push_back(stark);
        e.omega_A_eff.push_back(omega_a);
        e.delta_eff.push_back(omega_a - e.omega_C_eff);
    }
    return e;
}

double resonant_laser_detuning(const ModelParams& p)
{
    ModelParams q = p;
    q.set_shared_laser_detuning(0.0);
    if (!q.single_laser()) throw ValidationError("resonant laser detuning needs one Omega for all ions");
    const EffectiveParams e = reduce(q);
    return e.stark_cavity - e.stark_ion[0];
}

DecayRates decay_rates(const ModelParams& p)
{
    p.validate();
    const double xi = xi_factor(p.delta_raman, p.gamma_S, p.gamma_D);
    const double d2 = p.delta_raman * p.delta_raman;
    DecayRates r;
    for (int j = 0; j < p.n_ions(); ++j) {
        const double om = p.omega(j);
        const double strength = xi * (om * om + std::norm(p.beta[j] * p.g_cavity)) / d2;
        r.Gamma_S.push_back(strength * p.gamma_S);
        r.Gamma_D.push_back(strength * p.gamma_D);
    }
    return r;
}

double decay_vs_coupling(const ModelParams& p, int j)
{
    if (j < 1 || j > p.n_ions()) throw ValidationError("ion index out of range");
    const double om = p.omega(j - 1);
    const double x = om == 0.0 ? 0.0 : std::abs(p.beta[j - 1] * p.g_cavity) / om;
    if (x == 0.0) throw ValidationError("decay_vs_coupling needs Omega != 0 and beta g != 0");
    return (1.0 + x * x) / x * p.gamma_S / p.delta_raman;
}

}  // namespace ioncav
