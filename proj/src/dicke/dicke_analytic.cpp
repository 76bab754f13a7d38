#include "ioncav/dicke.hpp"

#include <cmath>

namespace ioncav::dicke {

namespace {

// sin(w t / 2) / w with its removable singularity at w = 0.
cplx sinc_half(cplx w, double t)
{
    if (std::abs(w * t) < 1e-6) return t / 2.0;
    return std::sin(w * t / 2.0) / w;
}

}  // namespace

DickeParams DickeParams::from_real_r1(double alpha_total, double r1, double delta, double kappa)
{
    if (!(r1 >= 0.0 && r1 <= 1.0)) throw ValidationError("r1 must lie in [0, 1]");
    DickeParams p;
    p.alpha_total = alpha_total;
    p.r1 = r1;
    p.r2 = std::sqrt(std::max(0.0, 1.0 - r1 * r1));
    p.delta = delta;
    p.kappa = kappa;
    return p;
}

void DickeParams::validate() const
{
    if (!std::isfinite(alpha_total) || alpha_total < 0) throw ValidationError("alpha_total must be finite and >= 0");
    if (!std::isfinite(delta)) throw ValidationError("delta must be finite");
    if (!std::isfinite(kappa) || kappa < 0) throw ValidationError("kappa must be finite and >= 0");
    const double n = std::norm(r1) + std::norm(r2);
    if (std::abs(n - 1.0) > 1e-12) throw ValidationError("relative couplings must satisfy |r1|^2 + |r2|^2 = 1");
}

double vacuum_rabi(double alpha_total, double delta)
{
    return std::sqrt(4.0 * alpha_total * alpha_total + delta * delta);
}

cplx generalized_rabi(double chi_total_w, double delta, double kappa, Branch branch)
{
    const cplx arg(4.0 * chi_total_w * chi_total_w + delta * delta - kappa * kappa / 4.0, delta * kappa);
    const cplx w = std::sqrt(arg);
    return branch == Branch::Principal ? w : -w;
}

cplx envelope(double t, const DickeParams& p, Branch branch)
{
    const double tau = kTwoPi * t;
    const cplx w = generalized_rabi(p.alpha_total, p.delta, p.kappa, branch);
    const cplx k(p.kappa, -2.0 * p.delta);
    if (std::abs(w * tau) < 1.0) {
        return std::exp(-k * tau / 4.0) * (std::cos(w * tau / 2.0) + k / 2.0 * sinc_half(w, tau));
    }
    // Expanded into the two normal modes so that neither factor overflows at long times.
    const cplx c = k / (2.0 * kI * w);
    return 0.5 * ((1.0 + c) * std::exp((-k / 4.0 + kI * w / 2.0) * tau) +
                  (1.0 - c) * std::exp((-k / 4.0 - kI * w / 2.0) * tau));
}

cplx envelope_lossless(double t, double alpha_total, double delta)
{
    const double tau = kTwoPi * t;
    const double w = vacuum_rabi(alpha_total, delta);
    return std::exp(kI * delta * tau / 2.0) * (std::cos(w * tau / 2.0) - kI * delta * sinc_half(w, tau));
}

AmplitudePair evolve_amplitudes(double t, const AmplitudePair& c0, const DickeParams& p)
{
    const cplx e = envelope(t, p);
    const double a1 = std::norm(p.r1);
    const double a2 = std::norm(p.r2);
    AmplitudePair out;
    out.c10 = (a2 + a1 * e) * c0.c10 + std::conj(p.r1) * p.r2 * (e - 1.0) * c0.c01;
    out.c01 = (a1 + a2 * e) * c0.c01 + p.r1 * std::conj(p.r2) * (e - 1.0) * c0.c10;
    return out;
}

std::pair<cplx, cplx> sub_super_decompose(const AmplitudePair& c0, cplx r1, cplx r2)
{
    const cplx plus = r1 * c0.c10 + r2 * c0.c01;
    const cplx minus = std::conj(r2) * c0.c10 - std::conj(r1) * c0.c01;
    return {plus, minus};
}

AmplitudePair reconstruct(cplx beta_plus, cplx beta_minus, cplx r1, cplx r2)
{
    return {beta_plus * std::conj(r1) + beta_minus * r2, beta_plus * std::conj(r2) - beta_minus * r1};
}

double stationary_concurrence(const AmplitudePair& c0, cplx r1, cplx r2)
{
    const cplx minus = sub_super_decompose(c0, r1, r2).second;
    return 2.0 * std::abs(r1 * r2) * std::norm(minus);
}

double concurrence(const AmplitudePair& c)
{
    return 2.0 * std::abs(c.c10 * std::conj(c.c01));
}

}  // namespace ioncav::dicke
