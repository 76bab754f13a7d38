#include <cmath>
#include <string>

#include "ioncav/reduce.hpp"

namespace ioncav {

int single_excitation_index(const HilbertSpace& space, int j)
{
    if (space.kind() != SpaceKind::Restricted) throw ValidationError("needs a Restricted space");
    if (j < 1 || j > space.n_ions()) throw ValidationError("ion index out of range");
    for (int i = 0; i < space.dim(); ++i) {
        if (space.ion_level(i, j - 1) == 1) return i;
    }
    throw ValidationError("no single-excitation state for this ion");
}

int photon_index(const HilbertSpace& space)
{
    if (space.kind() != SpaceKind::Restricted) throw ValidationError("needs a Restricted space");
    for (int i = 0; i < space.dim(); ++i) {
        if (space.photon_number(i) == 1) return i;
    }
    throw ValidationError("no photon state in this space");
}

namespace {

// Phi_j = (e^{i phase} Omega |phi_j> + beta_j g* |photon>) / norm.
Vector dark_partner(const ModelParams& p, const HilbertSpace& space, int j, double laser_phase)
{
    const double om = p.omega(j - 1);
    const cplx cav = p.beta[j - 1] * std::conj(cplx(p.g_cavity));
    const double norm = std::sqrt(om * om + std::norm(cav));
    Vector phi = Vector::Zero(space.dim());
    const int ion = single_excitation_index(space, j);
    if (norm == 0.0) {
        phi(ion) = 1.0;
        return phi;
    }
    phi(ion) = std::exp(kI * laser_phase) * om / norm;
    phi(photon_index(space)) = cav / norm;
    return phi;
}

std::vector<JumpChannel> channels_with_phases(const ModelParams& p, const std::vector<double>& laser_phase)
{
    const HilbertSpace space = HilbertSpace::restricted(p.n_ions());
    const DecayRates rates = decay_rates(p);
    const int ground = 0;
    std::vector<JumpChannel> out;
    std::vector<JumpChannel> dissipative;
    for (int j = 1; j <= p.n_ions(); ++j) {
        const Vector phi = dark_partner(p, space, j, laser_phase[j - 1]);
        Matrix cs = Matrix::Zero(space.dim(), space.dim());
        cs.row(single_excitation_index(space, j)) = phi.adjoint();
        Matrix cd = Matrix::Zero(space.dim(), space.dim());
        cd.row(ground) = phi.adjoint();
        out.push_back({"CS" + std::to_string(j), rates.Gamma_S[j - 1], LinearOp(space, cs)});
        dissipative.push_back({"CD" + std::to_string(j), rates.Gamma_D[j - 1], LinearOp(space, cd)});
    }
    out.insert(out.end(), dissipative.begin(), dissipative.end());
    out.push_back({"a", p.kappa, build_operator(space, "a")});
    return out;
}

}  // namespace

std::vector<JumpChannel> build_jump_channels(const ModelParams& p)
{
    p.validate();
    return channels_with_phases(p, std::vector<double>(p.beta.size(), 0.0));
}

std::vector<JumpChannel> build_jump_channels_stark(const ModelParams& p, double t)
{
    p.validate();
    std::vector<double> phase;
    for (double d : p.delta_laser) phase.push_back(angular(d) * t);
    return channels_with_phases(p, phase);
}

std::vector<double> stark_to_rotated_phases(const ModelParams& p, double nu)
{
    const EffectiveParams e = reduce(p, nu);
    const HilbertSpace space = HilbertSpace::restricted(p.n_ions());
    std::vector<double> theta(space.dim(), e.mu);
    theta[photon_index(space)] = nu;
    for (int j = 1; j <= p.n_ions(); ++j) theta[single_excitation_index(space, j)] = p.delta_laser[j - 1] + nu;
    return theta;
}

LinearOp build_effective_hamiltonian(const ModelParams& p, const FrameSpec& frame)
{
    const HilbertSpace space = HilbertSpace::restricted(p.n_ions());
    if (frame.kind == FrameSpec::Kind::Rotated) {
        const EffectiveParams e = reduce(p, frame.nu);
        return tavis_cummings_hamiltonian(space, e.omega_C_eff, e.omega_A_eff, e.alpha_eff);
    }
    const EffectiveParams e = reduce(p, 0.0);
    Matrix h = Matrix::Zero(space.dim(), space.dim());
    const int ph = photon_index(space);
    h(ph, ph) = e.stark_cavity;
    for (int j = 1; j <= p.n_ions(); ++j) {
        const int ion = single_excitation_index(space, j);
        h(ion, ion) = e.stark_ion[j - 1];
        const cplx c = e.lambda[j - 1] * std::exp(-kI * angular(p.delta_laser[j - 1]) * frame.t);
        h(ph, ion) = c;
        h(ion, ph) = std::conj(c);
    }
    return {space, h};
}

LinearOp mc_hamiltonian(const LinearOp& h, const std::vector<JumpChannel>& channels)
{
    Matrix m = h.matrix;
    for (const JumpChannel& c : channels) {
        if (!(c.op.space == h.space)) throw ValidationError("jump channel on a different space");
        m -= 0.5 * kI * c.rate * (c.op.matrix.adjoint() * c.op.matrix);
    }
    return {h.space, m};
}

LinearOp build_mc_hamiltonian(const ModelParams& p, bool emission)
{
    std::vector<JumpChannel> channels = build_jump_channels(p);
    if (!emission) channels.erase(channels.begin(), channels.end() - 1);
    return mc_hamiltonian(build_effective_hamiltonian(p, FrameSpec::rotated(0.0)), channels);
}

}  // namespace ioncav
