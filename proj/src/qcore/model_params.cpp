#include "ioncav/model_params.hpp"

#include <sstream>

namespace ioncav {

double ModelParams::omega(int j) const
{
    if (omega_per_ion.empty()) return omega_rabi;
    return omega_per_ion.at(static_cast<std::size_t>(j));
}

void ModelParams::set_shared_laser_detuning(double delta_l)
{
    delta_laser.assign(beta.size(), delta_l);
}

bool ModelParams::single_laser() const
{
    for (std::size_t j = 1; j < delta_laser.size(); ++j) {
        if (delta_laser[j] != delta_laser[0]) return false;
    }
    for (std::size_t j = 1; j < omega_per_ion.size(); ++j) {
        if (omega_per_ion[j] != omega_per_ion[0]) return false;
    }
    return omega_per_ion.empty() || omega_per_ion[0] == omega_rabi;
}

void ModelParams::validate() const
{
    auto fail = [](const std::string& what) { throw ValidationError("model parameters: " + what); };
    auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(omega_rabi) || omega_rabi < 0) fail("omega must be finite and >= 0");
    if (!finite(g_cavity) || g_cavity < 0) fail("g must be finite and >= 0");
    if (!finite(gamma_S) || gamma_S < 0) fail("gamma_S must be finite and >= 0");
    if (!finite(gamma_D) || gamma_D < 0) fail("gamma_D must be finite and >= 0");
    if (!finite(kappa) || kappa < 0) fail("kappa must be finite and >= 0");
    if (!finite(delta_raman) || delta_raman <= 0) fail("Delta must be finite and > 0");
    if (beta.empty()) fail("at least one ion is required");
    for (const cplx& b : beta) {
        if (!finite(b.real()) || !finite(b.imag())) fail("beta entries must be finite");
        if (std::abs(b) > 1.0 + 1e-12) fail("|beta| must not exceed 1");
    }
    if (delta_laser.size() != beta.size()) {
        std::ostringstream os;
        os << "delta_L has " << delta_laser.size() << " entries for " << beta.size() << " ions";
        fail(os.str());
    }
    for (double d : delta_laser) {
        if (!finite(d)) fail("delta_L entries must be finite");
    }
    if (!omega_per_ion.empty()) {
        if (omega_per_ion.size() != beta.size()) fail("per-ion omega needs one entry per ion");
        for (double o : omega_per_ion) {
            if (!finite(o) || o < 0) fail("per-ion omega entries must be finite and >= 0");
        }
    }
}

ModelParams ModelParams::table_one(double delta_factor, double kappa_factor)
{
    ModelParams p;
    p.delta_raman = delta_factor * table1::kDelta0;
    p.kappa = kappa_factor * table1::kKappa0;
    return p;
}

}  // namespace ioncav
