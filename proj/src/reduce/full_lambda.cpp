#include <cmath>
#include <string>

#include "ioncav/reduce.hpp"

namespace ioncav {

FullLambdaModel build_full_lambda(const ModelParams& p, int n_max)
{
    p.validate();
    const HilbertSpace space = HilbertSpace::full_lambda(n_max, p.n_ions());
    const ProductBuilder pb(space);
    const Matrix a = pb.a();
    Matrix h = Matrix::Zero(space.product_dim(), space.product_dim());
    std::vector<JumpChannel> channels;
    channels.push_back({"a", p.kappa, pb.restrict(a)});
    for (int j = 1; j <= p.n_ions(); ++j) {
        const cplx beta = p.beta[j - 1];
        const double om = p.omega(j - 1);
        // Cavity strength |beta| g on P-D; the placement phase rides on the laser.
        const cplx g_c = std::abs(beta) * p.g_cavity;
        const cplx g_l = std::abs(beta) > 0 ? om * beta / std::abs(beta) : cplx(om);
        const Matrix a_pp = pb.transition(j, level::P, level::P);
        const Matrix a_ss = pb.transition(j, level::S, level::S);
        const Matrix a_ps = pb.transition(j, level::P, level::S);
        const Matrix a_pd = pb.transition(j, level::P, level::D);
        const Matrix cav = g_c * a * a_pd;
        const Matrix las = g_l * a_ps;
        h += p.delta_raman * a_pp + p.delta_laser[j - 1] * a_ss + las + Matrix(las.adjoint()) + cav +
             Matrix(cav.adjoint());
        channels.push_back({"SP" + std::to_string(j), p.gamma_S, pb.restrict(pb.transition(j, level::S, level::P))});
        channels.push_back({"DP" + std::to_string(j), p.gamma_D, pb.restrict(pb.transition(j, level::D, level::P))});
    }
    return {pb.restrict(h), std::move(channels)};
}

}  // namespace ioncav
