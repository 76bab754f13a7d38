#include <doctest.h>

#include "ioncav/lindblad.hpp"
#include "ioncav/reduce.hpp"
#include "oracles.hpp"

using namespace ioncav;

namespace {

ModelParams random_model(std::mt19937_64& gen)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ModelParams p = ModelParams::table_one(5.0 + 100.0 * u(gen), 0.05 + u(gen));
    p.beta = {std::polar(u(gen), kTwoPi * u(gen)), std::polar(u(gen), kTwoPi * u(gen))};
    p.set_shared_laser_detuning(u(gen) - 0.5);
    return p;
}

}  // namespace

TEST_CASE("beta from ion positions")
{
    const auto b = beta_from_positions(1.0, 1.0, {0.0, std::numbers::pi / 2.0});
    CHECK(std::abs(b[0]) < 1e-15);
    CHECK(std::abs(b[1] - std::exp(kI * std::numbers::pi / 2.0)) < 1e-15);
    const auto c = beta_from_positions(std::numbers::pi, std::numbers::pi / 6.0, {1.0});
    CHECK(std::abs(c[0] - cplx(-0.5, 0.0)) < 1e-15);
    CHECK_THROWS_AS(beta_from_positions(0.0, 1.0, {1.0}), ValidationError);
}

TEST_CASE("beta from target r1")
{
    auto b = beta_from_target_r1(1.0 / std::sqrt(2.0));
    CHECK(std::abs(b[0] - 1.0) < 1e-12);
    CHECK(std::abs(b[1] - 1.0) < 1e-12);
    b = beta_from_target_r1(0.55);
    CHECK(b[0].real() == doctest::Approx(0.55 / std::sqrt(1.0 - 0.55 * 0.55)));
    CHECK(b[0].real() == doctest::Approx(0.6586).epsilon(1e-4));
    CHECK(b[1].real() == 1.0);
    b = beta_from_target_r1(0.0);
    CHECK(b[0] == 0.0);
    CHECK(b[1] == 1.0);
    for (int k = 0; k <= 100; ++k) {
        const double r1 = 0.01 * k;
        b = beta_from_target_r1(r1);
        const double bt = std::sqrt(std::norm(b[0]) + std::norm(b[1]));
        CHECK(std::abs(b[0]) / bt == doctest::Approx(r1).epsilon(1e-12));
        CHECK(std::max(std::abs(b[0]), std::abs(b[1])) == 1.0);
    }
    CHECK_THROWS_AS(beta_from_target_r1(1.2), ValidationError);
}

TEST_CASE("xi factor")
{
    CHECK(xi_factor(20.0, 22.3, 1.7) == doctest::Approx(400.0 / 544.0));
    CHECK(xi_factor(20.0, 0.0, 0.0) == 1.0);
    CHECK(xi_factor(2000.0, 22.3, 1.7) == doctest::Approx(0.99996).epsilon(1e-5));
    CHECK_THROWS_AS(xi_factor(0.0, 1.0, 1.0), ValidationError);
}

TEST_CASE("effective coupling for the tabulated parameters")
{
    const EffectiveParams e100 = reduce(ModelParams::table_one(100.0, 0.1));
    CHECK(std::abs(e100.g_eff) == doctest::Approx(0.017).epsilon(0.02));
    const EffectiveParams e10 = reduce(ModelParams::table_one(10.0, 0.1));
    CHECK(std::abs(e10.g_eff) == doctest::Approx(0.170).epsilon(0.02));
    CHECK_FALSE(e100.validity_warning());
    CHECK(reduce(ModelParams::table_one()).validity_warning());
}

TEST_CASE("effective parameter invariants on random draws")
{
    std::mt19937_64 gen(29);
    for (int i = 0; i < 50; ++i) {
        const ModelParams p = random_model(gen);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        const double nu = u(gen);
        const EffectiveParams e = reduce(p, nu);
        CHECK(e.xi > 0.0);
        CHECK(e.xi <= 1.0);
        CHECK(e.mu == doctest::Approx((e.stark_cavity + nu) / 3.0));
        const double bt2 = std::norm(p.beta[0]) + std::norm(p.beta[1]);
        const double om = p.omega_rabi, g = p.g_cavity, d = p.delta_raman;
        for (int j = 0; j < 2; ++j) {
            CHECK(e.Gamma_S[j] / e.Gamma_D[j] == doctest::Approx(p.gamma_S / p.gamma_D).epsilon(1e-14));
            CHECK(std::abs(e.delta_eff[j] - (e.omega_A_eff[j] - e.omega_C_eff)) < 1e-12);
            const double expect = p.delta_laser[j] - e.xi * (om * om - bt2 * g * g) / d;
            CHECK(std::abs(e.delta_eff[j] - expect) < 1e-12);
            CHECK(std::abs(e.alpha_eff[j] - p.beta[j] * e.g_eff) < 1e-14);
            const double rate = e.xi * (om * om + std::norm(p.beta[j] * g)) / (d * d);
            CHECK(e.Gamma_S[j] == doctest::Approx(rate * p.gamma_S).epsilon(1e-12));
            CHECK(e.Gamma_D[j] == doctest::Approx(rate * p.gamma_D).epsilon(1e-12));
        }
    }
}

TEST_CASE("resonant laser detuning zeroes the effective detuning")
{
    std::mt19937_64 gen(31);
    for (int i = 0; i < 20; ++i) {
        ModelParams p = random_model(gen);
        p.set_shared_laser_detuning(resonant_laser_detuning(p));
        const EffectiveParams e = reduce(p);
        CHECK(std::abs(e.delta_eff[0]) < 1e-12);
        CHECK(std::abs(e.delta_eff[1]) < 1e-12);
    }
    // equal unit couplings at Delta = 10 Delta_0: xi (Omega^2 - 2 g^2) / Delta
    ModelParams q = ModelParams::table_one(10.0, 0.1);
    const double xi = xi_factor(200.0, 22.3, 1.7);
    const double expect = xi * (81.0 - 2.0 * 6.5 * 6.5 / 3.0) / 200.0;
    CHECK(resonant_laser_detuning(q) == doctest::Approx(expect));
    CHECK(resonant_laser_detuning(q) == doctest::Approx(0.263).epsilon(0.01));
}

TEST_CASE("no laser drive")
{
    ModelParams p = ModelParams::table_one(10.0, 0.1);
    p.omega_rabi = 0.0;
    p.beta = {0.5, 1.0};
    const EffectiveParams e = reduce(p);
    CHECK(std::abs(e.alpha_eff[0]) == 0.0);
    CHECK(std::abs(e.alpha_eff[1]) == 0.0);
    CHECK(e.Gamma_S[0] == doctest::Approx(e.xi * 0.25 * p.g_cavity * p.g_cavity * p.gamma_S / 40000.0));
    const auto ch = build_jump_channels(p);
    // the partner state is the photon state, so C_S(1) maps |001> to |100>
    Matrix expect = Matrix::Zero(4, 4);
    expect(3, 1) = 1.0;
    CHECK((ch[0].op.matrix - expect).norm() < 1e-14);
}

TEST_CASE("decay rates")
{
    ModelParams p = ModelParams::table_one();
    const DecayRates r = decay_rates(p);
    CHECK(r.Gamma_S[0] / r.Gamma_D[0] == doctest::Approx(22.3 / 1.7));
    p.beta = {0.0, 1.0};
    const double xi = xi_factor(p.delta_raman, p.gamma_S, p.gamma_D);
    CHECK(decay_rates(p).Gamma_S[0] == doctest::Approx(xi * 81.0 * 22.3 / 400.0));
    // ratio approaches 1/4 per doubling of Delta once xi ~ 1
    const double g1 = decay_rates(ModelParams::table_one(500.0)).Gamma_S[0];
    const double g2 = decay_rates(ModelParams::table_one(1000.0)).Gamma_S[0];
    CHECK(g2 / g1 == doctest::Approx(0.25).epsilon(1e-5));
}

TEST_CASE("decay against coupling ratio")
{
    ModelParams p = ModelParams::table_one();
    const double base = p.gamma_S / p.delta_raman;
    p.beta = {p.omega_rabi / p.g_cavity, 1.0};
    CHECK(decay_vs_coupling(p, 1) == doctest::Approx(2.0 * base));
    p.beta = {0.0, 1.0};
    p.omega_rabi = p.g_cavity / 2.0;   // |beta g / Omega| = 2 on ion 2
    CHECK(decay_vs_coupling(p, 2) == doctest::Approx(2.5 * base));
    CHECK_THROWS_AS(decay_vs_coupling(p, 1), ValidationError);
    // grid minimization over x = |beta g / Omega| in [0.1, 10]
    p = ModelParams::table_one();
    double best_x = 0, best = 1e300;
    for (int k = 0; k <= 2000; ++k) {
        const double x = std::pow(10.0, -1.0 + k * 0.001);
        p.beta = {x * p.omega_rabi / p.g_cavity, 0.0};
        if (std::abs(p.beta[0]) > 1.0) {
            p.g_cavity = x * p.omega_rabi;
            p.beta = {1.0, 0.0};
        }
        const double v = decay_vs_coupling(p, 1);
        if (v < best) {
            best = v;
            best_x = x;
        }
        p = ModelParams::table_one();
        CHECK(v >= 2.0 * base * (1.0 - 1e-12));
    }
    CHECK(best_x == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("jump channels")
{
    std::mt19937_64 gen(37);
    for (int i = 0; i < 30; ++i) {
        const ModelParams p = random_model(gen);
        const auto ch = build_jump_channels(p);
        REQUIRE(ch.size() == 5);
        CHECK(ch[0].label == "CS1");
        CHECK(ch[1].label == "CS2");
        CHECK(ch[2].label == "CD1");
        CHECK(ch[3].label == "CD2");
        CHECK(ch[4].label == "a");
        CHECK(ch[4].rate == p.kappa);
        const DecayRates r = decay_rates(p);
        for (int m = 0; m < 4; ++m) {
            CHECK(std::abs(ch[m].op.operator_norm() - 1.0) < 1e-12);
            Eigen::JacobiSVD<Matrix> svd(ch[m].op.matrix);
            CHECK(svd.singularValues()(1) < 1e-14);
        }
        CHECK(ch[0].rate == r.Gamma_S[0]);
        CHECK(ch[3].rate == r.Gamma_D[1]);
        // partner state of ion 1 built by hand; the Omega coefficient is real positive
        Vector phi = Vector::Zero(4);
        phi(3) = p.omega_rabi;
        phi(1) = p.beta[0] * p.g_cavity;
        phi /= phi.norm();
        Vector out = ch[0].op.matrix * phi;
        CHECK(std::abs(out(3) - 1.0) < 1e-12);
        CHECK(out.norm() == doctest::Approx(1.0));
        out = ch[2].op.matrix * phi;
        CHECK(std::abs(out(0) - 1.0) < 1e-12);
        CHECK(out.norm() == doctest::Approx(1.0));
    }
}

TEST_CASE("subradiant state is an eigenvector of the rotated Hamiltonian")
{
    std::mt19937_64 gen(41);
    for (int i = 0; i < 20; ++i) {
        const ModelParams p = random_model(gen);
        const EffectiveParams e = reduce(p);
        const LinearOp h = build_effective_hamiltonian(p);
        CHECK(h.is_hermitian());
        const cplx r1 = e.alpha_eff[0] / e.alpha_total(), r2 = e.alpha_eff[1] / e.alpha_total();
        Vector sub = Vector::Zero(4);
        sub(3) = r2;
        sub(2) = -r1;
        const Vector hv = h.matrix * sub;
        const cplx lambda = 0.5 * e.omega_C_eff + e.omega_A_eff[0];
        CHECK((hv - lambda * sub).norm() < 1e-12);
    }
}

TEST_CASE("Monte Carlo Hamiltonian")
{
    std::mt19937_64 gen(43);
    for (int i = 0; i < 20; ++i) {
        const ModelParams p = random_model(gen);
        const LinearOp hmc = build_mc_hamiltonian(p);
        const Matrix herm = 0.5 * (hmc.matrix + hmc.matrix.adjoint());
        const Matrix anti = (hmc.matrix - hmc.matrix.adjoint()) / (2.0 * kI);
        CHECK((herm - build_effective_hamiltonian(p).matrix).norm() < 1e-13);
        // -2 anti = sum of rate |Phi><Phi| over both emission kinds plus kappa |001><001|
        const DecayRates r = decay_rates(p);
        Matrix expect = Matrix::Zero(4, 4);
        for (int j = 0; j < 2; ++j) {
            Vector phi = Vector::Zero(4);
            phi(j == 0 ? 3 : 2) = p.omega_rabi;
            phi(1) = p.beta[j] * p.g_cavity;
            phi /= phi.norm();
            expect += (r.Gamma_S[j] + r.Gamma_D[j]) * phi * phi.adjoint();
        }
        expect(1, 1) += p.kappa;
        CHECK((-2.0 * anti - expect).norm() < 1e-12);
        Eigen::SelfAdjointEigenSolver<Matrix> es(anti);
        CHECK(es.eigenvalues().maxCoeff() < 1e-14);
        // short-time norm loss of Phi_1
        Vector phi1 = Vector::Zero(4);
        phi1(3) = p.omega_rabi;
        phi1(1) = p.beta[0] * p.g_cavity;
        phi1 /= phi1.norm();
        const double dt = 1e-7;
        const Vector psi = (Matrix(-kI * kTwoPi * dt * hmc.matrix)).exp() * phi1;
        const double rate = (1.0 - psi.squaredNorm()) / (kTwoPi * dt);
        const double expect_rate = (phi1.adjoint() * expect * phi1)(0).real();
        CHECK(rate == doctest::Approx(expect_rate).epsilon(1e-5));
    }
    ModelParams q = ModelParams::table_one(10.0, 0.0);
    q.gamma_S = 0.0;
    q.gamma_D = 0.0;
    const LinearOp h0 = build_mc_hamiltonian(q);
    CHECK(h0.is_hermitian());
    CHECK((h0.matrix - build_effective_hamiltonian(q).matrix).norm() < 1e-14);
}

TEST_CASE("rotated and Stark frames give the same observables")
{
    ModelParams p = ModelParams::table_one(10.0, 0.1);
    p.beta = beta_from_target_r1(0.46);
    p.set_shared_laser_detuning(0.4);
    const HilbertSpace sp = HilbertSpace::restricted();
    const LindbladSystem rotated{build_effective_hamiltonian(p), build_jump_channels(p)};
    const TimeDependentSystem stark{sp,
                                    [p](double t) {
                                        return LindbladSystem{build_effective_hamiltonian(p, FrameSpec::stark(t)),
                                                              build_jump_channels_stark(p, t)};
                                    },
                                    rotated.max_rate()};
    Vector psi = Vector::Zero(4);
    psi(3) = 1.0;
    const DensityMatrix rho0 = DensityMatrix::pure(sp, psi);
    const std::vector<double> t = linear_grid(0.0, 10.0, 51);
    LindbladOptions opt;
    opt.step = 2e-4;
    const LindbladResult a = integrate_lindblad(rotated, rho0, t, opt);
    const LindbladResult b = integrate_lindblad(stark, rho0, t, opt);
    const std::vector<double> theta = stark_to_rotated_phases(p);
    double worst = 0, worst_map = 0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        const Matrix& ra = a.snapshots[k].matrix();
        const Matrix& rb = b.snapshots[k].matrix();
        for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(ra(i, i) - rb(i, i)));
        worst = std::max(worst, std::abs(std::abs(ra(2, 3)) - std::abs(rb(2, 3))));
        // full state: rho_rot = U rho_stark U^dagger with U = diag(exp(-i 2 pi theta t))
        Vector u(4);
        for (int i = 0; i < 4; ++i) u(i) = std::exp(-kI * kTwoPi * theta[i] * t[k]);
        const Matrix mapped = u.asDiagonal() * rb * u.conjugate().asDiagonal();
        worst_map = std::max(worst_map, (mapped - ra).cwiseAbs().maxCoeff());
    }
    CHECK(worst < 1e-9);
    CHECK(worst_map < 1e-9);
}

TEST_CASE("full three-level model")
{
    ModelParams p = ModelParams::table_one(10.0, 0.1);
    p.beta = beta_from_target_r1(0.46);
    const FullLambdaModel m = build_full_lambda(p, 2);
    const HilbertSpace& sp = m.hamiltonian.space;
    CHECK(sp.dim() == 27);
    CHECK(m.hamiltonian.is_hermitian());
    REQUIRE(m.channels.size() == 5);
    CHECK(m.channels[0].label == "a");
    double gs = 0, gd = 0;
    for (const auto& c : m.channels) {
        if (c.label.rfind("SP", 0) == 0) gs += c.rate;
        if (c.label.rfind("DP", 0) == 0) gd += c.rate;
    }
    CHECK(gs == doctest::Approx(2.0 * p.gamma_S));
    CHECK(gd == doctest::Approx(2.0 * p.gamma_D));
    // <P D 0| H |S D 0> carries the laser coupling of ion 1, <D D 1| H |P D 0> the cavity coupling
    const int sd0 = sp.index_of("SD0"), pd0 = sp.index_of("PD0"), dd1 = sp.index_of("DD1");
    CHECK(std::abs(m.hamiltonian.matrix(pd0, sd0)) == doctest::Approx(p.omega_rabi));
    CHECK(std::abs(m.hamiltonian.matrix(dd1, pd0)) == doctest::Approx(std::abs(p.beta[0]) * p.g_cavity));
    CHECK(m.hamiltonian.matrix(pd0, pd0).real() == doctest::Approx(p.delta_raman));
}
