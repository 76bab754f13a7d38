#include <doctest.h>

#include "ioncav/dicke.hpp"
#include "oracles.hpp"

using namespace ioncav;
using namespace ioncav::dicke;

namespace {

// Single-excitation amplitudes (c10, c01, photon) under the non-Hermitian
// Hamiltonian of two ions coupled to a leaky mode, in the frame of the ions.
AmplitudePair amplitudes_oracle(double t, const AmplitudePair& c0, const DickeParams& p)
{
    const cplx a1 = p.alpha_total * p.r1;
    const cplx a2 = p.alpha_total * p.r2;
    Matrix h = Matrix::Zero(3, 3);
    h(2, 2) = cplx(-p.delta, -p.kappa / 2.0);
    h(2, 0) = a1;
    h(0, 2) = std::conj(a1);
    h(2, 1) = a2;
    h(1, 2) = std::conj(a2);
    Vector v(3);
    v << c0.c10, c0.c01, 0.0;
    const Vector out = (Matrix(-kI * kTwoPi * t * h)).exp() * v;
    return {out(0), out(1)};
}

DickeParams random_params(std::mt19937_64& gen)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    DickeParams p;
    p.alpha_total = 0.05 + u(gen);
    const double r1 = u(gen);
    const double ph1 = kTwoPi * u(gen), ph2 = kTwoPi * u(gen);
    p.r1 = std::polar(r1, ph1);
    p.r2 = std::polar(std::sqrt(1.0 - r1 * r1), ph2);
    p.delta = 2.0 * u(gen) - 1.0;
    p.kappa = 0.05 + 2.0 * u(gen);
    return p;
}

}  // namespace

TEST_CASE("vacuum and generalized Rabi frequencies")
{
    CHECK(vacuum_rabi(0.5, 0.0) == doctest::Approx(1.0));
    CHECK(vacuum_rabi(1.5, 4.0) == doctest::Approx(5.0));
    const cplx w = generalized_rabi(1.5, 4.0, 0.0);
    CHECK(w.real() == doctest::Approx(5.0));
    CHECK(std::abs(w.imag()) < 1e-15);
    // overdamped: 4 a^2 < kappa^2 / 4 with delta = 0 gives a purely imaginary frequency
    const cplx od = generalized_rabi(0.1, 0.0, 1.0);
    CHECK(std::abs(od.real()) < 1e-15);
    CHECK(std::abs(od.imag()) == doctest::Approx(std::sqrt(0.25 - 0.04)));
    CHECK(generalized_rabi(0.3, 0.2, 0.4, Branch::Negated) == -generalized_rabi(0.3, 0.2, 0.4));
}

TEST_CASE("envelope does not depend on the square-root branch")
{
    std::mt19937_64 gen(3);
    for (int i = 0; i < 50; ++i) {
        const DickeParams p = random_params(gen);
        for (double t : {0.0, 0.3, 1.7, 9.0}) {
            CHECK(std::abs(envelope(t, p) - envelope(t, p, Branch::Negated)) < 1e-12);
        }
    }
}

TEST_CASE("envelope at the critical point uses the removable singularity")
{
    // 4 a^2 = kappa^2 / 4, delta = 0: Omega_g = 0 and E = exp(-kappa tau / 4)(1 + kappa tau / 4)
    DickeParams p = DickeParams::from_real_r1(0.25, 0.6, 0.0, 1.0);
    for (double t : {0.1, 1.0, 3.0}) {
        const double x = kTwoPi * t / 4.0;
        CHECK(std::abs(envelope(t, p) - std::exp(-x) * (1.0 + x)) < 1e-6);
    }
}

TEST_CASE("lossless limit")
{
    std::mt19937_64 gen(5);
    for (int i = 0; i < 20; ++i) {
        DickeParams p = random_params(gen);
        p.kappa = 0.0;
        for (double t : {0.2, 1.1, 4.0}) {
            CHECK(std::abs(envelope(t, p) - envelope_lossless(t, p.alpha_total, p.delta)) < 1e-12);
            p.kappa = 1e-9;
            CHECK(std::abs(envelope(t, p) - envelope_lossless(t, p.alpha_total, p.delta)) < 1e-7);
            p.kappa = 0.0;
        }
    }
}

TEST_CASE("closed-form amplitudes match the non-Hermitian propagator")
{
    std::mt19937_64 gen(9);
    for (int i = 0; i < 50; ++i) {
        const DickeParams p = random_params(gen);
        const AmplitudePair c0{oracle::random_state(2, gen)(0), 0.0};
        AmplitudePair start = c0;
        start.c01 = std::sqrt(1.0 - std::norm(c0.c10));
        for (double t : {0.0, 0.4, 2.0, 7.5}) {
            const AmplitudePair a = evolve_amplitudes(t, start, p);
            const AmplitudePair b = amplitudes_oracle(t, start, p);
            CHECK(std::abs(a.c10 - b.c10) < 1e-10);
            CHECK(std::abs(a.c01 - b.c01) < 1e-10);
        }
    }
}

TEST_CASE("atomic norm stays below one and returns after a lossless period")
{
    std::mt19937_64 gen(13);
    for (int i = 0; i < 20; ++i) {
        DickeParams p = random_params(gen);
        const AmplitudePair c0{0.6, cplx(0.0, 0.8)};
        for (int k = 1; k <= 40; ++k) CHECK(evolve_amplitudes(0.1 * k, c0, p).norm2() <= 1.0 + 1e-12);
        p.kappa = 0.0;
        const double period = 1.0 / vacuum_rabi(p.alpha_total, p.delta);
        CHECK(evolve_amplitudes(period, c0, p).norm2() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(evolve_amplitudes(0.5 * period, c0, p).norm2() < 1.0);
    }
}

TEST_CASE("subradiant state is stationary")
{
    std::mt19937_64 gen(17);
    for (int i = 0; i < 50; ++i) {
        const DickeParams p = random_params(gen);
        const AmplitudePair sub = reconstruct(0.0, 1.0, p.r1, p.r2);
        CHECK(sub.norm2() == doctest::Approx(1.0));
        for (double t : {0.5, 5.0, 50.0}) {
            const AmplitudePair s = evolve_amplitudes(t, sub, p);
            CHECK(std::abs(s.c10 - sub.c10) < 1e-12);
            CHECK(std::abs(s.c01 - sub.c01) < 1e-12);
        }
    }
}

TEST_CASE("decomposition round trip")
{
    std::mt19937_64 gen(19);
    for (int i = 0; i < 50; ++i) {
        const DickeParams p = random_params(gen);
        const Vector v = oracle::random_state(2, gen);
        const AmplitudePair c{v(0), v(1)};
        const auto [bp, bm] = sub_super_decompose(c, p.r1, p.r2);
        CHECK(std::norm(bp) + std::norm(bm) == doctest::Approx(1.0));
        const AmplitudePair back = reconstruct(bp, bm, p.r1, p.r2);
        CHECK(std::abs(back.c10 - c.c10) < 1e-13);
        CHECK(std::abs(back.c01 - c.c01) < 1e-13);
    }
}

TEST_CASE("long-time concurrence approaches the stationary value")
{
    std::mt19937_64 gen(23);
    for (int i = 0; i < 50; ++i) {
        const DickeParams p = random_params(gen);
        const Vector v = oracle::random_state(2, gen);
        const AmplitudePair c0{v(0), v(1)};
        // overdamped draws relax on 1 / (kappa / 4 - |Im Omega_g| / 2), far slower than 1 / kappa
        double t = 1.0;
        while (std::abs(envelope(t, p)) > 1e-11) t *= 2.0;
        const AmplitudePair late = evolve_amplitudes(t, c0, p);
        CHECK(concurrence(late) == doctest::Approx(stationary_concurrence(c0, p.r1, p.r2)).epsilon(1e-8));
    }
}

TEST_CASE("stationary concurrence from one excited ion")
{
    for (double r1 : {0.0, 0.2, 0.5, 0.55, 0.9, 1.0}) {
        const double r2 = std::sqrt(1.0 - r1 * r1);
        CHECK(stationary_concurrence({1.0, 0.0}, r1, r2) == doctest::Approx(2.0 * r1 * std::pow(r2, 3)));
    }
    CHECK(stationary_concurrence({1.0, 0.0}, 0.5, std::sqrt(0.75)) == doctest::Approx(0.649519).epsilon(1e-6));
}

TEST_CASE("parameter validation")
{
    DickeParams p = DickeParams::from_real_r1(1.0, 0.3, 0.0, 0.1);
    CHECK_NOTHROW(p.validate());
    p.r2 = 0.5;
    CHECK_THROWS_AS(p.validate(), ValidationError);
    CHECK_THROWS_AS(DickeParams::from_real_r1(1.0, 1.3, 0.0, 0.1), ValidationError);
    p = DickeParams::from_real_r1(1.0, 0.3, 0.0, -0.1);
    CHECK_THROWS_AS(p.validate(), ValidationError);
}

TEST_CASE("envelope stays finite deep in the overdamped regime")
{
    const DickeParams p = DickeParams::from_real_r1(0.05, 0.5, 0.3, 2.0);
    for (double t : {10.0, 1e3, 1e5}) {
        const cplx e = envelope(t, p);
        CHECK(std::isfinite(e.real()));
        CHECK(std::isfinite(e.imag()));
        CHECK(std::abs(e) <= 1.0);
    }
}
