#include "ioncav/mcwf.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "ioncav/parallel.hpp"
#include "ioncav/rng.hpp"

namespace ioncav {

namespace {

// No-jump propagators exp(-i 2pi H_MC dt / 2^L) for one interval length.
struct Ladder {
    int base_level = 0;
    std::vector<Matrix> step;   // indexed by L - base_level
    std::vector<double> dt;
};

class Trajectory {
public:
    Trajectory(const LindbladSystem& sys, const std::vector<Matrix>& ops, const McwfOptions& opt,
               std::size_t index, std::uint64_t seed, std::vector<JumpEvent>& log)
        : sys_(sys), ops_(ops), opt_(opt), index_(index), rng_(seed, index), log_(log)
    {
    }

    void advance(Vector& psi, const Ladder& ladder, double t0, std::size_t interval)
    {
        interval_ = interval;
        substep(psi, ladder, 0, t0);
    }

private:
    void substep(Vector& psi, const Ladder& ladder, int depth, double t0)
    {
        const double dt = ladder.dt[depth];
        probs_.assign(ops_.size(), 0.0);
        double total = 0;
        for (std::size_t m = 0; m < ops_.size(); ++m) {
            const double rate = sys_.channels[m].rate;
            if (rate == 0.0) continue;
            probs_[m] = kTwoPi * rate * (ops_[m] * psi).squaredNorm() * dt;
            total += probs_[m];
        }
        if (total > opt_.p_max) {
            if (depth >= opt_.max_depth) {
                std::ostringstream os;
                os << "jump probability " << total << " per substep exceeds " << opt_.p_max << " after "
                   << opt_.max_depth << " refinements";
                throw NumericalError(os.str());
            }
            substep(psi, ladder, depth + 1, t0);
            substep(psi, ladder, depth + 1, t0 + ladder.dt[depth + 1]);
            return;
        }
        const double u = rng_.uniform();
        if (u < total) {
            const double v = rng_.uniform() * total;
            std::size_t pick = 0;
            double acc = 0;
            for (std::size_t m = 0; m < ops_.size(); ++m) {
                if (probs_[m] == 0.0) continue;
                pick = m;
                acc += probs_[m];
                if (v < acc) break;
            }
            psi = ops_[pick] * psi;
            psi /= psi.norm();
            log_.push_back({index_, t0 + dt, interval_, static_cast<int>(pick)});
            return;
        }
        psi = ladder.step[depth] * psi;
        const double n = psi.norm();
        if (!(n > 0) || !std::isfinite(n)) throw NumericalError("trajectory norm collapsed");
        psi /= n;
    }

    const LindbladSystem& sys_;
    const std::vector<Matrix>& ops_;
    const McwfOptions& opt_;
    std::size_t index_;
    rng::PhiloxStream rng_;
    std::vector<JumpEvent>& log_;
    std::vector<double> probs_;
    std::size_t interval_ = 0;
};

}  // namespace

TrajectoryEnsemble run_mcwf(const LindbladSystem& system, const Vector& psi0, const std::vector<double>& t_grid,
                            std::size_t n_traj, std::uint64_t master_seed, const McwfOptions& options)
{
    system.validate();
    if (t_grid.empty()) throw ValidationError("empty time grid");
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > t_grid[i - 1])) throw ValidationError("time grid is not strictly increasing");
    }
    if (n_traj == 0) throw ValidationError("need at least one trajectory");
    if (psi0.size() != system.space().dim()) throw ValidationError("initial state has the wrong dimension");
    if (std::abs(psi0.norm() - 1.0) > 1e-9) throw ValidationError("initial state must have unit norm");
    if (!(options.p_max > 0 && options.p_max < 1)) throw ValidationError("p_max must lie in (0, 1)");

    const Matrix h_mc = system.mc_hamiltonian();
    const double omega = kTwoPi * system.hamiltonian.matrix.cwiseAbs().rowwise().sum().maxCoeff();
    std::vector<Matrix> ops;
    for (const JumpChannel& c : system.channels) ops.push_back(c.op.matrix);

    // Base substep resolves the coherent dynamics (omega dt <= 0.05); the
    // ladder below it is used only when the jump cap demands it.
    // Spacings of a linear grid differ in the last bits; those share a ladder.
    std::vector<std::pair<double, Ladder>> ladders;
    std::vector<std::size_t> ladder_of(t_grid.size(), 0);
    for (std::size_t k = 1; k < t_grid.size(); ++k) {
        const double spacing = t_grid[k] - t_grid[k - 1];
        bool found = false;
        for (std::size_t q = 0; q < ladders.size() && !found; ++q) {
            if (std::abs(ladders[q].first - spacing) <= 1e-12 * spacing) {
                ladder_of[k] = q;
                found = true;
            }
        }
        if (found) continue;
        Ladder lad;
        while (lad.base_level < 20 && omega * spacing / std::ldexp(1.0, lad.base_level) > 0.05) ++lad.base_level;
        for (int d = 0; d <= options.max_depth; ++d) {
            const double dt = spacing / std::ldexp(1.0, lad.base_level + d);
            lad.dt.push_back(dt);
            lad.step.push_back(Matrix((-kI * kTwoPi * dt * h_mc).exp()));
        }
        ladder_of[k] = ladders.size();
        ladders.emplace_back(spacing, std::move(lad));
    }

    TrajectoryEnsemble out{system.space(), t_grid, master_seed, {}, {}, {}};
    for (const JumpChannel& c : system.channels) out.channel_labels.push_back(c.label);
    out.states.assign(n_traj, {});
    std::vector<std::vector<JumpEvent>> logs(n_traj);

    parallel_for(n_traj, [&](std::size_t i) {
        Trajectory traj(system, ops, options, i, master_seed, logs[i]);
        std::vector<Vector>& states = out.states[i];
        states.reserve(t_grid.size());
        Vector psi = psi0;
        states.push_back(psi);
        for (std::size_t k = 1; k < t_grid.size(); ++k) {
            const Ladder& lad = ladders[ladder_of[k]].second;
            const int base_steps = 1 << lad.base_level;
            for (int s = 0; s < base_steps; ++s) traj.advance(psi, lad, t_grid[k - 1] + s * lad.dt[0], k);
            states.push_back(psi);
        }
    }, options.workers);

    for (auto& l : logs) out.jumps.insert(out.jumps.end(), l.begin(), l.end());
    return out;
}

}  // namespace ioncav
