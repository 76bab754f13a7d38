#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ioncav/lindblad.hpp"

namespace ioncav {

struct McwfOptions {
    double p_max = 0.01;   // cap on the total jump probability of one substep
    int max_depth = 24;    // halvings allowed below the base substep
    int workers = 0;       // 0 = worker_count()
};

struct JumpEvent {
    std::size_t trajectory = 0;
    double time = 0;          // end of the substep in which the jump fired
    std::size_t interval = 0; // output index k with t_{k-1} < time <= t_k
    int channel = 0;
};

struct TrajectoryEnsemble {
    HilbertSpace space;
    std::vector<double> t;
    std::uint64_t master_seed = 0;
    std::vector<std::string> channel_labels;
    std::vector<std::vector<Vector>> states;   // [trajectory][time index], unit norm
    std::vector<JumpEvent> jumps;              // sorted by trajectory, then time

    std::size_t n_traj() const { return states.size(); }
};

/// First-order quantum-jump unraveling of a time-independent system.
/// Trajectory i draws from Philox stream i under master_seed, so results do
/// not depend on the worker count.
TrajectoryEnsemble run_mcwf(const LindbladSystem& system, const Vector& psi0, const std::vector<double>& t_grid,
                            std::size_t n_traj, std::uint64_t master_seed, const McwfOptions& options = {});

/// Mean density matrix at one grid time.
DensityMatrix ensemble_average(const TrajectoryEnsemble& ensemble, std::size_t time_index);

/// Two-ion atomic observables of the averaged state (cavity traced out) with
/// "_se" columns. The concurrence error projects each trajectory's
/// rho_01,10 onto the phase of the mean.
TimeSeriesTable ensemble_reduce(const TrajectoryEnsemble& ensemble);

struct JumpStatistics {
    std::vector<double> t;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> mean;   // [channel][time] cumulative count per trajectory
    std::vector<std::vector<double>> se;

    TimeSeriesTable table() const;   // jumps_<label>, jumps_<label>_se
};

JumpStatistics jump_statistics(const TrajectoryEnsemble& ensemble);

}  // namespace ioncav
