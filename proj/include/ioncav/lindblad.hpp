#pragma once

#include <functional>
#include <vector>

#include "ioncav/channel.hpp"
#include "ioncav/density_matrix.hpp"
#include "ioncav/time_series.hpp"

namespace ioncav {

/// d rho/dt = 2pi [ -i [H, rho] + sum_m rate_m D[C_m] rho ].
struct LindbladSystem {
    LinearOp hamiltonian;
    std::vector<JumpChannel> channels;

    const HilbertSpace& space() const { return hamiltonian.space; }

    /// Hermitian H, shared space, nonnegative finite rates.
    void validate() const;

    /// Column-major vectorized generator (angular units, per microsecond).
    Matrix superoperator() const;

    /// Applies the generator to rho directly.
    Matrix apply(const Matrix& rho) const;

    /// 2pi (max row sum of |H| + sum of rates); sets the default step.
    double max_rate() const;

    /// H - (i/2) sum_m rate_m C_m^+ C_m.
    Matrix mc_hamiltonian() const;
};

/// Generator whose Hamiltonian and channels depend on time.
struct TimeDependentSystem {
    HilbertSpace space;
    std::function<LindbladSystem(double)> at;
    /// Bound for max_rate over the run; 0 evaluates it at the grid start.
    double max_rate = 0;
};

struct LindbladOptions {
    double step = 0;              // 0 picks the default step
    bool snapshots = true;
    bool check_positivity = true;
    double fock_guard = 1e-6;     // largest admissible population in the top Fock layer
};

struct LindbladResult {
    TimeSeriesTable table;        // trace, purity, pop_<label>
    std::vector<DensityMatrix> snapshots;
};

/// min(0.002 / max_rate, spacing / 10).
double default_step(double max_rate, double spacing);

/// Fixed-step fourth-order integration. rho0 is the state at t_grid[0].
LindbladResult integrate_lindblad(const LindbladSystem& system, const DensityMatrix& rho0,
                                  const std::vector<double>& t_grid, const LindbladOptions& options = {});
LindbladResult integrate_lindblad(const TimeDependentSystem& system, const DensityMatrix& rho0,
                                  const std::vector<double>& t_grid, const LindbladOptions& options = {});

}  // namespace ioncav
