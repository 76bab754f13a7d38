#include <cmath>

#include "ioncav/mcwf.hpp"

namespace ioncav {

namespace {

double sample_se(const std::vector<double>& x, double mean)
{
    const std::size_t n = x.size();
    if (n < 2) return 0.0;
    double ss = 0;
    for (double v : x) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
}

// Atomic two-qubit matrix of a pure state of a Restricted space.
Matrix atomic_of(const HilbertSpace& space, const Vector& psi)
{
    const int f = space.fock_dim();
    Matrix rho = Matrix::Zero(4, 4);
    for (int c = 0; c < space.dim(); ++c) {
        const int pc = space.product_index(c);
        for (int r = 0; r < space.dim(); ++r) {
            const int pr = space.product_index(r);
            if (pr % f == pc % f) rho(pr / f, pc / f) += psi(r) * std::conj(psi(c));
        }
    }
    return rho;
}

}  // namespace

DensityMatrix ensemble_average(const TrajectoryEnsemble& ens, std::size_t k)
{
    if (ens.n_traj() == 0) throw ValidationError("empty ensemble");
    if (k >= ens.t.size()) throw ValidationError("time index out of range");
    const int d = ens.space.dim();
    Matrix rho = Matrix::Zero(d, d);
    for (const auto& traj : ens.states) rho += traj[k] * traj[k].adjoint();
    rho /= static_cast<double>(ens.n_traj());
    return DensityMatrix::unchecked(ens.space, (0.5 * (rho + rho.adjoint())).eval());
}

TimeSeriesTable ensemble_reduce(const TrajectoryEnsemble& ens)
{
    if (ens.n_traj() == 0) throw ValidationError("empty ensemble");
    if (ens.space.kind() != SpaceKind::Restricted || ens.space.n_ions() != 2) {
        throw ValidationError("ensemble_reduce needs a two-ion Restricted space");
    }
    const std::size_t n = ens.n_traj();
    const auto& names = AtomicObservables::column_names();
    std::vector<std::vector<double>> mean(names.size()), se(names.size());
    std::vector<double> trace;
    std::vector<std::vector<double>> samples(names.size(), std::vector<double>(n));
    std::vector<cplx> z(n);
    for (std::size_t k = 0; k < ens.t.size(); ++k) {
        Matrix avg = Matrix::Zero(4, 4);
        for (std::size_t i = 0; i < n; ++i) {
            const Matrix a = atomic_of(ens.space, ens.states[i][k]);
            avg += a;
            const AtomicObservables o = AtomicObservables::from_matrix(a);
            const std::vector<double> v = o.values();
            for (std::size_t c = 0; c < names.size(); ++c) samples[c][i] = v[c];
            z[i] = o.coherence;
        }
        avg /= static_cast<double>(n);
        const AtomicObservables o = AtomicObservables::from_matrix(avg);
        const std::vector<double> v = o.values();
        trace.push_back(avg.trace().real());
        // |mean| and 2|mean| are not trajectory averages; their spread comes
        // from each trajectory's coherence projected on the mean's phase.
        const cplx phase = std::abs(o.coherence) > 0 ? std::conj(o.coherence) / std::abs(o.coherence) : cplx(1.0);
        std::vector<double> proj(n);
        for (std::size_t i = 0; i < n; ++i) proj[i] = (z[i] * phase).real();
        for (std::size_t c = 0; c < names.size(); ++c) {
            mean[c].push_back(v[c]);
            if (names[c] == "rho_01_10_abs") {
                se[c].push_back(sample_se(proj, std::abs(o.coherence)));
            } else if (names[c] == "concurrence") {
                se[c].push_back(2.0 * sample_se(proj, std::abs(o.coherence)));
            } else {
                se[c].push_back(sample_se(samples[c], v[c]));
            }
        }
    }
    TimeSeriesTable tab(ens.t);
    for (std::size_t c = 0; c < names.size(); ++c) tab.add_column(names[c], std::move(mean[c]));
    tab.add_column("trace", std::move(trace));
    for (std::size_t c = 0; c < names.size(); ++c) tab.add_column(names[c] + "_se", std::move(se[c]));
    return tab;
}

JumpStatistics jump_statistics(const TrajectoryEnsemble& ens)
{
    if (ens.n_traj() == 0) throw ValidationError("empty ensemble");
    const std::size_t n = ens.n_traj();
    const std::size_t nt = ens.t.size();
    const std::size_t nc = ens.channel_labels.size();
    // counts[c][i][k]: jumps of trajectory i on channel c within interval k
    std::vector<std::vector<std::vector<double>>> counts(
        nc, std::vector<std::vector<double>>(n, std::vector<double>(nt, 0.0)));
    for (const JumpEvent& e : ens.jumps) counts[e.channel][e.trajectory][e.interval] += 1.0;
    JumpStatistics st;
    st.t = ens.t;
    st.labels = ens.channel_labels;
    st.mean.assign(nc, std::vector<double>(nt, 0.0));
    st.se.assign(nc, std::vector<double>(nt, 0.0));
    std::vector<double> cum(n);
    for (std::size_t c = 0; c < nc; ++c) {
        std::fill(cum.begin(), cum.end(), 0.0);
        for (std::size_t k = 0; k < nt; ++k) {
            double sum = 0;
            for (std::size_t i = 0; i < n; ++i) {
                cum[i] += counts[c][i][k];
                sum += cum[i];
            }
            const double m = sum / static_cast<double>(n);
            st.mean[c][k] = m;
            st.se[c][k] = sample_se(cum, m);
        }
    }
    return st;
}

TimeSeriesTable JumpStatistics::table() const
{
    TimeSeriesTable tab(t);
    for (std::size_t c = 0; c < labels.size(); ++c) {
        tab.add_column("jumps_" + labels[c], mean[c]);
        tab.add_column("jumps_" + labels[c] + "_se", se[c]);
    }
    return tab;
}

}  // namespace ioncav
