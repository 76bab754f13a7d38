#include "ioncav/lindblad.hpp"

#include <cmath>
#include <sstream>

namespace ioncav {

void LindbladSystem::validate() const
{
    if (!hamiltonian.is_hermitian(1e-12)) throw ValidationError("Lindblad system: Hamiltonian is not Hermitian");
    for (const JumpChannel& c : channels) {
        if (!(c.op.space == hamiltonian.space)) {
            throw ValidationError("Lindblad system: channel '" + c.label + "' lives on a different space");
        }
        if (!std::isfinite(c.rate) || c.rate < 0) {
            throw ValidationError("Lindblad system: channel '" + c.label + "' has a negative or non-finite rate");
        }
    }
}

Matrix LindbladSystem::superoperator() const
{
    const int d = space().dim();
    const Matrix id = Matrix::Identity(d, d);
    auto kron = [d](const Matrix& a, const Matrix& b) {
        Matrix k(d * d, d * d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) k.block(i * d, j * d, d, d) = a(i, j) * b;
        }
        return k;
    };
    const Matrix& h = hamiltonian.matrix;
    // vec(A X B) = (B^T (x) A) vec(X)
    Matrix l = -kI * (kron(id, h) - kron(h.transpose(), id));
    for (const JumpChannel& c : channels) {
        if (c.rate == 0.0) continue;
        const Matrix& op = c.op.matrix;
        const Matrix cdc = op.adjoint() * op;
        l += c.rate * (kron(op.conjugate(), op) - 0.5 * kron(id, cdc) - 0.5 * kron(cdc.transpose(), id));
    }
    return kTwoPi * l;
}

Matrix LindbladSystem::apply(const Matrix& rho) const
{
    const Matrix& h = hamiltonian.matrix;
    Matrix out = -kI * (h * rho - rho * h);
    for (const JumpChannel& c : channels) {
        if (c.rate == 0.0) continue;
        const Matrix& op = c.op.matrix;
        const Matrix cdc = op.adjoint() * op;
        out += c.rate * (op * rho * op.adjoint() - 0.5 * (cdc * rho + rho * cdc));
    }
    return kTwoPi * out;
}

double LindbladSystem::max_rate() const
{
    double r = hamiltonian.matrix.cwiseAbs().rowwise().sum().maxCoeff();
    for (const JumpChannel& c : channels) {
        r += c.rate * (c.op.matrix.adjoint() * c.op.matrix).cwiseAbs().rowwise().sum().maxCoeff();
    }
    return kTwoPi * r;
}

Matrix LindbladSystem::mc_hamiltonian() const
{
    Matrix m = hamiltonian.matrix;
    for (const JumpChannel& c : channels) m -= 0.5 * kI * c.rate * (c.op.matrix.adjoint() * c.op.matrix);
    return m;
}

double default_step(double max_rate, double spacing)
{
    const double by_rate = max_rate > 0 ? 0.002 / max_rate : spacing;
    return std::min(by_rate, spacing / 10.0);
}

namespace {

void check_grid(const std::vector<double>& t)
{
    if (t.empty()) throw ValidationError("empty time grid");
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (!(t[i] > t[i - 1])) throw ValidationError("time grid is not strictly increasing");
    }
}

int steps_for(double spacing, double step)
{
    const double m = std::ceil(spacing / step - 1e-9);
    if (!(step > 0) || m > 1e9 || spacing / m < 1e-13) {
        std::ostringstream os;
        os << "integration step underflow (step " << step << " over interval " << spacing << ")";
        throw NumericalError(os.str());
    }
    return std::max(1, static_cast<int>(m));
}

// Records observables for one output time and checks the state.
class Recorder {
public:
    Recorder(const HilbertSpace& space, std::size_t n, const LindbladOptions& opt) : space_(space), opt_(opt)
    {
        trace_.reserve(n);
        purity_.reserve(n);
        pops_.assign(space.dim(), {});
    }

    void record(Matrix& rho, double t, std::vector<DensityMatrix>& snapshots)
    {
        rho = (0.5 * (rho + rho.adjoint())).eval();
        const double tr = rho.trace().real();
        if (!std::isfinite(tr) || std::abs(tr - 1.0) > state_tol::kTrace * std::max(1.0, t)) {
            std::ostringstream os;
            os << "trace drifted to " << tr << " at t = " << t;
            throw NumericalError(os.str());
        }
        DensityMatrix dm = DensityMatrix::unchecked(space_, rho);
        if (opt_.check_positivity) {
            const double lmin = dm.min_eigenvalue();
            if (lmin < state_tol::kPositivity) {
                std::ostringstream os;
                os << "positivity lost at t = " << t << " (min eigenvalue " << lmin << ")";
                throw NumericalError(os.str());
            }
        }
        if (space_.has_cavity() && space_.kind() == SpaceKind::FullLambda) {
            double top = 0;
            for (int i = 0; i < space_.dim(); ++i) {
                if (space_.photon_number(i) == space_.n_max()) top += rho(i, i).real();
            }
            if (top > opt_.fock_guard) {
                std::ostringstream os;
                os << "Fock truncation leak: population " << top << " in the n = " << space_.n_max()
                   << " layer at t = " << t;
                throw NumericalError(os.str());
            }
        }
        trace_.push_back(tr);
        purity_.push_back(rho.cwiseAbs2().sum());
        for (int i = 0; i < space_.dim(); ++i) pops_[i].push_back(rho(i, i).real());
        if (opt_.snapshots) snapshots.push_back(std::move(dm));
    }

    TimeSeriesTable table(const std::vector<double>& t)
    {
        TimeSeriesTable tab(t);
        tab.add_column("trace", std::move(trace_));
        tab.add_column("purity", std::move(purity_));
        for (int i = 0; i < space_.dim(); ++i) tab.add_column("pop_" + space_.labels()[i], std::move(pops_[i]));
        return tab;
    }

private:
    const HilbertSpace& space_;
    const LindbladOptions& opt_;
    std::vector<double> trace_;
    std::vector<double> purity_;
    std::vector<std::vector<double>> pops_;
};

Matrix matrix_power(Matrix base, int exponent)
{
    Matrix result = Matrix::Identity(base.rows(), base.cols());
    bool first = true;
    while (exponent > 0) {
        if (exponent & 1) {
            result = first ? base : Matrix(result * base);
            first = false;
        }
        exponent >>= 1;
        if (exponent > 0) base = (base * base).eval();
    }
    return result;
}

}  // namespace

LindbladResult integrate_lindblad(const LindbladSystem& system, const DensityMatrix& rho0,
                                  const std::vector<double>& t_grid, const LindbladOptions& options)
{
    system.validate();
    check_grid(t_grid);
    if (!(rho0.space() == system.space())) throw ValidationError("initial state lives on a different space");
    rho0.validate();
    const int d = system.space().dim();
    const Matrix l = system.superoperator();
    const double rate = system.max_rate();

    // For a constant generator one RK4 step is the degree-4 Taylor polynomial of
    // h L, so m steps are its m-th power. Powers are cached per interval length.
    // Spacings of a linear grid differ in the last bits; those share an entry.
    std::vector<std::pair<double, Matrix>> cache;
    auto propagator = [&](double spacing) -> const Matrix& {
        for (const auto& [s, p] : cache) {
            if (std::abs(s - spacing) <= 1e-12 * s) return p;
        }
        const double h0 = options.step > 0 ? options.step : default_step(rate, spacing);
        const int m = steps_for(spacing, h0);
        const Matrix hl = (spacing / m) * l;
        const Matrix id = Matrix::Identity(d * d, d * d);
        Matrix step = id;
        Matrix term = id;
        for (int k = 1; k <= 4; ++k) {
            term = (term * hl / static_cast<double>(k)).eval();
            step += term;
        }
        cache.emplace_back(spacing, matrix_power(std::move(step), m));
        return cache.back().second;
    };

    Recorder rec(system.space(), t_grid.size(), options);
    LindbladResult out{TimeSeriesTable({}), {}};
    Matrix rho = rho0.matrix();
    rec.record(rho, t_grid[0], out.snapshots);
    for (std::size_t k = 1; k < t_grid.size(); ++k) {
        const Matrix& p = propagator(t_grid[k] - t_grid[k - 1]);
        Eigen::Map<const Vector> v(rho.data(), d * d);
        Vector next = p * v;
        rho = Eigen::Map<Matrix>(next.data(), d, d);
        rec.record(rho, t_grid[k], out.snapshots);
    }
    out.table = rec.table(t_grid);
    return out;
}

LindbladResult integrate_lindblad(const TimeDependentSystem& system, const DensityMatrix& rho0,
                                  const std::vector<double>& t_grid, const LindbladOptions& options)
{
    check_grid(t_grid);
    if (!(rho0.space() == system.space)) throw ValidationError("initial state lives on a different space");
    rho0.validate();
    const double rate = system.max_rate > 0 ? system.max_rate : system.at(t_grid[0]).max_rate();

    Recorder rec(system.space, t_grid.size(), options);
    LindbladResult out{TimeSeriesTable({}), {}};
    Matrix rho = rho0.matrix();
    rec.record(rho, t_grid[0], out.snapshots);
    for (std::size_t k = 1; k < t_grid.size(); ++k) {
        const double spacing = t_grid[k] - t_grid[k - 1];
        const double h0 = options.step > 0 ? options.step : default_step(rate, spacing);
        const int m = steps_for(spacing, h0);
        const double h = spacing / m;
        for (int s = 0; s < m; ++s) {
            const double t = t_grid[k - 1] + s * h;
            const LindbladSystem a = system.at(t);
            const LindbladSystem b = system.at(t + h / 2);
            const LindbladSystem c = system.at(t + h);
            const Matrix k1 = a.apply(rho);
            const Matrix k2 = b.apply(rho + h / 2 * k1);
            const Matrix k3 = b.apply(rho + h / 2 * k2);
            const Matrix k4 = c.apply(rho + h * k3);
            rho += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
        }
        rec.record(rho, t_grid[k], out.snapshots);
    }
    out.table = rec.table(t_grid);
    return out;
}

}  // namespace ioncav
