#include "ioncav/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "ioncav/operators.hpp"

namespace ioncav {

DensityMatrix::DensityMatrix(HilbertSpace space, Matrix rho, bool check)
    : space_(std::move(space)), rho_(std::move(rho))
{
    if (rho_.rows() != space_.dim() || rho_.cols() != space_.dim()) {
        throw ValidationError("DensityMatrix: dimension mismatch with its space");
    }
    if (check) validate();
}

DensityMatrix::DensityMatrix(HilbertSpace space, Matrix rho) : DensityMatrix(std::move(space), std::move(rho), true) {}

DensityMatrix DensityMatrix::pure(const HilbertSpace& space, const Vector& psi)
{
    if (psi.size() != space.dim()) throw ValidationError("DensityMatrix::pure: vector size mismatch");
    const double n = psi.norm();
    if (n == 0.0) throw ValidationError("DensityMatrix::pure: zero vector");
    const Vector u = psi / n;
    return DensityMatrix(space, u * u.adjoint());
}

DensityMatrix DensityMatrix::unchecked(HilbertSpace space, Matrix rho)
{
    return DensityMatrix(std::move(space), std::move(rho), false);
}

double DensityMatrix::purity() const
{
    return (rho_ * rho_).trace().real();
}

double DensityMatrix::min_eigenvalue() const
{
    const Matrix herm = 0.5 * (rho_ + rho_.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

void DensityMatrix::validate() const
{
    const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > state_tol::kHermitian) {
        std::ostringstream os;
        os << "density matrix not Hermitian (deviation " << herm << ")";
        throw NumericalError(os.str());
    }
    const cplx tr = rho_.trace();
    if (std::abs(tr - 1.0) > state_tol::kTrace) {
        std::ostringstream os;
        os << "density matrix trace " << tr.real() << " differs from 1";
        throw NumericalError(os.str());
    }
    const double lmin = min_eigenvalue();
    if (lmin < state_tol::kPositivity) {
        std::ostringstream os;
        os << "density matrix lost positivity (min eigenvalue " << lmin << ")";
        throw NumericalError(os.str());
    }
}

DensityMatrix partial_trace_cavity(const DensityMatrix& rho)
{
    const HilbertSpace& sp = rho.space();
    if (sp.kind() != SpaceKind::Restricted && sp.kind() != SpaceKind::FullLambda) {
        throw ValidationError("partial_trace_cavity: state has no cavity");
    }
    const HilbertSpace atoms = sp.atoms_only();
    const int f = sp.fock_dim();
    Matrix out = Matrix::Zero(atoms.dim(), atoms.dim());
    for (int c = 0; c < sp.dim(); ++c) {
        const int pc = sp.product_index(c);
        for (int r = 0; r < sp.dim(); ++r) {
            const int pr = sp.product_index(r);
            if (pr % f != pc % f) continue;
            out(pr / f, pc / f) += rho(r, c);
        }
    }
    return DensityMatrix::unchecked(atoms, std::move(out));
}

double x_form_violation(const Matrix& rho)
{
    if (rho.rows() != 4 || rho.cols() != 4) throw ValidationError("x_form_violation: needs a two-qubit matrix");
    double worst = std::abs(rho(3, 3));
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            if (r == c) continue;
            if ((r == 1 && c == 2) || (r == 2 && c == 1)) continue;
            worst = std::max(worst, std::abs(rho(r, c)));
        }
    }
    return worst;
}

double concurrence_x_form(const DensityMatrix& rho_atoms, double tol)
{
    const HilbertSpace& sp = rho_atoms.space();
    if (sp.kind() != SpaceKind::QubitAtoms || sp.n_ions() != 2) {
        throw ValidationError("concurrence_x_form: needs a two-ion QubitAtoms state");
    }
    const double v = x_form_violation(rho_atoms.matrix());
    if (v > tol) {
        std::ostringstream os;
        os << "concurrence_x_form: state left the one-excitation block form (violation " << v << ")";
        throw ValidationError(os.str());
    }
    return 2.0 * std::abs(rho_atoms(1, 2));
}

Matrix qubit_block(const DensityMatrix& rho)
{
    const HilbertSpace& sp = rho.space();
    if (sp.kind() != SpaceKind::LambdaAtoms || sp.n_ions() != 2) {
        throw ValidationError("qubit_block: needs a two-ion LambdaAtoms state");
    }
    // qubit index 2a + b with a, b in {0 = D, 1 = S}
    auto lambda_index = [](int q) {
        const int a = q / 2;
        const int b = q % 2;
        const int la = a ? level::S : level::D;
        const int lb = b ? level::S : level::D;
        return la * 3 + lb;
    };
    Matrix out(4, 4);
    for (int c = 0; c < 4; ++c) {
        for (int r = 0; r < 4; ++r) out(r, c) = rho(lambda_index(r), lambda_index(c));
    }
    return out;
}

AtomicObservables AtomicObservables::from_matrix(const Matrix& rho)
{
    if (rho.rows() != 4 || rho.cols() != 4) throw ValidationError("AtomicObservables: needs a two-qubit matrix");
    AtomicObservables o;
    o.p00 = rho(0, 0).real();
    o.p01 = rho(1, 1).real();
    o.p10 = rho(2, 2).real();
    o.p11 = rho(3, 3).real();
    o.coherence = rho(1, 2);
    o.concurrence = 2.0 * std::abs(o.coherence);
    return o;
}

const std::vector<std::string>& AtomicObservables::column_names()
{
    static const std::vector<std::string> names{"rho_00_00",    "rho_01_01",    "rho_10_10",     "rho_11_11",
                                                "rho_01_10_re", "rho_01_10_im", "rho_01_10_abs", "concurrence"};
    return names;
}

std::vector<double> AtomicObservables::values() const
{
    return {p00, p01, p10, p11, coherence.real(), coherence.imag(), std::abs(coherence), concurrence};
}

}  // namespace ioncav
