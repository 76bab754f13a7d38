#pragma once

#include <string>
#include <vector>

#include "ioncav/hilbert_space.hpp"
#include "ioncav/types.hpp"

namespace ioncav {

/// Tolerances of a physical state.
namespace state_tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-8;
inline constexpr double kPositivity = -1e-8;  // smallest admissible eigenvalue
}  // namespace state_tol

class DensityMatrix {
public:
    /// Validates on construction.
    DensityMatrix(HilbertSpace space, Matrix rho);
    static DensityMatrix pure(const HilbertSpace& space, const Vector& psi);
    /// Skips validation; for intermediate results the caller checks later.
    static DensityMatrix unchecked(HilbertSpace space, Matrix rho);

    const HilbertSpace& space() const { return space_; }
    const Matrix& matrix() const { return rho_; }
    int dim() const { return space_.dim(); }

    cplx operator()(int r, int c) const { return rho_(r, c); }
    cplx trace() const { return rho_.trace(); }
    double purity() const;
    double min_eigenvalue() const;

    /// Throws NumericalError when Hermiticity, trace or positivity fail.
    void validate() const;

private:
    DensityMatrix(HilbertSpace space, Matrix rho, bool check);

    HilbertSpace space_;
    Matrix rho_;
};

/// Traces out the cavity of a Restricted or FullLambda state.
DensityMatrix partial_trace_cavity(const DensityMatrix& rho);

/// Maximal deviation of a two-qubit state from the one-excitation X-form
/// (weights on |11> plus coherences other than rho_01,10).
double x_form_violation(const Matrix& rho_atoms);

/// 2 |rho_01,10| for a two-ion QubitAtoms state in X-form. Throws
/// ValidationError when the state leaves the block form by more than tol.
double concurrence_x_form(const DensityMatrix& rho_atoms, double tol = 1e-6);

/// The {D, S} -> {0, 1} block of a two-ion LambdaAtoms state. Not
/// renormalized: whatever sits in P is missing from its trace.
Matrix qubit_block(const DensityMatrix& rho_lambda_atoms);

/// Matrix elements rho_ab,cd = <ab|rho|cd> of a two-ion qubit state
/// (index 2a + b).
struct AtomicObservables {
    double p00 = 0, p01 = 0, p10 = 0, p11 = 0;
    cplx coherence;   // rho_01,10
    double concurrence = 0;

    static AtomicObservables from_matrix(const Matrix& rho_qubits);

    /// rho_00_00, rho_01_01, rho_10_10, rho_11_11, rho_01_10_re, rho_01_10_im,
    /// rho_01_10_abs, concurrence.
    static const std::vector<std::string>& column_names();
    std::vector<double> values() const;
};

}  // namespace ioncav
