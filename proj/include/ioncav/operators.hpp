#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ioncav/hilbert_space.hpp"
#include "ioncav/types.hpp"

namespace ioncav {

/// A dense operator on a declared basis.
struct LinearOp {
    HilbertSpace space;
    Matrix matrix;

    LinearOp(HilbertSpace s, Matrix m);
    static LinearOp zero(const HilbertSpace& s);
    static LinearOp identity(const HilbertSpace& s);

    int dim() const { return space.dim(); }
    bool is_hermitian(double tol = 1e-12) const;
    LinearOp adjoint() const;
    /// Largest singular value.
    double operator_norm() const;

    LinearOp& operator+=(const LinearOp& o);
    LinearOp& operator-=(const LinearOp& o);
    LinearOp& operator*=(cplx s);
};

LinearOp operator+(LinearOp a, const LinearOp& b);
LinearOp operator-(LinearOp a, const LinearOp& b);
LinearOp operator*(cplx s, LinearOp a);
/// Matrix product within one basis. On the restricted space this is the
/// product of already-truncated operators; build composite terms with
/// ProductBuilder instead when the intermediate state leaves the sector.
LinearOp operator*(const LinearOp& a, const LinearOp& b);

enum class OpKind {
    Annihilate,   // a
    Create,       // a^dagger
    Number,       // a^dagger a
    SigmaMinus,   // |0><1| on ion j (|D><S| for three-level ions)
    SigmaPlus,    // |1><0| on ion j
    Transition,   // A_{ll'} = |l><l'| on ion j
    Projector,    // |label><label|
    Identity,
};

struct OpSpec {
    OpKind kind = OpKind::Identity;
    int ion = 0;          // 1-based, for ion operators
    char to = 0;          // level symbols for Transition
    char from = 0;
    std::string label;    // basis label for Projector

    /// Parses "a", "adag", "n", "sm(1)", "sp(2)", "A(1,S,P)", "P(010)", "I".
    static OpSpec parse(std::string_view text);
};

/// The matrix of a named operator in the declared basis ordering.
LinearOp build_operator(const HilbertSpace& space, const OpSpec& spec);
LinearOp build_operator(const HilbertSpace& space, std::string_view spec);

/// Builds operators in the full tensor-product space underlying a
/// HilbertSpace, so products such as a sigma_+ are formed before the
/// truncation to the restricted sector.
class ProductBuilder {
public:
    explicit ProductBuilder(HilbertSpace space);

    const HilbertSpace& space() const { return space_; }
    Matrix identity() const;
    Matrix a() const;
    Matrix adag() const;
    /// |to><from| acting on ion j (1-based), levels as indices.
    Matrix transition(int ion, int to, int from) const;
    Matrix of(const OpSpec& spec) const;

    /// Compresses a product-space matrix onto the declared basis.
    LinearOp restrict(const Matrix& product) const;
    /// Embeds a declared-basis matrix into the product space (zeros elsewhere).
    Matrix embed(const Matrix& declared) const;

private:
    HilbertSpace space_;
};

/// Tavis-Cummings Hamiltonian
///   omega_C (a^dag a + 1/2) + sum_j omega_A^(j) sigma_+^(j) sigma_-^(j)
///   + sum_j (alpha^(j) a^dag sigma_-^(j) + h.c.)
/// on a space of two-level ions (Restricted). Stored frequency units.
LinearOp tavis_cummings_hamiltonian(const HilbertSpace& space, double omega_c,
                                    const std::vector<double>& omega_a,
                                    const std::vector<cplx>& alpha);

}  // namespace ioncav
