#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ioncav {

enum class SpaceKind {
    /// At most one excitation shared by N effective two-level ions and the
    /// cavity; dim N + 2. For N = 2 the ordering is |000>, |001>, |010>,
    /// |100> (ion 1, ion 2, cavity).
    Restricted,
    /// N three-level ions (S, P, D) times Fock 0..n_max, lexicographic.
    FullLambda,
    /// Two-level ions only (the cavity traced out), 2^N states.
    QubitAtoms,
    /// Three-level ions only, 3^N states.
    LambdaAtoms,
};

/// An indexed basis. Every space is a subset of a tensor-product space
/// (ion levels)^N x (Fock 0..fock_dim-1); the embedding records which
/// product states are kept and in which order.
class HilbertSpace {
public:
    static HilbertSpace restricted(int n_ions = 2);
    static HilbertSpace full_lambda(int n_max = 2, int n_ions = 2);
    static HilbertSpace qubit_atoms(int n_ions = 2);
    static HilbertSpace lambda_atoms(int n_ions = 2);

    SpaceKind kind() const { return kind_; }
    int dim() const { return static_cast<int>(embedding_.size()); }
    int n_ions() const { return n_ions_; }
    /// Highest Fock number kept (0 for atom-only spaces).
    int n_max() const { return fock_dim_ - 1; }
    int levels_per_ion() const { return levels_; }
    int fock_dim() const { return fock_dim_; }
    int product_dim() const;
    bool has_cavity() const { return fock_dim_ > 1; }

    const std::vector<std::string>& labels() const { return labels_; }
    /// Index of a basis label such as "010" or "SD1"; -1 when absent.
    int index_of(std::string_view label) const;
    /// Product-space index of basis state i.
    int product_index(int i) const { return embedding_[i]; }
    /// Basis index of a product-space state; -1 when not kept.
    int basis_index(int product) const;

    /// Level of ion j (0-based) and photon number of basis state i.
    int ion_level(int i, int j) const;
    int photon_number(int i) const;

    /// Level symbol accepted in labels and operator specs: '0'/'1' for
    /// two-level ions, 'S'/'P'/'D' for three-level ions.
    char level_symbol(int level) const;
    /// -1 when the symbol is not a level of this space.
    int level_from_symbol(char c) const;

    /// The ions-only space obtained by tracing out the cavity.
    HilbertSpace atoms_only() const;

    bool operator==(const HilbertSpace& other) const;

private:
    HilbertSpace(SpaceKind kind, int n_ions, int levels, int fock_dim);

    SpaceKind kind_;
    int n_ions_;
    int levels_;
    int fock_dim_;
    std::vector<int> embedding_;
    std::vector<std::string> labels_;
};

/// Three-level ion level indices in FullLambda ordering.
namespace level {
inline constexpr int S = 0;
inline constexpr int P = 1;
inline constexpr int D = 2;
}  // namespace level

}  // namespace ioncav
