#include "ioncav/hilbert_space.hpp"

#include <algorithm>

#include "ioncav/types.hpp"

namespace ioncav {

namespace {

int ipow(int base, int exp)
{
    int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

HilbertSpace::HilbertSpace(SpaceKind kind, int n_ions, int levels, int fock_dim)
    : kind_(kind), n_ions_(n_ions), levels_(levels), fock_dim_(fock_dim)
{
    if (n_ions < 1) throw ValidationError("HilbertSpace: need at least one ion");
    const int pdim = product_dim();
    for (int p = 0; p < pdim; ++p) {
        if (kind == SpaceKind::Restricted) {
            int excitations = p % fock_dim;
            int rest = p / fock_dim;
            for (int j = 0; j < n_ions; ++j) {
                excitations += rest % levels;
                rest /= levels;
            }
            if (excitations > 1) continue;
        }
        embedding_.push_back(p);
    }
    labels_.reserve(embedding_.size());
    for (int i = 0; i < dim(); ++i) {
        std::string label;
        for (int j = 0; j < n_ions_; ++j) label.push_back(level_symbol(ion_level(i, j)));
        if (has_cavity() || kind_ == SpaceKind::Restricted) label += std::to_string(photon_number(i));
        labels_.push_back(std::move(label));
    }
}

HilbertSpace HilbertSpace::restricted(int n_ions)
{
    return HilbertSpace(SpaceKind::Restricted, n_ions, 2, 2);
}

HilbertSpace HilbertSpace::full_lambda(int n_max, int n_ions)
{
    if (n_max < 1) throw ValidationError("HilbertSpace: FullLambda needs n_max >= 1");
    return HilbertSpace(SpaceKind::FullLambda, n_ions, 3, n_max + 1);
}

HilbertSpace HilbertSpace::qubit_atoms(int n_ions)
{
    return HilbertSpace(SpaceKind::QubitAtoms, n_ions, 2, 1);
}

HilbertSpace HilbertSpace::lambda_atoms(int n_ions)
{
    return HilbertSpace(SpaceKind::LambdaAtoms, n_ions, 3, 1);
}

int HilbertSpace::product_dim() const
{
    return ipow(levels_, n_ions_) * fock_dim_;
}

int HilbertSpace::index_of(std::string_view label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

int HilbertSpace::basis_index(int product) const
{
    auto it = std::lower_bound(embedding_.begin(), embedding_.end(), product);
    if (it == embedding_.end() || *it != product) return -1;
    return static_cast<int>(it - embedding_.begin());
}

int HilbertSpace::ion_level(int i, int j) const
{
    int rest = embedding_[i] / fock_dim_;
    for (int k = n_ions_ - 1; k > j; --k) rest /= levels_;
    return rest % levels_;
}

int HilbertSpace::photon_number(int i) const
{
    return embedding_[i] % fock_dim_;
}

char HilbertSpace::level_symbol(int lvl) const
{
    if (levels_ == 3) return "SPD"[lvl];
    return static_cast<char>('0' + lvl);
}

int HilbertSpace::level_from_symbol(char c) const
{
    if (levels_ == 3) {
        switch (c) {
        case 'S': return level::S;
        case 'P': return level::P;
        case 'D': return level::D;
        default: return -1;
        }
    }
    if (c == '0' || c == '1') return c - '0';
    return -1;
}

HilbertSpace HilbertSpace::atoms_only() const
{
    switch (kind_) {
    case SpaceKind::Restricted:
    case SpaceKind::QubitAtoms: return qubit_atoms(n_ions_);
    case SpaceKind::FullLambda:
    case SpaceKind::LambdaAtoms: return lambda_atoms(n_ions_);
    }
    throw ValidationError("HilbertSpace: unknown kind");
}

bool HilbertSpace::operator==(const HilbertSpace& other) const
{
    return kind_ == other.kind_ && n_ions_ == other.n_ions_ && fock_dim_ == other.fock_dim_;
}

}  // namespace ioncav
