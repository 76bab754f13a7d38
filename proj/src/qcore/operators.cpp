#include "ioncav/operators.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include <Eigen/SVD>

namespace ioncav {

LinearOp::LinearOp(HilbertSpace s, Matrix m) : space(std::move(s)), matrix(std::move(m))
{
    if (matrix.rows() != space.dim() || matrix.cols() != space.dim()) {
        throw ValidationError("LinearOp: matrix is " + std::to_string(matrix.rows()) + "x" +
                              std::to_string(matrix.cols()) + " but the space has dim " +
                              std::to_string(space.dim()));
    }
}

LinearOp LinearOp::zero(const HilbertSpace& s)
{
    return {s, Matrix::Zero(s.dim(), s.dim())};
}

LinearOp LinearOp::identity(const HilbertSpace& s)
{
    return {s, Matrix::Identity(s.dim(), s.dim())};
}

bool LinearOp::is_hermitian(double tol) const
{
    return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

LinearOp LinearOp::adjoint() const
{
    return {space, matrix.adjoint()};
}

double LinearOp::operator_norm() const
{
    Eigen::JacobiSVD<Matrix> svd(matrix);
    return svd.singularValues()(0);
}

LinearOp& LinearOp::operator+=(const LinearOp& o)
{
    if (!(space == o.space)) throw ValidationError("LinearOp: adding operators on different spaces");
    matrix += o.matrix;
    return *this;
}

LinearOp& LinearOp::operator-=(const LinearOp& o)
{
    if (!(space == o.space)) throw ValidationError("LinearOp: subtracting operators on different spaces");
    matrix -= o.matrix;
    return *this;
}

LinearOp& LinearOp::operator*=(cplx s)
{
    matrix *= s;
    return *this;
}

LinearOp operator+(LinearOp a, const LinearOp& b) { return a += b; }
LinearOp operator-(LinearOp a, const LinearOp& b) { return a -= b; }
LinearOp operator*(cplx s, LinearOp a) { return a *= s; }

LinearOp operator*(const LinearOp& a, const LinearOp& b)
{
    if (!(a.space == b.space)) throw ValidationError("LinearOp: multiplying operators on different spaces");
    return {a.space, a.matrix * b.matrix};
}

namespace {

std::string strip(std::string_view s)
{
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

// Splits "name(x,y,z)" into name and comma-separated arguments.
bool split_call(const std::string& s, std::string& name, std::vector<std::string>& args)
{
    auto open = s.find('(');
    if (open == std::string::npos) {
        name = s;
        return true;
    }
    if (s.back() != ')') return false;
    name = s.substr(0, open);
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    std::string cur;
    for (char c : inner) {
        if (c == ',') {
            args.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    args.push_back(cur);
    return true;
}

int parse_ion(const std::string& s, std::string_view text)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw ValidationError("operator spec '" + std::string(text) + "': bad ion index '" + s + "'");
}

}  // namespace

OpSpec OpSpec::parse(std::string_view text)
{
    const std::string s = strip(text);
    std::string name;
    std::vector<std::string> args;
    if (s.empty() || !split_call(s, name, args)) {
        throw ValidationError("unknown operator spec '" + std::string(text) + "'");
    }
    OpSpec spec;
    auto want_args = [&](std::size_t n) {
        if (args.size() != n) {
            throw ValidationError("operator spec '" + std::string(text) + "' expects " + std::to_string(n) +
                                  " argument(s)");
        }
    };
    if (name == "a") {
        want_args(0);
        spec.kind = OpKind::Annihilate;
    } else if (name == "adag" || name == "a+") {
        want_args(0);
        spec.kind = OpKind::Create;
    } else if (name == "n" || name == "adag_a") {
        want_args(0);
        spec.kind = OpKind::Number;
    } else if (name == "I") {
        want_args(0);
        spec.kind = OpKind::Identity;
    } else if (name == "sm") {
        want_args(1);
        spec.kind = OpKind::SigmaMinus;
        spec.ion = parse_ion(args[0], text);
    } else if (name == "sp") {
        want_args(1);
        spec.kind = OpKind::SigmaPlus;
        spec.ion = parse_ion(args[0], text);
    } else if (name == "A") {
        want_args(3);
        spec.kind = OpKind::Transition;
        spec.ion = parse_ion(args[0], text);
        if (args[1].size() != 1 || args[2].size() != 1) {
            throw ValidationError("operator spec '" + std::string(text) + "': levels are single symbols");
        }
        spec.to = args[1][0];
        spec.from = args[2][0];
    } else if (name == "P") {
        want_args(1);
        spec.kind = OpKind::Projector;
        spec.label = args[0];
    } else {
        throw ValidationError("unknown operator spec '" + std::string(text) + "'");
    }
    return spec;
}

ProductBuilder::ProductBuilder(HilbertSpace space) : space_(std::move(space)) {}

Matrix ProductBuilder::identity() const
{
    const int n = space_.product_dim();
    return Matrix::Identity(n, n);
}

Matrix ProductBuilder::a() const
{
    const int f = space_.fock_dim();
    const int n = space_.product_dim();
    Matrix m = Matrix::Zero(n, n);
    for (int p = 0; p < n; ++p) {
        const int photons = p % f;
        if (photons > 0) m(p - 1, p) = std::sqrt(static_cast<double>(photons));
    }
    return m;
}

Matrix ProductBuilder::adag() const
{
    return a().adjoint();
}

Matrix ProductBuilder::transition(int ion, int to, int from) const
{
    const int n_ions = space_.n_ions();
    if (ion < 1 || ion > n_ions) {
        throw ValidationError("ion index " + std::to_string(ion) + " out of range 1.." + std::to_string(n_ions));
    }
    const int lv = space_.levels_per_ion();
    const int f = space_.fock_dim();
    int stride = f;
    for (int k = n_ions; k > ion; --k) stride *= lv;
    const int n = space_.product_dim();
    Matrix m = Matrix::Zero(n, n);
    for (int p = 0; p < n; ++p) {
        const int l = (p / stride) % lv;
        if (l == from) m(p + (to - from) * stride, p) = 1.0;
    }
    return m;
}

Matrix ProductBuilder::of(const OpSpec& spec) const
{
    auto level = [&](char c) {
        const int l = space_.level_from_symbol(c);
        if (l < 0) {
            throw ValidationError(std::string("level label '") + c + "' is not valid for this space");
        }
        return l;
    };
    // Two-level ions: 0 = lower, 1 = upper. Three-level ions use the
    // effective-qubit reading D = 0, S = 1.
    const bool lambda = space_.levels_per_ion() == 3;
    const int lower = lambda ? level::D : 0;
    const int upper = lambda ? level::S : 1;
    switch (spec.kind) {
    case OpKind::Annihilate:
    case OpKind::Create:
    case OpKind::Number:
        if (!space_.has_cavity() && space_.kind() != SpaceKind::Restricted) {
            throw ValidationError("cavity operator requested on an atoms-only space");
        }
        if (spec.kind == OpKind::Annihilate) return a();
        if (spec.kind == OpKind::Create) return adag();
        return adag() * a();
    case OpKind::SigmaMinus: return transition(spec.ion, lower, upper);
    case OpKind::SigmaPlus: return transition(spec.ion, upper, lower);
    case OpKind::Transition: return transition(spec.ion, level(spec.to), level(spec.from));
    case OpKind::Projector: {
        const int i = space_.index_of(spec.label);
        if (i < 0) throw ValidationError("projector label '" + spec.label + "' is not a basis state");
        const int p = space_.product_index(i);
        Matrix m = Matrix::Zero(space_.product_dim(), space_.product_dim());
        m(p, p) = 1.0;
        return m;
    }
    case OpKind::Identity: return identity();
    }
    throw ValidationError("unknown operator kind");
}

LinearOp ProductBuilder::restrict(const Matrix& product) const
{
    const int d = space_.dim();
    Matrix m(d, d);
    for (int c = 0; c < d; ++c) {
        for (int r = 0; r < d; ++r) m(r, c) = product(space_.product_index(r), space_.product_index(c));
    }
    return {space_, std::move(m)};
}

Matrix ProductBuilder::embed(const Matrix& declared) const
{
    const int d = space_.dim();
    Matrix m = Matrix::Zero(space_.product_dim(), space_.product_dim());
    for (int c = 0; c < d; ++c) {
        for (int r = 0; r < d; ++r) m(space_.product_index(r), space_.product_index(c)) = declared(r, c);
    }
    return m;
}

LinearOp build_operator(const HilbertSpace& space, const OpSpec& spec)
{
    ProductBuilder pb(space);
    return pb.restrict(pb.of(spec));
}

LinearOp build_operator(const HilbertSpace& space, std::string_view spec)
{
    return build_operator(space, OpSpec::parse(spec));
}

LinearOp tavis_cummings_hamiltonian(const HilbertSpace& space, double omega_c, const std::vector<double>& omega_a,
                                    const std::vector<cplx>& alpha)
{
    if (space.kind() != SpaceKind::Restricted) {
        throw ValidationError("tavis_cummings_hamiltonian: needs a Restricted space of two-level ions");
    }
    const int n = space.n_ions();
    if (static_cast<int>(omega_a.size()) != n || static_cast<int>(alpha.size()) != n) {
        throw ValidationError("tavis_cummings_hamiltonian: per-ion vectors must have n_ions entries");
    }
    ProductBuilder pb(space);
    const Matrix a = pb.a();
    const Matrix adag = pb.adag();
    Matrix h = omega_c * (adag * a + 0.5 * pb.identity());
    for (int j = 1; j <= n; ++j) {
        const Matrix sm = pb.transition(j, 0, 1);
        const Matrix sp = pb.transition(j, 1, 0);
        h += omega_a[j - 1] * sp * sm;
        h += alpha[j - 1] * adag * sm + std::conj(alpha[j - 1]) * a * sp;
    }
    return pb.restrict(h);
}

}  // namespace ioncav
