#include "jt/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace jt {

Tolerances& tolerances() {
    static Tolerances tol;
    return tol;
}

Matrix pauli_theta() {
    Matrix m(2, 2);
    m << -1, 0, 0, 1;
    return m;
}

Matrix pauli_epsilon() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_varpi() {
    Matrix m(2, 2);
    m << 0, Complex(0, 1), Complex(0, -1), 0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

Matrix annihilation(Index fock) {
    Matrix a = Matrix::Zero(fock + 1, fock + 1);
    for (Index n = 1; n <= fock; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

Matrix number_operator(Index fock) {
    Matrix n = Matrix::Zero(fock + 1, fock + 1);
    for (Index k = 0; k <= fock; ++k) n(k, k) = double(k);
    return n;
}

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
    const Index p = a.dim(), q = b.dim();
    OperatorMatrix out;
    out.entries.resize(p * q, p * q);
    for (Index i = 0; i < p; ++i)
        for (Index j = 0; j < p; ++j)
            out.entries.block(i * q, j * q, q, q) = a.entries(i, j) * b.entries;
    out.factor_dims = a.factor_dims;
    out.factor_dims.insert(out.factor_dims.end(), b.factor_dims.begin(), b.factor_dims.end());
    out.hermitian_hint = a.hermitian_hint && b.hermitian_hint;
    return out;
}

static void require_hermitian(const OperatorMatrix& a) {
    const double scale = a.entries.cwiseAbs().maxCoeff();
    const double asym = a.max_asymmetry();
    if (!a.hermitian_hint || (scale > 0 && asym > tolerances().hermiticity * scale))
        throw std::invalid_argument("hermitian_eig: input not Hermitian, max asymmetry " +
                                    std::to_string(asym));
}

std::vector<EigPair> hermitian_eig(const OperatorMatrix& a, Index k) {
    require_hermitian(a);
    Eigen::SelfAdjointEigenSolver<Matrix> es(a.entries);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
    k = std::min<Index>(k, a.dim());
    std::vector<EigPair> out;
    out.reserve(k);
    for (Index i = 0; i < k; ++i) {
        PureState v{es.eigenvectors().col(i), a.factor_dims};
        out.push_back({es.eigenvalues()(i), std::move(v)});
    }
    return out;
}

std::pair<Eigen::VectorXd, Matrix> full_hermitian_eig(const OperatorMatrix& a) {
    require_hermitian(a);
    Eigen::SelfAdjointEigenSolver<Matrix> es(a.entries);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("eigensolver failed to converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

namespace {

struct FactorSplit {
    std::vector<Index> keep_dims, trace_dims;
    std::vector<Index> keep_strides, trace_strides;  // strides in the full index
    Index keep_total = 1, trace_total = 1;
};

FactorSplit split_factors(const std::vector<Index>& dims, const std::vector<int>& keep) {
    std::vector<char> kept(dims.size(), 0);
    for (int f : keep) {
        if (f < 0 || size_t(f) >= dims.size())
            throw std::invalid_argument("invalid factor index " + std::to_string(f));
        if (kept[f]) throw std::invalid_argument("duplicate factor index " + std::to_string(f));
        kept[f] = 1;
    }
    if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");

    std::vector<Index> strides(dims.size());
    Index s = 1;
    for (size_t f = dims.size(); f-- > 0;) {
        strides[f] = s;
        s *= dims[f];
    }
    FactorSplit out;
    for (size_t f = 0; f < dims.size(); ++f) {
        if (kept[f]) {
            out.keep_dims.push_back(dims[f]);
            out.keep_strides.push_back(strides[f]);
            out.keep_total *= dims[f];
        } else {
            out.trace_dims.push_back(dims[f]);
            out.trace_strides.push_back(strides[f]);
            out.trace_total *= dims[f];
        }
    }
    return out;
}

// Enumerate flat offsets of a multi-index set given dims and strides.
std::vector<Index> offsets(const std::vector<Index>& dims, const std::vector<Index>& strides) {
    std::vector<Index> out(1, 0);
    for (size_t f = 0; f < dims.size(); ++f) {
        std::vector<Index> next;
        next.reserve(out.size() * dims[f]);
        for (Index base : out)
            for (Index i = 0; i < dims[f]; ++i) next.push_back(base + i * strides[f]);
        out = std::move(next);
    }
    return out;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    const FactorSplit fs = split_factors(rho.factor_dims, keep);
    const auto koff = offsets(fs.keep_dims, fs.keep_strides);
    const auto toff = offsets(fs.trace_dims, fs.trace_strides);

    DensityMatrix out;
    out.entries = Matrix::Zero(fs.keep_total, fs.keep_total);
    out.factor_dims = fs.keep_dims;
    for (Index i = 0; i < fs.keep_total; ++i)
        for (Index j = 0; j < fs.keep_total; ++j) {
            Complex acc = 0;
            for (Index t : toff) acc += rho.entries(koff[i] + t, koff[j] + t);
            out.entries(i, j) = acc;
        }
    return out;
}

DensityMatrix density_of(const PureState& s) {
    DensityMatrix rho;
    rho.entries = s.amplitudes * s.amplitudes.adjoint();
    rho.factor_dims = s.factor_dims;
    return rho;
}

DensityMatrix reduced_density(const PureState& s, const std::vector<int>& keep) {
    const FactorSplit fs = split_factors(s.factor_dims, keep);
    const auto koff = offsets(fs.keep_dims, fs.keep_strides);
    const auto toff = offsets(fs.trace_dims, fs.trace_strides);

    // Gather amplitudes as a (keep x trace) matrix, then contract the trace axis.
    Matrix c(fs.keep_total, fs.trace_total);
    for (Index i = 0; i < fs.keep_total; ++i)
        for (Index t = 0; t < fs.trace_total; ++t) c(i, t) = s.amplitudes(koff[i] + toff[t]);

    DensityMatrix out;
    out.entries = c * c.adjoint();
    out.factor_dims = fs.keep_dims;
    return out;
}

}  // namespace jt
