#pragma once

#include <Eigen/Dense>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace jt {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Default numerical tolerances. Tests pin these values; callers may
/// adjust the global instance before running a computation.
struct Tolerances {
    double hermiticity = 1e-12;    // relative to max |entry|
    double unit_norm = 1e-12;
    double unit_trace = 1e-10;
    double positivity = 1e-10;     // allowed magnitude of negative eigenvalues
    double eig_residual = 1e-9;    // relative to operator norm
    double degeneracy_gap = 1e-7;
    double commutator = 1e-10;     // relative, interior block
    double convergence = 1e-8;     // truncation doubling loop
};

Tolerances& tolerances();

inline Index dims_product(const std::vector<Index>& dims) {
    Index p = 1;
    for (Index d : dims) {
        if (d <= 0) throw std::invalid_argument("factor dimension must be positive");
        p *= d;
    }
    return p;
}

/// Dense complex operator tagged with its tensor-factor structure.
/// Convention used project-wide: qubit factor first, then oscillator
/// modes in (theta, epsilon) order.
struct OperatorMatrix {
    Matrix entries;
    std::vector<Index> factor_dims;
    bool hermitian_hint = false;

    Index dim() const { return entries.rows(); }

    double max_asymmetry() const {
        return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
    }

    void validate() const {
        if (entries.rows() != entries.cols())
            throw std::invalid_argument("operator matrix must be square");
        if (dims_product(factor_dims) != entries.rows())
            throw std::invalid_argument("factor_dims product does not match matrix dimension");
        if (hermitian_hint) {
            const double scale = entries.cwiseAbs().maxCoeff();
            if (scale > 0 && max_asymmetry() > tolerances().hermiticity * scale)
                throw std::invalid_argument(
                    "hermitian_hint set but max asymmetry is " + std::to_string(max_asymmetry()));
        }
    }
};

struct PureState {
    Vector amplitudes;
    std::vector<Index> factor_dims;

    Index dim() const { return amplitudes.size(); }
    double norm() const { return amplitudes.norm(); }

    void normalize() {
        const double n = norm();
        if (n == 0.0) throw std::invalid_argument("cannot normalize zero state");
        amplitudes /= n;
    }

    void validate() const {
        if (dims_product(factor_dims) != amplitudes.size())
            throw std::invalid_argument("factor_dims product does not match state dimension");
    }
};

struct DensityMatrix {
    Matrix entries;
    std::vector<Index> factor_dims;

    Index dim() const { return entries.rows(); }

    void validate() const {
        if (entries.rows() != entries.cols())
            throw std::invalid_argument("density matrix must be square");
        if (dims_product(factor_dims) != entries.rows())
            throw std::invalid_argument("factor_dims product does not match matrix dimension");
        const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
        if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > tolerances().hermiticity * scale * 10)
            throw std::invalid_argument("density matrix is not Hermitian");
        if (std::abs(entries.trace().real() - 1.0) > tolerances().unit_trace ||
            std::abs(entries.trace().imag()) > tolerances().unit_trace)
            throw std::invalid_argument("density matrix trace is not 1");
    }
};

}  // namespace jt
