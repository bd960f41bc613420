#include "jt/entanglement.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>

namespace jt {

double binary_entropy(double x) {
    if (x < -1e-12 || x > 1.0 + 1e-12)
        throw std::invalid_argument("binary_entropy argument outside [0, 1]");
    x = std::clamp(x, 0.0, 1.0);
    double s = 0.0;
    if (x > 0) s -= x * std::log2(x);
    if (x < 1) s -= (1.0 - x) * std::log2(1.0 - x);
    return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    rho.validate();
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.entries, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Index i = 0; i < es.eigenvalues().size(); ++i) {
        double p = es.eigenvalues()(i);
        if (p < -tolerances().positivity)
            throw std::invalid_argument("von_neumann_entropy: eigenvalue " + std::to_string(p) +
                                        " below positivity tolerance");
        if (p <= 0) continue;
        s -= p * std::log2(p);
    }
    return std::max(0.0, s);
}

double concurrence(const DensityMatrix& rho) {
    rho.validate();
    if (rho.dim() != 4) throw std::invalid_argument("concurrence requires a two-qubit state");
    Matrix yy(4, 4);
    yy.setZero();
    // sigma_y (x) sigma_y
    yy(0, 3) = -1;
    yy(1, 2) = 1;
    yy(2, 1) = 1;
    yy(3, 0) = -1;
    // Hermitian route: the l_i are the eigenvalues of
    // R = sqrt(sqrt(rho) rho~ sqrt(rho)), which a symmetric solver resolves
    // far more accurately than the non-Hermitian product rho rho~.
    const Matrix tilde = yy * rho.entries.conjugate() * yy;
    Eigen::SelfAdjointEigenSolver<Matrix> es_rho(rho.entries);
    Matrix sqrt_rho = Matrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) {
        const double p = std::max(0.0, es_rho.eigenvalues()(i));
        sqrt_rho += std::sqrt(p) * es_rho.eigenvectors().col(i) *
                    es_rho.eigenvectors().col(i).adjoint();
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(sqrt_rho * tilde * sqrt_rho));
    // eigenvalues at rounding-noise level would blow up to ~1e-8 under the
    // square root; clip them relative to the largest
    const double floor = 1e-13 * std::max(0.0, es.eigenvalues().maxCoeff());
    std::array<double, 4> l{};
    for (int i = 0; i < 4; ++i) {
        const double v = es.eigenvalues()(i);
        l[i] = v > floor ? std::sqrt(v) : 0.0;
    }
    std::sort(l.begin(), l.end(), std::greater<double>());
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double tangle_to_entropy(double tau) {
    if (tau < -1e-12 || tau > 1.0 + 1e-12)
        throw std::invalid_argument("tangle outside [0, 1]");
    tau = std::clamp(tau, 0.0, 1.0);
    return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - tau)));
}

double entanglement_gap(const PureState& s, const EeParams& p) {
    const double full = von_neumann_entropy(reduced_density(s, {0}));
    const AngularReduction red = angular_qubit_reduction(s, p);
    const double c = concurrence(red.two_qubit);
    return full - tangle_to_entropy(c * c);
}

}  // namespace jt
