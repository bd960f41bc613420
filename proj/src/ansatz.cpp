#include "jt/ansatz.hpp"

#include "jt/quadrature.hpp"

#include <cmath>

namespace jt {

namespace {

const double kPi = 3.14159265358979323846;

double radial_qmax(double kappa) { return 10.0 + 6.0 * kappa; }

}  // namespace

Complex amplitude_A(double q, double phi, const AnsatzParams& p) {
    if (q < 0) throw std::invalid_argument("radial coordinate must be nonnegative");
    const double k = p.kappa();
    return std::exp(-0.5 * q * q) *
           (std::cosh(q * k) + std::exp(Complex(0, phi)) * std::sinh(q * k));
}

Complex amplitude_B(double q, double phi, const AnsatzParams& p) {
    if (q < 0) throw std::invalid_argument("radial coordinate must be nonnegative");
    const double k = p.kappa();
    return std::exp(-0.5 * q * q) *
           (std::cosh(q * k) - std::exp(Complex(0, phi)) * std::sinh(q * k));
}

double normalization(const AnsatzParams& p) {
    p.validate();
    const double k = p.kappa();
    return kPi * std::exp(-2.0 * k * k) *
           (1.0 + std::exp(k * k) * k * std::sqrt(kPi) * std::erf(k));
}

double coherence_factor(const AnsatzParams& p) {
    p.validate();
    const double k = p.kappa();
    return 1.0 / (1.0 + std::exp(k * k) * k * std::sqrt(kPi) * std::erf(k));
}

DensityMatrix single_state_density(const AnsatzParams& p) {
    const double c = coherence_factor(p);
    DensityMatrix rho;
    rho.factor_dims = {2};
    rho.entries = Matrix(2, 2);
    rho.entries << 0.5, Complex(0, 0.5 * c), Complex(0, -0.5 * c), 0.5;
    return rho;
}

double superposition_gamma(const SuperpositionSpec& s, const AnsatzParams& p) {
    s.validate();
    const double c = coherence_factor(p);
    const double c1 = s.c1, c2 = s.c2();
    const double d = c1 * c1 - c2 * c2;
    return 1.0 - c1 * c1 * c2 * c2 * (1.0 + c) * (1.0 + c) - d * d * c * c;
}

DensityMatrix superposition_density(const SuperpositionSpec& s, const AnsatzParams& p) {
    s.validate();
    const double c = coherence_factor(p);
    const double c1 = s.c1, c2 = s.c2();
    const Complex r00 = 0.5 * (1.0 + c1 * c2 * std::cos(s.gamma) * (1.0 + c));
    const Complex r01 = Complex(0, 0.5) * (c1 * c1 - c2 * c2) * c -
                        0.5 * c1 * c2 * std::sin(s.gamma) * (1.0 + c);
    DensityMatrix rho;
    rho.factor_dims = {2};
    rho.entries = Matrix(2, 2);
    rho.entries << r00, r01, std::conj(r01), 1.0 - r00;
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.entries);
    if (es.eigenvalues().minCoeff() < -tolerances().positivity)
        throw std::runtime_error("superposition density lost positivity: min eigenvalue " +
                                 std::to_string(es.eigenvalues().minCoeff()));
    return rho;
}

double bell_overlap(const AnsatzParams& p) {
    p.validate();
    // In the sigma_varpi eigenbasis the state is proportional to
    // e^{-q^2/2}[cosh(q kappa)|-,0>_phi + sinh(q kappa)|+,1>_phi]; the
    // two-qubit reduction over q is the Gram matrix of the radial profiles.
    const double k = p.kappa();
    const double qmax = radial_qmax(k);
    auto damp = [](double q) { return std::exp(-q * q); };
    const double a =
        integrate([&](double q) { return damp(q) * std::pow(std::cosh(k * q), 2) * q; }, 0, qmax);
    const double b =
        integrate([&](double q) { return damp(q) * std::pow(std::sinh(k * q), 2) * q; }, 0, qmax);
    const double c = integrate(
        [&](double q) { return damp(q) * std::cosh(k * q) * std::sinh(k * q) * q; }, 0, qmax);
    return 0.5 * (1.0 + 2.0 * c / (a + b));
}

BellCheckReport large_coupling_bell_check(const AnsatzParams& p) {
    p.validate();
    const double k = p.kappa();
    if (k < 3.0)
        throw std::invalid_argument("large_coupling_bell_check requires kappa >= 3, got " +
                                    std::to_string(k));
    BellCheckReport rep;
    rep.kappa = k;
    rep.overlap = bell_overlap(p);
    rep.passed = rep.overlap >= 0.99;
    return rep;
}

}  // namespace jt
