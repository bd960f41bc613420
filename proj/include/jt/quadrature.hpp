#pragma once

#include <Eigen/Dense>
#include <functional>

namespace jt {

/// Adaptive Simpson quadrature on [a, b] with an absolute tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10);

/// Generalized Gauss-Laguerre rule: integrates f(u) u^alpha e^{-u} on [0, inf)
/// exactly for polynomial f up to degree 2n-1. Nodes/weights via Golub-Welsch.
struct GaussLaguerre {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

GaussLaguerre gauss_laguerre(int n, double alpha);

/// Generalized Laguerre polynomial L_n^{(alpha)}(x) by recurrence.
double laguerre(int n, double alpha, double x);

}  // namespace jt
