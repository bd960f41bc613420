#include "jt/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace jt {

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b,
               double fb, double m, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa, double b, double fb,
             double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, lm, flm);
    const double right = simpson(f, m, fm, b, fb, rm, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol) {
    if (a == b) return 0.0;
    // seed with a few panels so narrow features are not missed
    const int panels = 16;
    double total = 0.0;
    const double h = (b - a) / panels;
    for (int i = 0; i < panels; ++i) {
        const double x0 = a + i * h, x1 = x0 + h, xm = 0.5 * (x0 + x1);
        const double f0 = f(x0), f1 = f(x1), fm = f(xm);
        // depth 20 bounds the work when round-off keeps the error estimate
        // above an aggressive tolerance
        total += adapt(f, x0, f0, x1, f1, xm, fm, simpson(f, x0, f0, x1, f1, xm, fm),
                       abs_tol / panels, 20);
    }
    return total;
}

GaussLaguerre gauss_laguerre(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("gauss_laguerre: need at least one node");
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        jac(k, k) = 2.0 * k + alpha + 1.0;
        if (k > 0) {
            const double off = std::sqrt(k * (k + alpha));
            jac(k, k - 1) = off;
            jac(k - 1, k) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    GaussLaguerre rule;
    rule.nodes = es.eigenvalues();
    rule.weights.resize(n);
    const double mu0 = std::tgamma(alpha + 1.0);
    for (int k = 0; k < n; ++k) {
        const double v0 = es.eigenvectors()(0, k);
        rule.weights(k) = mu0 * v0 * v0;
    }
    return rule;
}

double laguerre(int n, double alpha, double x) {
    if (n == 0) return 1.0;
    double lm1 = 1.0, l = 1.0 + alpha - x;
    for (int k = 2; k <= n; ++k) {
        const double next = ((2.0 * k - 1.0 + alpha - x) * l - (k - 1.0 + alpha) * lm1) / k;
        lm1 = l;
        l = next;
    }
    return l;
}

}  // namespace jt
