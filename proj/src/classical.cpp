#include "jt/classical.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <array>
#include <cmath>

namespace jt {

namespace {

// Eigenvalues of the Jacobian restricted to the tangent space of the
// spin-norm constraint; `spin_offset` is the index of the first spin
// coordinate in the state vector.
template <int N>
Eigen::VectorXcd projected_eigs(const Eigen::Matrix<double, N, N>& jac,
                                const Eigen::Matrix<double, 3, 1>& spin, int spin_offset) {
    Eigen::Matrix<double, 3, 1> n = spin / spin.norm();
    // two orthonormal vectors spanning the tangent plane
    Eigen::Matrix<double, 3, 1> seed =
        std::abs(n(0)) < 0.9 ? Eigen::Matrix<double, 3, 1>(1, 0, 0)
                             : Eigen::Matrix<double, 3, 1>(0, 1, 0);
    Eigen::Matrix<double, 3, 1> e1 = (seed - seed.dot(n) * n).normalized();
    Eigen::Matrix<double, 3, 1> e2 = n.cross(e1);

    Eigen::Matrix<double, N, N - 1> basis = Eigen::Matrix<double, N, N - 1>::Zero();
    for (int i = 0; i < spin_offset; ++i) basis(i, i) = 1.0;
    basis.template block<3, 1>(spin_offset, spin_offset) = e1;
    basis.template block<3, 1>(spin_offset, spin_offset + 1) = e2;
    Eigen::Matrix<double, N - 1, N - 1> reduced = basis.transpose() * jac * basis;
    return Eigen::EigenSolver<Eigen::Matrix<double, N - 1, N - 1>>(reduced).eigenvalues();
}

Stability classify(const Eigen::VectorXcd& eigs) {
    const double tol = 1e-6;
    double max_re = -1e300;
    bool zero_mode = false;
    for (Eigen::Index i = 0; i < eigs.size(); ++i) {
        max_re = std::max(max_re, eigs(i).real());
        if (std::abs(eigs(i)) < tol) zero_mode = true;
    }
    if (max_re > tol) return Stability::unstable;
    return zero_mode ? Stability::marginal : Stability::stable;
}

}  // namespace

std::string to_string(Stability s) {
    switch (s) {
        case Stability::stable: return "stable";
        case Stability::unstable: return "unstable";
        default: return "marginal";
    }
}

// --- one-mode model ------------------------------------------------------

ClassicalStateEb eom_eb(const ClassicalStateEb& s, const EbParams& p) {
    ClassicalStateEb d;
    d.q = s.p;
    d.p = -p.coupling * s.spin_z - p.omega * p.omega * s.q;
    d.spin_x = -p.coupling * s.q * s.spin_y;
    d.spin_y = -p.field * s.spin_z + p.coupling * s.q * s.spin_x;
    d.spin_z = p.field * s.spin_y;
    return d;
}

double energy_eb(const ClassicalStateEb& s, const EbParams& p) {
    return p.field * s.spin_x + p.coupling * s.q * s.spin_z +
           0.5 * (s.p * s.p + p.omega * p.omega * s.q * s.q);
}

Eigen::Matrix<double, 5, 5> jacobian_eb(const ClassicalStateEb& s, const EbParams& p) {
    Eigen::Matrix<double, 5, 5> j = Eigen::Matrix<double, 5, 5>::Zero();
    const double L = p.coupling, w2 = p.omega * p.omega, D = p.field;
    j(0, 1) = 1;
    j(1, 0) = -w2;
    j(1, 4) = -L;
    j(2, 0) = -L * s.spin_y;
    j(2, 3) = -L * s.q;
    j(3, 0) = L * s.spin_x;
    j(3, 2) = L * s.q;
    j(3, 4) = -D;
    j(4, 3) = D;
    return j;
}

ClassicalStateEb integrate_eb(ClassicalStateEb s, const EbParams& p, double t_final, double dt) {
    if (dt <= 0 || t_final < 0) throw std::invalid_argument("bad integration interval");
    auto axpy = [](const ClassicalStateEb& a, double h, const ClassicalStateEb& b) {
        return ClassicalStateEb{a.q + h * b.q, a.p + h * b.p, a.spin_x + h * b.spin_x,
                                a.spin_y + h * b.spin_y, a.spin_z + h * b.spin_z};
    };
    const long steps = std::lround(t_final / dt);
    for (long i = 0; i < steps; ++i) {
        const ClassicalStateEb k1 = eom_eb(s, p);
        const ClassicalStateEb k2 = eom_eb(axpy(s, 0.5 * dt, k1), p);
        const ClassicalStateEb k3 = eom_eb(axpy(s, 0.5 * dt, k2), p);
        const ClassicalStateEb k4 = eom_eb(axpy(s, dt, k3), p);
        s = axpy(s, dt / 6.0, axpy(k1, 1.0, axpy(k4, 2.0, axpy(k2, 1.0, k3))));
    }
    return s;
}

std::vector<FixedPointEb> fixed_points_eb(const EbParams& p) {
    p.validate();
    std::vector<FixedPointEb> out;
    auto push = [&](ClassicalStateEb s, const std::string& branch) {
        FixedPointEb fp;
        fp.state = s;
        fp.branch = branch;
        const ClassicalStateEb d = eom_eb(s, p);
        fp.residual = std::max({std::abs(d.q), std::abs(d.p), std::abs(d.spin_x),
                                std::abs(d.spin_y), std::abs(d.spin_z)});
        if (fp.residual > 1e-10)
            throw std::runtime_error("fixed point " + branch + " failed residual check: " +
                                     std::to_string(fp.residual));
        fp.jacobian_eigs = projected_eigs<5>(
            jacobian_eb(s, p), Eigen::Vector3d(s.spin_x, s.spin_y, s.spin_z), 2);
        fp.stability = classify(fp.jacobian_eigs);
        out.push_back(std::move(fp));
    };
    push({0, 0, 1, 0, 0}, "origin+");
    push({0, 0, -1, 0, 0}, "origin-");
    const double w2 = p.omega * p.omega;
    if (p.coupling * p.coupling > p.field * w2 && p.coupling > 0) {
        const double sx = -p.field * w2 / (p.coupling * p.coupling);
        const double sz = std::sqrt(1.0 - sx * sx);
        push({-(p.coupling / w2) * sz, 0, sx, 0, sz}, "emergent+");
        push({(p.coupling / w2) * sz, 0, sx, 0, -sz}, "emergent-");
    }
    return out;
}

double bifurcation_threshold_eb(const EbParams& p) {
    p.validate();
    if (p.field == 0) return 0.0;
    auto exists = [&](double coupling) {
        return coupling * coupling > p.field * p.omega * p.omega;
    };
    double lo = 0.0, hi = std::max(1.0, 4.0 * std::sqrt(p.field) * p.omega);
    while (!exists(hi)) hi *= 2;
    while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        (exists(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<BifurcationPoint> bifurcation_diagram_eb(EbParams p, double l_min, double l_max,
                                                     int count) {
    if (count < 2 || l_min >= l_max || l_min < 0)
        throw std::invalid_argument("bad bifurcation grid");
    std::vector<BifurcationPoint> rows;
    for (int i = 0; i < count; ++i) {
        p.coupling = l_min + (l_max - l_min) * i / (count - 1.0);
        for (const FixedPointEb& fp : fixed_points_eb(p))
            rows.push_back({p.coupling, fp.branch, fp.state.q, fp.state.spin_x, fp.state.spin_z,
                            fp.stability});
    }
    return rows;
}

// --- two-mode model ------------------------------------------------------

ClassicalStateEe eom_ee(const ClassicalStateEe& s, const EeParams& p) {
    const double half = 0.5 * p.coupling;
    const double ht = half * s.q_theta, he = half * s.q_eps, hw = p.field;
    ClassicalStateEe d;
    d.q_theta = p.omega * s.p_theta;
    d.q_eps = p.omega * s.p_eps;
    d.p_theta = -p.omega * s.q_theta - half * s.spin_theta;
    d.p_eps = -p.omega * s.q_eps - half * s.spin_eps;
    // sdot = h x s
    d.spin_theta = he * s.spin_w - hw * s.spin_eps;
    d.spin_eps = hw * s.spin_theta - ht * s.spin_w;
    d.spin_w = ht * s.spin_eps - he * s.spin_theta;
    return d;
}

double energy_ee(const ClassicalStateEe& s, const EeParams& p) {
    return 0.5 * p.omega * (s.p_theta * s.p_theta + s.q_theta * s.q_theta +
                            s.p_eps * s.p_eps + s.q_eps * s.q_eps) +
           0.5 * p.coupling * (s.q_theta * s.spin_theta + s.q_eps * s.spin_eps) +
           p.field * s.spin_w;
}

Eigen::Matrix<double, 7, 7> jacobian_ee(const ClassicalStateEe& s, const EeParams& p) {
    // order: q_t, q_e, p_t, p_e, s_t, s_e, s_w
    Eigen::Matrix<double, 7, 7> j = Eigen::Matrix<double, 7, 7>::Zero();
    const double half = 0.5 * p.coupling, w = p.omega, D = p.field;
    j(0, 2) = w;
    j(1, 3) = w;
    j(2, 0) = -w;
    j(2, 4) = -half;
    j(3, 1) = -w;
    j(3, 5) = -half;
    // d(s_t)dot = (L/2) q_e s_w - D s_e
    j(4, 1) = half * s.spin_w;
    j(4, 5) = -D;
    j(4, 6) = half * s.q_eps;
    // d(s_e)dot = D s_t - (L/2) q_t s_w
    j(5, 0) = -half * s.spin_w;
    j(5, 4) = D;
    j(5, 6) = -half * s.q_theta;
    // d(s_w)dot = (L/2)(q_t s_e - q_e s_t)
    j(6, 0) = half * s.spin_eps;
    j(6, 1) = -half * s.spin_theta;
    j(6, 4) = -half * s.q_eps;
    j(6, 5) = half * s.q_theta;
    return j;
}

ClassicalStateEe integrate_ee(ClassicalStateEe s, const EeParams& p, double t_final, double dt) {
    if (dt <= 0 || t_final < 0) throw std::invalid_argument("bad integration interval");
    auto axpy = [](const ClassicalStateEe& a, double h, const ClassicalStateEe& b) {
        return ClassicalStateEe{a.q_theta + h * b.q_theta, a.q_eps + h * b.q_eps,
                                a.p_theta + h * b.p_theta, a.p_eps + h * b.p_eps,
                                a.spin_theta + h * b.spin_theta, a.spin_eps + h * b.spin_eps,
                                a.spin_w + h * b.spin_w};
    };
    const long steps = std::lround(t_final / dt);
    for (long i = 0; i < steps; ++i) {
        const ClassicalStateEe k1 = eom_ee(s, p);
        const ClassicalStateEe k2 = eom_ee(axpy(s, 0.5 * dt, k1), p);
        const ClassicalStateEe k3 = eom_ee(axpy(s, 0.5 * dt, k2), p);
        const ClassicalStateEe k4 = eom_ee(axpy(s, dt, k3), p);
        s = axpy(s, dt / 6.0, axpy(k1, 1.0, axpy(k4, 2.0, axpy(k2, 1.0, k3))));
    }
    return s;
}

namespace {

double residual_ee(const ClassicalStateEe& s, const EeParams& p) {
    const ClassicalStateEe d = eom_ee(s, p);
    return std::max({std::abs(d.q_theta), std::abs(d.q_eps), std::abs(d.p_theta),
                     std::abs(d.p_eps), std::abs(d.spin_theta), std::abs(d.spin_eps),
                     std::abs(d.spin_w)});
}

// Least-squares Newton refinement within the spin-constraint tangent space;
// returns the total correction magnitude.
double newton_refine_ee(ClassicalStateEe& s, const EeParams& p) {
    double moved = 0.0;
    for (int it = 0; it < 50 && residual_ee(s, p) > 1e-12; ++it) {
        const ClassicalStateEe d = eom_ee(s, p);
        Eigen::Matrix<double, 7, 1> f;
        f << d.q_theta, d.q_eps, d.p_theta, d.p_eps, d.spin_theta, d.spin_eps, d.spin_w;
        const Eigen::Matrix<double, 7, 7> j = jacobian_ee(s, p);
        const Eigen::Matrix<double, 7, 1> step =
            j.jacobiSvd(Eigen::ComputeFullU | Eigen::ComputeFullV)
                .setThreshold(1e-8)
                .solve(-f);
        s.q_theta += step(0);
        s.q_eps += step(1);
        s.p_theta += step(2);
        s.p_eps += step(3);
        s.spin_theta += step(4);
        s.spin_eps += step(5);
        s.spin_w += step(6);
        const double n = s.spin_norm();
        s.spin_theta /= n;
        s.spin_eps /= n;
        s.spin_w /= n;
        moved += step.norm();
    }
    return moved;
}

}  // namespace

std::vector<FixedPointEe> fixed_points_ee(const EeParams& p, int ring_samples) {
    p.validate();
    if (ring_samples < 1) throw std::invalid_argument("ring_samples must be positive");
    std::vector<FixedPointEe> out;
    auto push = [&](ClassicalStateEe s, const std::string& branch) {
        FixedPointEe fp;
        fp.branch = branch;
        double res = residual_ee(s, p);
        if (res > 1e-10) {
            fp.newton_correction = newton_refine_ee(s, p);
            res = residual_ee(s, p);
            if (res > 1e-10)
                throw std::runtime_error("fixed point " + branch +
                                         " failed residual check: " + std::to_string(res));
        }
        fp.state = s;
        fp.residual = res;
        fp.jacobian_eigs = projected_eigs<7>(
            jacobian_ee(s, p), Eigen::Vector3d(s.spin_theta, s.spin_eps, s.spin_w), 4);
        fp.stability = classify(fp.jacobian_eigs);
        out.push_back(std::move(fp));
    };

    push({0, 0, 0, 0, 0, 0, 1}, "origin+");
    push({0, 0, 0, 0, 0, 0, -1}, "origin-");

    const double radius = p.coupling / (2.0 * p.omega);
    if (p.field == 0.0 && p.coupling > 0) {
        for (int k = 0; k < ring_samples; ++k) {
            const double phi = 2.0 * 3.14159265358979323846 * k / ring_samples;
            const double st = std::cos(phi), se = std::sin(phi);
            push({-radius * st, -radius * se, 0, 0, st, se, 0},
                 "ring@" + std::to_string(k));
        }
    } else if (p.field > 0 && p.coupling * p.coupling >= 4.0 * p.omega * p.field) {
        const double sw = -4.0 * p.omega * p.field / (p.coupling * p.coupling);
        const double sr = std::sqrt(1.0 - sw * sw);
        const double scale = radius * sr;
        push({-scale, 0, 0, 0, sr, 0, sw}, "emergent+theta");
        push({scale, 0, 0, 0, -sr, 0, sw}, "emergent-theta");
        push({0, -scale, 0, 0, 0, sr, sw}, "emergent+eps");
        push({0, scale, 0, 0, 0, -sr, sw}, "emergent-eps");
    }
    return out;
}

EeThreshold bifurcation_threshold_ee(const EeParams& p) {
    p.validate();
    EeThreshold out;
    out.candidate_quartic = 2.0 * std::sqrt(p.omega * p.field);
    out.candidate_printed = 4.0 * p.omega * p.field;
    if (p.field == 0) return out;
    // continuation in L: the displaced branch exists when the axis fixed
    // point admits a residual-verified solution
    auto exists = [&](double coupling) {
        EeParams q = p;
        q.coupling = coupling;
        const double sw = -4.0 * q.omega * q.field / (coupling * coupling);
        if (std::abs(sw) > 1.0) return false;
        const double sr = std::sqrt(1.0 - sw * sw);
        const double scale = coupling / (2.0 * q.omega) * sr;
        ClassicalStateEe s{-scale, 0, 0, 0, sr, 0, sw};
        return residual_ee(s, q) <= 1e-10;
    };
    double lo = 1e-6, hi = std::max(1.0, 4.0 * out.candidate_quartic);
    while (!exists(hi)) hi *= 2;
    while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        (exists(mid) ? hi : lo) = mid;
    }
    out.threshold = 0.5 * (lo + hi);
    return out;
}

}  // namespace jt
