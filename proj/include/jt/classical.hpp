#pragma once

#include "jt/eb_model.hpp"
#include "jt/ee_model.hpp"

#include <string>
#include <vector>

namespace jt {

enum class Stability { stable, unstable, marginal };

std::string to_string(Stability s);

// --- one-mode model ------------------------------------------------------

struct ClassicalStateEb {
    double q = 0, p = 0;
    double spin_x = 0, spin_y = 0, spin_z = 0;

    double spin_norm() const {
        return std::sqrt(spin_x * spin_x + spin_y * spin_y + spin_z * spin_z);
    }
};

/// Equations of motion: qdot = p, pdot = -L s_z - w^2 q, sdot_x = -L q s_y,
/// sdot_y = -Delta s_z + L q s_x, sdot_z = Delta s_y.
ClassicalStateEb eom_eb(const ClassicalStateEb& s, const EbParams& p);

/// H_cl = Delta s_x + L q s_z + (p^2 + w^2 q^2)/2.
double energy_eb(const ClassicalStateEb& s, const EbParams& p);

Eigen::Matrix<double, 5, 5> jacobian_eb(const ClassicalStateEb& s, const EbParams& p);

/// Fixed-step RK4 over [0, t_final].
ClassicalStateEb integrate_eb(ClassicalStateEb s, const EbParams& p, double t_final, double dt);

struct FixedPointEb {
    ClassicalStateEb state;
    Stability stability = Stability::marginal;
    Eigen::VectorXcd jacobian_eigs;  // constraint-tangent-projected
    double residual = 0.0;
    std::string branch;  // "origin+", "origin-", "emergent+", "emergent-"
};

/// The two spin-polarized origin points, plus (when L^2 > Delta w^2) the two
/// emergent displaced points with s_x = -Delta w^2 / L^2 and
/// q = -(L/w^2) s_z. Every returned point has EOM residual <= 1e-10.
std::vector<FixedPointEb> fixed_points_eb(const EbParams& p);

/// Pitchfork threshold in L located by bisection on emergent-branch
/// existence, resolution 1e-8.
double bifurcation_threshold_eb(const EbParams& p);

struct BifurcationPoint {
    double coupling = 0.0;
    std::string branch;
    double q = 0.0;
    double spin_x = 0.0, spin_z = 0.0;
    Stability stability = Stability::marginal;
};

std::vector<BifurcationPoint> bifurcation_diagram_eb(EbParams p, double l_min, double l_max,
                                                    int count);

// --- two-mode model ------------------------------------------------------

struct ClassicalStateEe {
    double q_theta = 0, q_eps = 0, p_theta = 0, p_eps = 0;
    double spin_theta = 0, spin_eps = 0, spin_w = 0;

    double spin_norm() const {
        return std::sqrt(spin_theta * spin_theta + spin_eps * spin_eps + spin_w * spin_w);
    }
};

/// From H_cl = w(p_t^2+q_t^2+p_e^2+q_e^2)/2 + (L/2)(q_t s_t + q_e s_e)
///            + Delta s_w, with sdot = h x s, h = ((L/2)q_t, (L/2)q_e, Delta).
ClassicalStateEe eom_ee(const ClassicalStateEe& s, const EeParams& p);

double energy_ee(const ClassicalStateEe& s, const EeParams& p);

Eigen::Matrix<double, 7, 7> jacobian_ee(const ClassicalStateEe& s, const EeParams& p);

ClassicalStateEe integrate_ee(ClassicalStateEe s, const EeParams& p, double t_final, double dt);

struct FixedPointEe {
    ClassicalStateEe state;
    Stability stability = Stability::marginal;
    Eigen::VectorXcd jacobian_eigs;
    double residual = 0.0;
    double newton_correction = 0.0;  // nonzero if the seed needed refinement
    std::string branch;              // "origin+", "origin-", "ring", "emergent..."
};

/// Delta = 0: the two origin points plus a sampled ring of radius L/(2w);
/// Delta > 0: the origin pair plus, when L^2 >= 4 w Delta, the four axis
/// points with s_w = -4 w Delta / L^2. All residual-verified.
std::vector<FixedPointEe> fixed_points_ee(const EeParams& p, int ring_samples = 8);

struct EeThreshold {
    double threshold = 0.0;            // located by continuation/bisection
    double candidate_quartic = 0.0;    // L = 2 sqrt(w Delta)  (L^2 = 4 w Delta)
    double candidate_printed = 0.0;    // L = 4 w Delta        (L^2 = 16 w^2 Delta^2)
};

EeThreshold bifurcation_threshold_ee(const EeParams& p);

}  // namespace jt
