#include "jt/ee_model.hpp"

#include "jt/quadrature.hpp"

#include <Eigen/SparseCore>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace jt {

namespace {

using SparseMatrix = Eigen::SparseMatrix<Complex>;
using Triplet = Eigen::Triplet<Complex>;

void fix_phase(Vector& v) {
    Index k = 0;
    v.cwiseAbs().maxCoeff(&k);
    const Complex a = v(k);
    if (std::abs(a) > 0) v *= std::conj(a) / std::abs(a);
}

Index flat(int spin, int na, int nb, int d) { return Index(spin) * d * d + Index(na) * d + nb; }

SparseMatrix sparse_hamiltonian(const EeParams& p) {
    const int d = p.fock + 1;
    const double g = p.coupling / (2.0 * std::sqrt(2.0));
    std::vector<Triplet> trip;
    trip.reserve(size_t(8) * 2 * d * d);
    for (int s = 0; s < 2; ++s) {
        const double stheta = (s == 0) ? -1.0 : 1.0;
        for (int na = 0; na < d; ++na)
            for (int nb = 0; nb < d; ++nb) {
                const Index i = flat(s, na, nb, d);
                trip.emplace_back(i, i, p.omega * (na + nb + 1.0));
                // theta-mode coupling, diagonal in spin via sigma_theta
                if (na + 1 < d)
                    trip.emplace_back(flat(s, na + 1, nb, d), i, g * stheta * std::sqrt(na + 1.0));
                if (na > 0)
                    trip.emplace_back(flat(s, na - 1, nb, d), i, g * stheta * std::sqrt(double(na)));
                // epsilon-mode coupling, spin flip via sigma_epsilon
                if (nb + 1 < d)
                    trip.emplace_back(flat(1 - s, na, nb + 1, d), i, g * std::sqrt(nb + 1.0));
                if (nb > 0)
                    trip.emplace_back(flat(1 - s, na, nb - 1, d), i, g * std::sqrt(double(nb)));
                // transverse field along varpi: sigma entries (0,1)=i, (1,0)=-i
                if (p.field != 0.0)
                    trip.emplace_back(flat(1 - s, na, nb, d), i,
                                      Complex(0, s == 1 ? 1.0 : -1.0) * p.field);
            }
    }
    SparseMatrix h(2 * d * d, 2 * d * d);
    h.setFromTriplets(trip.begin(), trip.end());
    return h;
}

// One total-occupation shell of the two-mode space, rotated to the circular
// (angular momentum) basis. Full shells carry exact integer m; shells cut by
// the box truncation are diagonalized as-is and their m values are only
// approximate (they hold negligible weight in converged states).
struct Shell {
    int n = 0;
    std::vector<std::pair<int, int>> states;  // (na, nb), na descending
    Matrix u;                                 // columns: circular states
    Eigen::VectorXd m;                        // ascending angular momentum
};

std::vector<Shell> circular_shells(int fock) {
    const int d = fock + 1;
    std::vector<Shell> shells;
    shells.reserve(2 * fock + 1);
    for (int n = 0; n <= 2 * fock; ++n) {
        Shell sh;
        sh.n = n;
        for (int na = std::min(n, fock); na >= std::max(0, n - fock); --na)
            sh.states.emplace_back(na, n - na);
        const int s = int(sh.states.size());
        Matrix lw = Matrix::Zero(s, s);
        for (int k = 0; k < s; ++k) {
            const auto [na, nb] = sh.states[k];
            // i(a b^dag - a^dag b): note states are ordered by descending na
            if (k + 1 < s) lw(k + 1, k) = Complex(0, 1) * std::sqrt(double(na) * (nb + 1.0));
            if (k > 0) lw(k - 1, k) = Complex(0, -1) * std::sqrt((na + 1.0) * double(nb));
        }
        Eigen::SelfAdjointEigenSolver<Matrix> es(lw);
        sh.u = es.eigenvectors();
        sh.m = es.eigenvalues();
        // pin each column's phase: the largest-na component real positive,
        // matching the analytic circular-state convention
        for (int k = 0; k < s; ++k) {
            const Complex ref = sh.u(0, k);
            if (std::abs(ref) > 1e-14) sh.u.col(k) *= std::conj(ref) / std::abs(ref);
        }
        shells.push_back(std::move(sh));
    }
    return shells;
}

// sigma_varpi eigenvectors over (down, up): (1, -i)/sqrt(2) -> +1,
// (1, +i)/sqrt(2) -> -1.
Complex spin_component(int sigma, int qubit_index) {
    const double r = 1.0 / std::sqrt(2.0);
    if (qubit_index == 0) return r;
    return Complex(0, sigma > 0 ? -r : r);
}

struct BlockedBasis {
    SparseMatrix v;             // full_dim x full_dim, columns sorted by j
    std::vector<double> jvals;  // per column
    std::vector<std::pair<int, int>> clusters;  // [begin, end) column ranges
};

BlockedBasis blocked_basis(const EeParams& p) {
    const int d = p.fock + 1;
    const Index dim = 2 * Index(d) * d;
    const auto shells = circular_shells(p.fock);

    struct Col {
        double j;
        int sigma, shell, k;
    };
    std::vector<Col> cols;
    cols.reserve(size_t(dim));
    for (int sigma : {+1, -1})
        for (size_t sh = 0; sh < shells.size(); ++sh)
            for (int k = 0; k < int(shells[sh].states.size()); ++k)
                cols.push_back({shells[sh].m(k) + 0.5 * sigma, sigma, int(sh), k});
    std::stable_sort(cols.begin(), cols.end(),
                     [](const Col& a, const Col& b) { return a.j < b.j; });

    BlockedBasis out;
    out.jvals.reserve(cols.size());
    std::vector<Triplet> trip;
    for (Index c = 0; c < Index(cols.size()); ++c) {
        const Col& col = cols[c];
        const Shell& sh = shells[col.shell];
        out.jvals.push_back(col.j);
        for (int q = 0; q < 2; ++q) {
            const Complex sq = spin_component(col.sigma, q);
            for (int r = 0; r < int(sh.states.size()); ++r) {
                const auto [na, nb] = sh.states[r];
                const Complex amp = sq * sh.u(r, col.k);
                if (std::abs(amp) > 0) trip.emplace_back(flat(q, na, nb, d), c, amp);
            }
        }
    }
    out.v.resize(dim, dim);
    out.v.setFromTriplets(trip.begin(), trip.end());

    int begin = 0;
    for (int c = 1; c <= int(cols.size()); ++c) {
        if (c == int(cols.size()) || out.jvals[c] - out.jvals[c - 1] > 1e-6) {
            out.clusters.emplace_back(begin, c);
            begin = c;
        }
    }
    return out;
}

struct BlockedLevel {
    double energy;
    int cluster;
    int index;  // position within the cluster spectrum
};

struct BlockedSpectra {
    BlockedBasis basis;
    SparseMatrix h;
    std::vector<BlockedLevel> levels;              // ascending energy
    std::vector<Eigen::VectorXd> cluster_values;   // per cluster
};

BlockedSpectra blocked_solve(const EeParams& p) {
    BlockedSpectra out;
    out.basis = blocked_basis(p);
    out.h = sparse_hamiltonian(p);
    out.cluster_values.resize(out.basis.clusters.size());
    for (size_t c = 0; c < out.basis.clusters.size(); ++c) {
        const auto [b, e] = out.basis.clusters[c];
        const SparseMatrix vc = out.basis.v.middleCols(b, e - b);
        const SparseMatrix hv = out.h * vc;
        Matrix block = Matrix(SparseMatrix(vc.adjoint() * hv));
        block = 0.5 * (block + block.adjoint().eval());
        Eigen::SelfAdjointEigenSolver<Matrix> es(block, Eigen::EigenvaluesOnly);
        out.cluster_values[c] = es.eigenvalues();
        for (int i = 0; i < es.eigenvalues().size(); ++i)
            out.levels.push_back({es.eigenvalues()(i), int(c), i});
    }
    std::stable_sort(out.levels.begin(), out.levels.end(),
                     [](const BlockedLevel& a, const BlockedLevel& b) {
                         return a.energy < b.energy;
                     });
    return out;
}

// Re-solve one cluster for an eigenvector in the full Fock basis.
Vector cluster_vector(const BlockedSpectra& sp, int cluster, int index) {
    const auto [b, e] = sp.basis.clusters[cluster];
    const SparseMatrix vc = sp.basis.v.middleCols(b, e - b);
    const SparseMatrix hv = sp.h * vc;
    Matrix block = Matrix(SparseMatrix(vc.adjoint() * hv));
    block = 0.5 * (block + block.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Matrix> es(block);
    Vector full = vc * es.eigenvectors().col(index);
    fix_phase(full);
    return full;
}

double cluster_j(const BlockedSpectra& sp, int cluster) {
    const auto [b, e] = sp.basis.clusters[cluster];
    double acc = 0;
    for (int c = b; c < e; ++c) acc += sp.basis.jvals[c];
    return acc / (e - b);
}

double qubit_entropy_bits(const PureState& psi) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(reduced_density(psi, {0}).entries);
    double s = 0.0;
    for (Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double lam = es.eigenvalues()(i);
        if (lam > 1e-300) s -= lam * std::log2(lam);
    }
    return s;
}

int resolve_fock_cap(int fock_max, int fallback) {
    if (fock_max > 0) return fock_max;
    if (const char* env = std::getenv("JT_FOCK_MAX")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return fallback;
}

}  // namespace

OperatorMatrix build_hamiltonian_two_mode(const EeParams& p) {
    p.validate();
    const int d = p.fock + 1;
    OperatorMatrix h;
    h.factor_dims = {2, d, d};
    h.hermitian_hint = true;
    h.entries = Matrix(sparse_hamiltonian(p));
    return h;
}

OperatorMatrix angular_momentum_w(const EeParams& p) {
    p.validate();
    const int d = p.fock + 1;
    const Matrix a = annihilation(p.fock);
    auto op = [](const Matrix& m) { return OperatorMatrix{m, {m.rows()}, false}; };
    const Matrix lw_modes =
        Complex(0, 1) *
        (kron(op(a), op(a.adjoint())).entries - kron(op(a.adjoint()), op(a)).entries);
    OperatorMatrix out;
    out.factor_dims = {2, d, d};
    out.hermitian_hint = true;
    out.entries = Matrix::Zero(2 * d * d, 2 * d * d);
    out.entries.block(0, 0, d * d, d * d) = lw_modes;
    out.entries.block(d * d, d * d, d * d, d * d) = lw_modes;
    return out;
}

double interior_commutator(const OperatorMatrix& a, const OperatorMatrix& b, int max_total) {
    if (a.factor_dims != b.factor_dims)
        throw std::invalid_argument("interior_commutator: factor layouts differ");
    if (a.factor_dims.size() != 3 || a.factor_dims[0] != 2 ||
        a.factor_dims[1] != a.factor_dims[2])
        throw std::invalid_argument("interior_commutator: expected (2, d, d) layout");
    const int d = int(a.factor_dims[1]);
    const Matrix comm = a.entries * b.entries - b.entries * a.entries;
    std::vector<Index> interior;
    for (int s = 0; s < 2; ++s)
        for (int na = 0; na < d; ++na)
            for (int nb = 0; nb < d; ++nb)
                if (na + nb <= max_total) interior.push_back(flat(s, na, nb, d));
    double worst = 0.0;
    for (Index i : interior)
        for (Index j : interior) worst = std::max(worst, std::abs(comm(i, j)));
    return worst / a.entries.cwiseAbs().maxCoeff();
}

ConservedJ conserved_j_w(const EeParams& p) {
    p.validate();
    const OperatorMatrix h = build_hamiltonian_two_mode(p);
    const OperatorMatrix lw = angular_momentum_w(p);
    const int d = p.fock + 1;

    auto candidate = [&](double s) {
        OperatorMatrix j = lw;
        const Matrix sv = pauli_varpi();
        for (int q1 = 0; q1 < 2; ++q1)
            for (int q2 = 0; q2 < 2; ++q2)
                j.entries.block(q1 * d * d, q2 * d * d, d * d, d * d) +=
                    s * sv(q1, q2) * Matrix::Identity(d * d, d * d);
        return j;
    };

    ConservedJ out;
    const OperatorMatrix j_half = candidate(0.5);
    const OperatorMatrix j_one = candidate(1.0);
    out.residual_half = interior_commutator(h, j_half, p.fock - 2);
    out.residual_one = interior_commutator(h, j_one, p.fock - 2);
    const double tol = tolerances().commutator;
    out.tie = out.residual_half <= tol && out.residual_one <= tol;
    if (out.residual_half <= std::min(out.residual_one, tol)) {
        out.spin_factor = 0.5;
        out.j = j_half;
    } else if (out.residual_one <= tol) {
        out.spin_factor = 1.0;
        out.j = j_one;
    } else {
        throw std::runtime_error(
            "conserved_j_w: no spin factor commutes; interior residuals s=1/2: " +
            std::to_string(out.residual_half) + ", s=1: " + std::to_string(out.residual_one));
    }
    return out;
}

std::vector<SymmetryBlock> block_decompose(const OperatorMatrix& h, const OperatorMatrix& j) {
    if (h.dim() != j.dim()) throw std::invalid_argument("block_decompose: dimension mismatch");
    // Validate the precondition that h and j commute away from the
    // truncation boundary; generic inputs fall back to the full commutator.
    double residual;
    const bool two_mode = h.factor_dims.size() == 3 && h.factor_dims[0] == 2 &&
                          h.factor_dims[1] == h.factor_dims[2] &&
                          h.factor_dims == j.factor_dims;
    if (two_mode) {
        residual = interior_commutator(h, j, int(h.factor_dims[1]) - 3);
    } else {
        const Matrix comm = h.entries * j.entries - j.entries * h.entries;
        residual = comm.cwiseAbs().maxCoeff() / h.entries.cwiseAbs().maxCoeff();
    }
    if (residual > 1e-8)
        throw std::invalid_argument("block_decompose: operators do not commute, " +
                                    std::string(two_mode ? "interior" : "full") +
                                    " relative residual " + std::to_string(residual));

    auto [jvals, jvecs] = full_hermitian_eig(j);
    std::vector<SymmetryBlock> blocks;
    Index begin = 0;
    for (Index c = 1; c <= jvals.size(); ++c) {
        if (c == jvals.size() || jvals(c) - jvals(c - 1) > 1e-6) {
            SymmetryBlock blk;
            const Index k = c - begin;
            blk.j_value = jvals.segment(begin, k).mean();
            blk.basis = jvecs.middleCols(begin, k);
            for (Index i = begin; i < c; ++i) blk.indices.push_back(i);
            Matrix b = blk.basis.adjoint() * h.entries * blk.basis;
            blk.block.entries = 0.5 * (b + b.adjoint().eval());
            blk.block.factor_dims = {k};
            blk.block.hermitian_hint = true;
            blocks.push_back(std::move(blk));
            begin = c;
        }
    }
    return blocks;
}

GroundPair ground_pair_at(const EeParams& p) {
    p.validate();
    if (p.field != 0.0)
        throw std::invalid_argument("ground_pair_at requires zero transverse field");
    const BlockedSpectra sp = blocked_solve(p);
    const BlockedLevel& g = sp.levels[0];
    const double j0 = cluster_j(sp, g.cluster);

    // partner level: the lowest state in the mirror cluster j = -j0
    int partner = -1;
    double partner_energy = 0.0;
    for (size_t c = 0; c < sp.basis.clusters.size(); ++c) {
        if (std::abs(cluster_j(sp, int(c)) + j0) < 1e-6) {
            partner = int(c);
            partner_energy = sp.cluster_values[c](0);
            break;
        }
    }
    if (partner < 0)
        throw std::runtime_error("ground_pair_at: no mirror symmetry block for j = " +
                                 std::to_string(j0));

    GroundPair out;
    out.fock = p.fock;
    out.energy = g.energy;
    out.pair_gap = std::abs(partner_energy - g.energy);
    out.gap = sp.levels.size() > 2 ? sp.levels[2].energy - g.energy : 0.0;
    out.j_psi = j0;

    const int d = p.fock + 1;
    PureState member{cluster_vector(sp, g.cluster, 0), {2, d, d}};
    // gauge: psi is the member with positive-imaginary qubit coherence
    const Complex coherence = reduced_density(member, {0}).entries(0, 1);
    if (coherence.imag() < 0) {
        member.amplitudes = member.amplitudes.conjugate();
        out.j_psi = -j0;
    }
    out.psi = member;
    out.psi_conj = PureState{member.amplitudes.conjugate(), member.factor_dims};
    return out;
}

GroundPair converged_ground_pair(EeParams p, int fock_max) {
    fock_max = resolve_fock_cap(fock_max, 240);
    const double tol = tolerances().convergence;
    GroundPair prev = ground_pair_at(p);
    double prev_s = qubit_entropy_bits(prev.psi);
    while (2 * p.fock <= fock_max) {
        p.fock *= 2;
        GroundPair next = ground_pair_at(p);
        const double s = qubit_entropy_bits(next.psi);
        const bool done =
            std::abs(next.energy - prev.energy) <= tol * (1.0 + std::abs(next.energy)) &&
            std::abs(s - prev_s) <= 100.0 * tol;
        prev = std::move(next);
        prev_s = s;
        if (done) {
            prev.converged = true;
            return prev;
        }
    }
    prev.converged = false;
    return prev;
}

PureState pair_superposition(const GroundPair& pair, double c1, double gamma) {
    if (c1 < 0 || c1 > 1) throw std::invalid_argument("c1 must lie in [0, 1]");
    const double c2 = std::sqrt(std::max(0.0, 1.0 - c1 * c1));
    PureState out;
    out.factor_dims = pair.psi.factor_dims;
    out.amplitudes =
        c1 * pair.psi.amplitudes + c2 * std::exp(Complex(0, gamma)) * pair.psi_conj.amplitudes;
    out.normalize();
    return out;
}

EeGround ground_state_at(const EeParams& p) {
    p.validate();
    const BlockedSpectra sp = blocked_solve(p);
    EeGround out;
    out.fock = p.fock;
    out.energy = sp.levels[0].energy;
    out.gap = sp.levels.size() > 1 ? sp.levels[1].energy - out.energy : 0.0;
    const int d = p.fock + 1;
    out.state = PureState{cluster_vector(sp, sp.levels[0].cluster, sp.levels[0].index), {2, d, d}};
    return out;
}

EeGround converged_ground(EeParams p, int fock_max) {
    fock_max = resolve_fock_cap(fock_max, 240);
    const double tol = tolerances().convergence;
    EeGround prev = ground_state_at(p);
    double prev_s = qubit_entropy_bits(prev.state);
    while (2 * p.fock <= fock_max) {
        p.fock *= 2;
        EeGround next = ground_state_at(p);
        const double s = qubit_entropy_bits(next.state);
        const bool done =
            std::abs(next.energy - prev.energy) <= tol * (1.0 + std::abs(next.energy)) &&
            std::abs(s - prev_s) <= 100.0 * tol;
        prev = std::move(next);
        prev_s = s;
        if (done) {
            prev.converged = true;
            return prev;
        }
    }
    prev.converged = false;
    return prev;
}

AngularReduction angular_qubit_reduction(const PureState& s, const EeParams& p) {
    p.validate();
    s.validate();
    const int d = p.fock + 1;
    if (s.factor_dims != std::vector<Index>{2, d, d})
        throw std::invalid_argument("angular_qubit_reduction: state layout does not match params");

    const auto shells = circular_shells(p.fock);
    AngularReduction out;
    out.m_weights.assign(2 * p.fock + 1, 0.0);

    // Radial coefficient vectors per (spin, m in {0,1}): index n_r, with the
    // alternating sign relating circular Fock states to Laguerre radial modes.
    std::vector<std::vector<Complex>> g(4, std::vector<Complex>(p.fock + 1, Complex(0)));
    int max_nr[2] = {-1, -1};

    for (const Shell& sh : shells)
        for (int k = 0; k < int(sh.states.size()); ++k) {
            const double mval = sh.m(k);
            const long mi = std::lround(mval);
            const bool integral = std::abs(mval - double(mi)) < 1e-6;
            for (int q = 0; q < 2; ++q) {
                Complex c = 0;
                for (int r = 0; r < int(sh.states.size()); ++r) {
                    const auto [na, nb] = sh.states[r];
                    c += std::conj(sh.u(r, k)) * s.amplitudes(flat(q, na, nb, d));
                }
                const double w = std::norm(c);
                if (integral && std::abs(mi) <= p.fock) out.m_weights[mi + p.fock] += w;
                if (integral && (mi == 0 || mi == 1)) {
                    out.weight += w;
                    const int nr = (sh.n - int(mi)) / 2;
                    const double sign = (nr % 2 == 0) ? 1.0 : -1.0;
                    g[q * 2 + mi][nr] += sign * c;
                    max_nr[mi] = std::max(max_nr[mi], nr);
                }
            }
        }

    if (out.weight < 0.5) {
        std::ostringstream msg;
        msg << "angular_qubit_reduction: only " << out.weight
            << " of the state lies in the m = 0, 1 sectors; m spectrum:";
        for (int m = -p.fock; m <= p.fock; ++m)
            if (out.m_weights[m + p.fock] > 1e-6)
                msg << " m=" << m << ":" << out.m_weights[m + p.fock];
        throw std::runtime_error(msg.str());
    }

    // Cross-sector radial overlaps O(n, n') = int R_n^0 R_{n'}^1 q dq on a
    // composite Simpson grid. The normalized radial functions stay O(1), so
    // the sum is well conditioned at any radial order (Gauss-Laguerre weights
    // lose all relative accuracy at the large nodes needed here).
    const int k0 = max_nr[0] + 1, k1 = max_nr[1] + 1;
    Eigen::MatrixXd o01 = Eigen::MatrixXd::Zero(std::max(k0, 1), std::max(k1, 1));
    if (k0 > 0 && k1 > 0) {
        const int kmax = std::max(k0, k1);
        const double qmax = std::sqrt(4.0 * kmax + 6.0) + 6.0;
        const int panels = 512 + 128 * kmax;  // ~ oscillation count with margin
        const int npts = 2 * panels + 1;
        const double h = qmax / (npts - 1);
        // R_n^0(q) = sqrt(2) e^{-q^2/2} L_n(q^2)
        // R_n^1(q) = sqrt(2/(n+1)) e^{-q^2/2} q L_n^1(q^2)
        Eigen::MatrixXd r0(npts, k0), r1(npts, k1);
        for (int i = 0; i < npts; ++i) {
            const double q = i * h, u = q * q;
            const double env = std::sqrt(2.0) * std::exp(-0.5 * u);
            double lm1 = 0.0, l = 1.0;  // L_n(u) upward in n
            for (int n = 0; n < k0; ++n) {
                r0(i, n) = env * l;
                const double next = ((2.0 * n + 1.0 - u) * l - n * lm1) / (n + 1.0);
                lm1 = l;
                l = next;
            }
            lm1 = 0.0;
            l = 1.0;  // L_n^1(u)
            for (int n = 0; n < k1; ++n) {
                r1(i, n) = env * q * l / std::sqrt(n + 1.0);
                const double next = ((2.0 * n + 2.0 - u) * l - (n + 1.0) * lm1) / (n + 1.0);
                lm1 = l;
                l = next;
            }
        }
        Eigen::VectorXd w(npts);
        for (int i = 0; i < npts; ++i) {
            const double q = i * h;
            double simpson = (i == 0 || i == npts - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            w(i) = simpson * h / 3.0 * q;  // q dq measure
        }
        o01 = r0.transpose() * w.asDiagonal() * r1;
    }

    auto overlap = [&](int i, int j) {
        const int mi = i % 2, mj = j % 2;
        Complex acc = 0;
        if (mi == mj) {
            for (int n = 0; n <= p.fock; ++n) acc += g[i][n] * std::conj(g[j][n]);
        } else if (mi == 0) {
            for (int n = 0; n < k0; ++n)
                for (int np = 0; np < k1; ++np) acc += g[i][n] * o01(n, np) * std::conj(g[j][np]);
        } else {
            for (int n = 0; n < k1; ++n)
                for (int np = 0; np < k0; ++np) acc += g[i][n] * o01(np, n) * std::conj(g[j][np]);
        }
        return acc;
    };

    out.two_qubit.factor_dims = {2, 2};
    out.two_qubit.entries = Matrix(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.two_qubit.entries(i, j) = overlap(i, j);
    out.two_qubit.entries /= out.weight;
    return out;
}

}  // namespace jt
