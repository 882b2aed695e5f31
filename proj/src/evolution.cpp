#include "sijc/evolution.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sijc/kernels.hpp"

namespace sijc::evolution {

InteractionFrequencies interaction_frequencies(const EnergyLadder& ladder,
                                               const CouplingConfig& coupling) {
    const double h2 = ladder.hbar * ladder.hbar;
    const double a2 = coupling.alpha * coupling.alpha / h2;
    const double c0 = coupling.delta * coupling.delta;
    const double c2 = coupling.mode == CouplingMode::intensity ? a2 : 0.0;
    const double c1 = coupling.mode == CouplingMode::intensity ? 0.0 : a2;

    InteractionFrequencies w;
    const std::size_t n = static_cast<std::size_t>(ladder.dim);
    w.omega1.resize(n);
    w.omega2.resize(n + 1);
    kernels::sqrt_poly2(ladder.energies.data() + 1, w.omega1.data(), n, c2, c1, c0);
    kernels::sqrt_poly2(ladder.energies.data(), w.omega2.data(), n + 1, c2, c1, c0);
    return w;
}

Matrix c_operator(const EnergyLadder& ladder) {
    for (int m = 0; m < ladder.dim; ++m) {
        const double e = ladder.energies[static_cast<std::size_t>(m) + 1];
        if (!(e > 0.0)) {
            std::ostringstream os;
            os << "c_operator: H2 eigenvalue E_" << (m + 1) << " = " << e
               << " is not positive";
            throw std::domain_error(os.str());
        }
    }
    Matrix c(ladder.dim, ladder.dim + 1);
    for (int m = 0; m < ladder.dim; ++m) c(m, m + 1) = cplx(0.0, 1.0);
    return c;
}

namespace {

// U and its analytic time derivative; sgn = -1 flips the off-diagonal phase
// convention to the matrix-exponential one.
void build_u_du(const EnergyLadder& ladder, const InteractionFrequencies& w,
                double t, double sgn, BlockOperator* u, BlockOperator* du) {
    const int n = ladder.dim;
    if (u) *u = BlockOperator::zeros(n);
    if (du) *du = BlockOperator::zeros(n);
    for (int m = 0; m < n; ++m) {
        const double wm = w.omega1[static_cast<std::size_t>(m)];
        const double c = std::cos(wm * t), s = std::sin(wm * t);
        if (u) {
            u->uu(m, m) = c;
            u->ul(m, m + 1) = cplx(0.0, sgn * s);
        }
        if (du) {
            du->uu(m, m) = -wm * s;
            du->ul(m, m + 1) = cplx(0.0, sgn * wm * c);
        }
    }
    for (int k = 0; k <= n; ++k) {
        const double wk = w.omega2[static_cast<std::size_t>(k)];
        const double c = std::cos(wk * t), s = std::sin(wk * t);
        if (u) u->ll(k, k) = c;
        if (du) du->ll(k, k) = -wk * s;
        if (k >= 1) {
            if (u) u->lu(k, k - 1) = cplx(0.0, sgn * s);
            if (du) du->lu(k, k - 1) = cplx(0.0, sgn * wk * c);
        }
    }
}

} // namespace

PropagatorMatrix propagator(const EnergyLadder& ladder,
                            const CouplingConfig& coupling, double t) {
    const auto w = interaction_frequencies(ladder, coupling);
    PropagatorMatrix p;
    p.t = t;
    build_u_du(ladder, w, t, +1.0, &p.u, nullptr);
    return p;
}

UnitarityDefect unitarity_defect(const PropagatorMatrix& p) {
    const int nu = p.u.dim_upper();
    UnitarityDefect d;
    const BlockOperator adj = p.u.adjoint();
    for (const BlockOperator& prod : {adj * p.u, p.u * adj}) {
        BlockOperator r = prod - BlockOperator::identity(nu);
        d.singleton = std::max(d.singleton, std::abs(r.ll(0, 0)));
        r.ll(0, 0) = 0.0;   // uncoupled entry accounted separately
        d.coupled = std::max(d.coupled, frob(r));
    }
    return d;
}

TwoChannelState evolve_state(const TwoChannelState& state,
                             const EnergyLadder& ladder,
                             const CouplingConfig& coupling, double t) {
    const auto p = propagator(ladder, coupling, t);
    TwoChannelState y = apply(p.u, state);
    const double inv_hbar = 1.0 / ladder.hbar;
    for (int m = 0; m < ladder.dim; ++m) {
        const double e = ladder.energies[static_cast<std::size_t>(m) + 1];
        y.upper[static_cast<std::size_t>(m)] *= std::polar(1.0, -e * t * inv_hbar);
    }
    for (int k = 0; k <= ladder.dim; ++k) {
        const double e = ladder.energies[static_cast<std::size_t>(k)];
        y.lower[static_cast<std::size_t>(k)] *= std::polar(1.0, -e * t * inv_hbar);
    }
    return y;
}

double schrodinger_residual(const EnergyLadder& ladder,
                            const CouplingConfig& coupling, double t,
                            bool conjugate_offdiagonal) {
    const auto w = interaction_frequencies(ladder, coupling);
    const double sgn = conjugate_offdiagonal ? -1.0 : +1.0;
    BlockOperator u, du;
    build_u_du(ladder, w, t, sgn, &u, &du);
    const BlockOperator hint = interaction_hamiltonian(ladder, coupling);
    const BlockOperator r = scale(cplx(0.0, ladder.hbar), du) - hint * u;
    return frob(r);
}

double second_order_residual(const EnergyLadder& ladder,
                             const CouplingConfig& coupling, double t) {
    const auto w = interaction_frequencies(ladder, coupling);
    const int n = ladder.dim;
    BlockOperator u, ddu = BlockOperator::zeros(n);
    build_u_du(ladder, w, t, +1.0, &u, nullptr);
    for (int m = 0; m < n; ++m) {
        const double wm = w.omega1[static_cast<std::size_t>(m)];
        ddu.uu(m, m) = -wm * wm * std::cos(wm * t);
        ddu.ul(m, m + 1) = cplx(0.0, -wm * wm * std::sin(wm * t));
    }
    for (int k = 0; k <= n; ++k) {
        const double wk = w.omega2[static_cast<std::size_t>(k)];
        ddu.ll(k, k) = -wk * wk * std::cos(wk * t);
        if (k >= 1) ddu.lu(k, k - 1) = cplx(0.0, -wk * wk * std::sin(wk * t));
    }
    std::vector<double> w1sq(w.omega1.size()), w2sq(w.omega2.size());
    for (std::size_t i = 0; i < w.omega1.size(); ++i) w1sq[i] = w.omega1[i] * w.omega1[i];
    for (std::size_t i = 0; i < w.omega2.size(); ++i) w2sq[i] = w.omega2[i] * w.omega2[i];
    const BlockOperator wsq = BlockOperator::diag(w1sq, w2sq);
    return frob(ddu + wsq * u);
}

double second_order_residual_fd(const EnergyLadder& ladder,
                                const CouplingConfig& coupling, double t, double h) {
    const auto w = interaction_frequencies(ladder, coupling);
    BlockOperator up, u0, um;
    build_u_du(ladder, w, t + h, +1.0, &up, nullptr);
    build_u_du(ladder, w, t, +1.0, &u0, nullptr);
    build_u_du(ladder, w, t - h, +1.0, &um, nullptr);
    const BlockOperator fd = scale(1.0 / (h * h), up - scale(2.0, u0) + um);
    std::vector<double> w1sq(w.omega1.size()), w2sq(w.omega2.size());
    for (std::size_t i = 0; i < w.omega1.size(); ++i) w1sq[i] = w.omega1[i] * w.omega1[i];
    for (std::size_t i = 0; i < w.omega2.size(); ++i) w2sq[i] = w.omega2[i] * w.omega2[i];
    const BlockOperator wsq = BlockOperator::diag(w1sq, w2sq);
    return frob(fd + wsq * u0);
}

} // namespace sijc::evolution
