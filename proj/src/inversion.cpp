#include "sijc/inversion.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sijc/evolution.hpp"
#include "sijc/kernels.hpp"

namespace sijc::inversion {

namespace {

// (-1)^m u^{2m} / (2m)!  and  (-1)^m u^{2m+1} / (2m+1)!
std::vector<double> even_ladder(double u, int order) {
    std::vector<double> p(static_cast<std::size_t>(order) + 1);
    p[0] = 1.0;
    for (int m = 1; m <= order; ++m) {
        p[static_cast<std::size_t>(m)] =
            -p[static_cast<std::size_t>(m) - 1] * u * u /
            (static_cast<double>(2 * m - 1) * static_cast<double>(2 * m));
    }
    return p;
}

std::vector<double> odd_ladder(double u, int order) {
    std::vector<double> p(static_cast<std::size_t>(order) + 1);
    p[0] = u;
    for (int m = 1; m <= order; ++m) {
        p[static_cast<std::size_t>(m)] =
            -p[static_cast<std::size_t>(m) - 1] * u * u /
            (static_cast<double>(2 * m) * static_cast<double>(2 * m + 1));
    }
    return p;
}

} // namespace

double f_series(TrigKind kind, double x, double w, double t, int order) {
    if (order < 1) throw std::invalid_argument("f_series: order must be >= 1");
    if (std::abs(x * t) > 25.0 || std::abs(w * t) > 25.0) {
        std::ostringstream os;
        os << "f_series: |x t| = " << std::abs(x * t) << ", |w t| = " << std::abs(w * t)
           << " exceed the series guard 25; evaluate with the quadrature oracle instead";
        throw std::range_error(os.str());
    }
    const double u = x * t, v = w * t;
    const bool x_odd = (kind == TrigKind::SC || kind == TrigKind::SS);
    const bool w_odd = (kind == TrigKind::CS || kind == TrigKind::SS);
    const auto xa = x_odd ? odd_ladder(u, order) : even_ladder(u, order);
    const auto wa = w_odd ? odd_ladder(v, order) : even_ladder(v, order);
    // power of t accompanying the (m, n) term, beyond the u/v factors
    const int base = 1 + (x_odd ? 1 : 0) + (w_odd ? 1 : 0);
    double sum = 0.0;
    for (int m = 0; m <= order; ++m) {
        for (int n = 0; m + n <= order; ++n) {
            const int den = 2 * m + 2 * n + base;
            sum += xa[static_cast<std::size_t>(m)] * wa[static_cast<std::size_t>(n)] *
                   t / static_cast<double>(den);
        }
    }
    return sum;
}

double g_combination(TrigKind kind, int sign, double p, double q, double r,
                     double t, int order) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("g_combination: sign must be +-1");
    return f_series(kind, p - q, r, t, order) +
           static_cast<double>(sign) * f_series(kind, p + q, r, t, order);
}

double k_closed(KKind kind, double p, double q, double r, double t, double eps_deg) {
    double a = p + q;
    double sign = 1.0;
    // K_S is odd in both a and r; K_C is even in a, odd in r.
    if (r < 0.0) { r = -r; sign = -sign; }
    if (a < 0.0) {
        a = -a;
        if (kind == KKind::S) sign = -sign;
    }
    const double d = r * r - a * a;
    if (std::abs(d) >= eps_deg) {
        const double v = kind == KKind::S
                             ? (r * std::sin(a * t) - a * std::sin(r * t)) / d
                             : (r * std::cos(a * t) - r * std::cos(r * t)) / d;
        return sign * v;
    }
    if (r == 0.0 && a == 0.0) return 0.0;
    // analytic limit branch: expand in eps = a - r around the resonance
    const double eps = a - r;
    const double s = std::sin(r * t), c = std::cos(r * t);
    double v;
    if (kind == KKind::S) {
        v = (s - r * t * c + eps * (r * s * t * t / 2.0) +
             eps * eps * (r * c * t * t * t / 6.0) -
             eps * eps * eps * (r * s * t * t * t * t / 24.0)) /
            (2.0 * r + eps);
    } else {
        v = (r * s * t + eps * (r * c * t * t / 2.0) -
             eps * eps * (r * s * t * t * t / 6.0) -
             eps * eps * eps * (r * c * t * t * t * t / 24.0)) /
            (2.0 * r + eps);
    }
    return sign * v;
}

RabiFrequencies rabi_frequencies(const EnergyLadder& ladder,
                                 const CouplingConfig& coupling) {
    const double h2 = ladder.hbar * ladder.hbar;
    const double a4 = 4.0 * coupling.alpha * coupling.alpha / h2;
    const double c2 = coupling.mode == CouplingMode::intensity ? a4 : 0.0;
    const double c1 = coupling.mode == CouplingMode::intensity ? 0.0 : a4;

    RabiFrequencies nu;
    const std::size_t n = static_cast<std::size_t>(ladder.dim);
    nu.nu1.resize(n);
    nu.nu2.resize(n + 1);
    kernels::sqrt_poly2(ladder.energies.data() + 1, nu.nu1.data(), n, c2, c1, 0.0);
    kernels::sqrt_poly2(ladder.energies.data(), nu.nu2.data(), n + 1, c2, c1, 0.0);
    return nu;
}

double gamma_constant(const EnergyLadder& ladder, const CouplingConfig& coupling) {
    const double b = coupling.beta(ladder.hbar);
    return 4.0 * coupling.alpha * coupling.alpha * b / (ladder.hbar * ladder.hbar);
}

BlockOperator f_matrix(const EnergyLadder& ladder, const CouplingConfig& coupling,
                       double t) {
    const int n = ladder.dim;
    const double gam = gamma_constant(ladder, coupling);
    const auto w = evolution::interaction_frequencies(ladder, coupling);

    // quarter-power diagonals: the half-shift carries E^{1/4}; the diagonal
    // partner carries E^{1/4} (linear) or E^{3/4} (intensity)
    const std::vector<double> eu(ladder.energies.begin() + 1, ladder.energies.end());
    const auto qs = diag_apply(eu, [](double x) { return std::pow(x, 0.25); }, "E^(1/4)");
    const auto qd = coupling.mode == CouplingMode::linear
                        ? qs
                        : diag_apply(eu, [](double x) { return std::pow(x, 0.75); }, "E^(3/4)");

    BlockOperator f = BlockOperator::zeros(n);
    for (int m = 0; m < n; ++m) {
        const std::size_t mm = static_cast<std::size_t>(m);
        const double c1 = std::cos(w.omega1[mm] * t), s1 = std::sin(w.omega1[mm] * t);
        const double c2 = std::cos(w.omega2[mm + 1] * t), s2 = std::sin(w.omega2[mm + 1] * t);
        const double d_up = qs[mm] * c2 * s1 * qd[mm] - qd[mm] * s1 * c2 * qs[mm];
        const double d_lo = qd[mm] * c1 * s2 * qs[mm] - qs[mm] * s2 * c1 * qd[mm];
        const double off = qs[mm] * c2 * c1 * qd[mm] + qd[mm] * s1 * s2 * qs[mm];
        f.uu(m, m) = cplx(0.0, gam * d_up);
        f.ll(m + 1, m + 1) = cplx(0.0, gam * d_lo);
        f.ul(m, m + 1) = gam * off;
        f.lu(m + 1, m) = gam * off;
    }
    return f;
}

namespace {

struct RungScalars {
    double g = 0.0;    // coupling amplitude
    double nu = 0.0;   // Rabi frequency on the rung
    double om = 0.0;   // interaction frequency on the rung
};

std::vector<RungScalars> rung_scalars(const EnergyLadder& ladder,
                                      const CouplingConfig& coupling) {
    const auto w = evolution::interaction_frequencies(ladder, coupling);
    const auto nu = rabi_frequencies(ladder, coupling);
    std::vector<RungScalars> rs(static_cast<std::size_t>(ladder.dim));
    for (int m = 0; m < ladder.dim; ++m) {
        const std::size_t mm = static_cast<std::size_t>(m);
        rs[mm].g = rung_amplitude(ladder.energies[mm + 1], coupling.mode);
        rs[mm].nu = nu.nu1[mm];
        rs[mm].om = w.omega1[mm];
    }
    return rs;
}

} // namespace

BlockOperator particular_solution(const EnergyLadder& ladder,
                                  const CouplingConfig& coupling,
                                  double t, int order) {
    const int n = ladder.dim;
    BlockOperator p = BlockOperator::zeros(n);
    const double gam = gamma_constant(ladder, coupling);
    if (gam == 0.0) return p;   // no drive at resonance

    const auto scal = rung_scalars(ladder, coupling);
    for (int m = 0; m < n; ++m) {
        const auto rs = scal[static_cast<std::size_t>(m)];
        const double z = std::sin(rs.nu * t), y = std::cos(rs.nu * t);
        const auto g = [&](TrigKind k, int s) {
            return g_combination(k, s, rs.nu, rs.om, rs.om, t, order);
        };
        // diagonal blocks: i * (gamma/2) * (g/nu) * [z (G_CS+ + G_SC-) - y (G_SS+ - G_CC-)]
        const double zd = g(TrigKind::CS, +1) + g(TrigKind::SC, -1);
        const double yd = g(TrigKind::SS, +1) - g(TrigKind::CC, -1);
        // off-diagonal blocks: (gamma/2) * (g/nu) * [z (G_CC+ - G_SS-) - y (G_SC+ + G_CS-)]
        const double zo = g(TrigKind::CC, +1) - g(TrigKind::SS, -1);
        const double yo = g(TrigKind::SC, +1) + g(TrigKind::CS, -1);

        const double pref = 0.5 * gam * rs.g / rs.nu;
        const cplx diag(0.0, pref * (z * zd - y * yd));
        const double off = pref * (z * zo - y * yo);
        p.uu(m, m) = diag;
        p.ll(m + 1, m + 1) = diag;
        p.ul(m, m + 1) = off;
        p.lu(m + 1, m) = off;
    }
    return p;
}

BlockOperator particular_solution_closed(const EnergyLadder& ladder,
                                         const CouplingConfig& coupling, double t) {
    const int n = ladder.dim;
    BlockOperator p = BlockOperator::zeros(n);
    const double gam = gamma_constant(ladder, coupling);
    if (gam == 0.0) return p;

    const auto scal = rung_scalars(ladder, coupling);
    for (int m = 0; m < n; ++m) {
        const auto rs = scal[static_cast<std::size_t>(m)];
        // cos-cos drive: (1/2)[cos((w2-w1) xi) + cos((w2+w1) xi)]
        // sin-sin drive: (1/2)[cos((w2-w1) xi) - cos((w2+w1) xi)]
        const double kc_d = k_closed(KKind::C, rs.om, -rs.om, rs.nu, t);
        const double kc_s = k_closed(KKind::C, rs.om, +rs.om, rs.nu, t);
        const double off = (gam * rs.g / rs.nu) *
                           (0.5 * (kc_d + kc_s) + 0.5 * (kc_d - kc_s));
        // the diagonal sine drives appear once from each ordering of the
        // trig product and cancel pairwise; no K_S response survives
        p.ul(m, m + 1) = off;
        p.lu(m + 1, m) = off;
    }
    return p;
}

namespace {

BlockOperator homogeneous_solution(const EnergyLadder& ladder,
                                   const CouplingConfig& coupling,
                                   const BlockOperator& init, double t) {
    const int n = ladder.dim;
    const auto nu = rabi_frequencies(ladder, coupling);
    const BlockOperator s_op = interaction_s(ladder, coupling.mode);
    const BlockOperator s_init = s_op * init;
    const cplx k(0.0, 2.0 * coupling.alpha / ladder.hbar);

    BlockOperator h = BlockOperator::zeros(n);
    auto fill_row = [&](double nu_r, const Matrix& init_blk, const Matrix& s_blk,
                        Matrix& out, int row) {
        const double y = std::cos(nu_r * t);
        const double sinc = nu_r == 0.0 ? t : std::sin(nu_r * t) / nu_r;
        for (int j = 0; j < out.cols; ++j) {
            out(row, j) = y * init_blk(row, j) + k * sinc * s_blk(row, j);
        }
    };
    for (int m = 0; m < n; ++m) {
        const double nr = nu.nu1[static_cast<std::size_t>(m)];
        fill_row(nr, init.uu, s_init.uu, h.uu, m);
        fill_row(nr, init.ul, s_init.ul, h.ul, m);
    }
    for (int r = 0; r <= n; ++r) {
        const double nr = nu.nu2[static_cast<std::size_t>(r)];
        fill_row(nr, init.lu, s_init.lu, h.lu, r);
        fill_row(nr, init.ll, s_init.ll, h.ll, r);
    }
    return h;
}

void check_init(const EnergyLadder& ladder, const BlockOperator& init) {
    if (init.dim_upper() != ladder.dim || init.dim_lower() != ladder.dim + 1) {
        throw std::invalid_argument("sigma3 initializer dimension mismatch");
    }
    const double scale_ref = std::max(1.0, max_abs(init));
    if (hermiticity_defect(init) > 1e-12 * scale_ref) {
        throw std::invalid_argument("sigma3 initializer is not Hermitian");
    }
}

} // namespace

InversionSolution sigma3_of_t(const EnergyLadder& ladder,
                              const CouplingConfig& coupling,
                              const BlockOperator& sigma3_init,
                              double t, int order) {
    check_init(ladder, sigma3_init);
    InversionSolution sol;
    sol.t = t;
    sol.series_order = order;
    sol.gamma_const = gamma_constant(ladder, coupling);
    sol.homogeneous = homogeneous_solution(ladder, coupling, sigma3_init, t);
    sol.particular = particular_solution(ladder, coupling, t, order);
    sol.total = sol.homogeneous + sol.particular;
    return sol;
}

InversionSolution resonant_inversion(const EnergyLadder& ladder,
                                     const CouplingConfig& coupling,
                                     const BlockOperator& sigma3_init, double t) {
    if (!coupling.resonant()) {
        throw std::invalid_argument("resonant_inversion requires delta == 0");
    }
    check_init(ladder, sigma3_init);
    InversionSolution sol;
    sol.t = t;
    sol.series_order = 0;
    sol.gamma_const = 0.0;
    sol.homogeneous = homogeneous_solution(ladder, coupling, sigma3_init, t);
    sol.particular = BlockOperator::zeros(ladder.dim);
    sol.total = sol.homogeneous;
    return sol;
}

BlockOperator theta_operator(const EnergyLadder& ladder,
                             const CouplingConfig& coupling) {
    return scale(2.0 * coupling.alpha / ladder.hbar,
                 interaction_s(ladder, coupling.mode));
}

} // namespace sijc::inversion
