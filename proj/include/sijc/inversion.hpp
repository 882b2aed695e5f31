#pragma once
// Population-inversion dynamics: homogeneous plus particular solutions of the
// driven oscillator equation for sigma3(t), the driving matrix, and the
// trigonometric product integrals in series and closed form.

#include "sijc/block.hpp"

namespace sijc::inversion {

enum class TrigKind { CC, CS, SC, SS };
enum class KKind { S, C };

// Truncated double power series of the integral of trig(x xi)*trig(w xi)
// over [0, t], all index pairs with m+n <= order. Guard: |x t|, |w t| <= 25;
// outside it the series loses accuracy and the quadrature oracle is the
// documented fallback (a std::range_error says so).
double f_series(TrigKind kind, double x, double w, double t, int order);

// F_kind(t; p-q, r) + sign * F_kind(t; p+q, r), sign = +-1.
double g_combination(TrigKind kind, int sign, double p, double q, double r,
                     double t, int order);

// Closed-form response kernels
//   K_S = [r sin((p+q)t) - (p+q) sin(rt)] / (r^2 - (p+q)^2)
//   K_C = [r cos((p+q)t) - r cos(rt)]     / (r^2 - (p+q)^2)
// with an analytic limit branch when |r^2 - (p+q)^2| < eps_deg.
double k_closed(KKind kind, double p, double q, double r, double t,
                double eps_deg = 1e-8);

struct RabiFrequencies {
    std::vector<double> nu1;   // upper channel, N entries
    std::vector<double> nu2;   // lower channel, N+1 entries; nu2[0] == 0
};

// hbar*nu = 2 alpha g per channel eigenvalue (g per coupling mode).
RabiFrequencies rabi_frequencies(const EnergyLadder& ladder,
                                 const CouplingConfig& coupling);

double gamma_constant(const EnergyLadder& ladder, const CouplingConfig& coupling);

// Driving matrix gamma * U†(t) S U(t), assembled per rung from diagonal trig
// factors and quarter-power amplitudes. Identically zero at delta = 0.
BlockOperator f_matrix(const EnergyLadder& ladder, const CouplingConfig& coupling,
                       double t);

// Zero-initial-condition particular solution, per-rung series assembly.
BlockOperator particular_solution(const EnergyLadder& ladder,
                                  const CouplingConfig& coupling,
                                  double t, int order);
// The same object through the closed-form response kernels.
BlockOperator particular_solution_closed(const EnergyLadder& ladder,
                                         const CouplingConfig& coupling, double t);

struct InversionSolution {
    BlockOperator total;
    BlockOperator homogeneous;
    BlockOperator particular;
    double t = 0.0;
    int series_order = 0;
    double gamma_const = 0.0;   // 4 alpha^2 beta / hbar^2
};

// [sigma3(t)]_ij = cos(nu_i t)[sigma3(0)]_ij
//                + (2 i alpha/hbar) sin(nu_i t) nu_i^{-1} [S sigma3(0)]_ij
//                + particular_ij(t),
// with sin(nu t)/nu -> t at the zero eigenvalue of nu2.
InversionSolution sigma3_of_t(const EnergyLadder& ladder,
                              const CouplingConfig& coupling,
                              const BlockOperator& sigma3_init,
                              double t, int order);

// Resonant special case: requires delta == 0; the particular part vanishes.
InversionSolution resonant_inversion(const EnergyLadder& ladder,
                                     const CouplingConfig& coupling,
                                     const BlockOperator& sigma3_init, double t);

// 2 alpha S / hbar; commutes with the full Hamiltonian.
BlockOperator theta_operator(const EnergyLadder& ladder,
                             const CouplingConfig& coupling);

} // namespace sijc::inversion
