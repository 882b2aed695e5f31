#pragma once
// Interaction-picture evolution matrix, its generator diagnostics, and full
// state evolution including the free-Hamiltonian phases.

#include "sijc/block.hpp"

namespace sijc::evolution {

struct InteractionFrequencies {
    std::vector<double> omega1;   // upper channel, N entries
    std::vector<double> omega2;   // lower channel, N+1 entries; omega2[m+1] == omega1[m]
};

// hbar*omega = sqrt(alpha^2 g^2 + (hbar*delta)^2) per channel eigenvalue.
InteractionFrequencies interaction_frequencies(const EnergyLadder& ladder,
                                               const CouplingConfig& coupling);

// The rung-lowering isometry: maps lower index m+1 to upper index m with
// amplitude exactly i (the quarter-power amplitudes cancel); annihilates
// lower index 0. Requires E_{m+1} > 0 throughout.
Matrix c_operator(const EnergyLadder& ladder);

struct PropagatorMatrix {
    BlockOperator u;
    double t = 0.0;
};

// Closed-form evolution matrix: diag cos blocks, off-diagonal sin blocks
// routed through the rung isometry; per rung [[cos, i sin],[i sin, cos]].
// The uncoupled lower ground state keeps its literal cos entry, which is not
// unitary for delta != 0; see unitarity_defect.
PropagatorMatrix propagator(const EnergyLadder& ladder,
                            const CouplingConfig& coupling, double t);

struct UnitarityDefect {
    double coupled = 0.0;     // Frobenius defect of U†U and UU† on the rungs
    double singleton = 0.0;   // |cos^2(omega2[0] t) - 1| at the uncoupled entry
};
UnitarityDefect unitarity_defect(const PropagatorMatrix& p);

// exp(-i H_o t / hbar) * U(t) applied to the state; norm is preserved on the
// coupled subspace.
TwoChannelState evolve_state(const TwoChannelState& state,
                             const EnergyLadder& ladder,
                             const CouplingConfig& coupling, double t);

// Frobenius norm of i*hbar*dU/dt - H_int*U with the analytic derivative.
// conjugate_offdiagonal flips the off-diagonal phase convention of U (and of
// dU) to the matrix-exponential one; with it the residual vanishes at
// delta = 0. The as-printed convention leaves a nonzero residual that is
// reported, never asserted away.
double schrodinger_residual(const EnergyLadder& ladder,
                            const CouplingConfig& coupling, double t,
                            bool conjugate_offdiagonal = false);

// || d2U/dt2 + omega^2 U || with analytic second derivative (wiring check).
double second_order_residual(const EnergyLadder& ladder,
                             const CouplingConfig& coupling, double t);
// Finite-difference form; O(h^2) accurate.
double second_order_residual_fd(const EnergyLadder& ladder,
                                const CouplingConfig& coupling, double t, double h);

} // namespace sijc::evolution
