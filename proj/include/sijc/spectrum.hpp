#pragma once
// Closed-form dressed energies, mixing coefficients, and eigenstates of the
// coupled two-channel system, for both coupling modes.

#include <utility>
#include <vector>

#include "sijc/block.hpp"

namespace sijc::spectrum {

struct DressedPair {
    int m = 0;
    double energy_plus = 0.0, energy_minus = 0.0;
    double lambda_plus = 0.0, lambda_minus = 0.0;   // interaction eigenvalues
    double c_plus = 0.0, c_minus = 0.0;             // mixing amplitudes
    double gamma_plus = 0.0, gamma_minus = 0.0, delta_m = 0.0;
};

// E_{m+1} +- sqrt(alpha^2 g^2 + (hbar*delta)^2) with g per coupling mode.
std::pair<double, double> dressed_energies(const EnergyLadder& ladder,
                                           const CouplingConfig& coupling, int m);

// delta_m = beta/g, gamma+- = sqrt(1+delta^2) -+ delta, C(s) = 1/sqrt(1+gamma(s)^2).
// Requires alpha > 0 (beta is undefined otherwise).
DressedPair mixing_coefficients(const EnergyLadder& ladder,
                                const CouplingConfig& coupling, int m);

// sign=+1: C+ at upper m, +C- at lower m+1. sign=-1: C- at upper m, -C+ at
// lower m+1. Overall phase fixed real-positive on the upper component.
TwoChannelState dressed_state(const EnergyLadder& ladder,
                              const CouplingConfig& coupling, int m, int sign);

struct SpectrumTable {
    double singleton_energy = 0.0;    // uncoupled lower ground state, -hbar*delta
    std::vector<DressedPair> pairs;   // m = 0..m_max
};

SpectrumTable spectrum_table(const EnergyLadder& ladder,
                             const CouplingConfig& coupling, int m_max);

} // namespace sijc::spectrum
