#pragma once
// Shape-invariant ladder models: remainder sequences, truncated energy
// ladders, and the rung decomposition of the two-channel interaction.
//
// Representation: everything lives in the energy-index basis. The upper
// channel carries indices m = 0..N-1 (diagonal free energy E_{m+1}); the
// lower channel carries indices n = 0..N (diagonal free energy E_n). Rung m
// couples upper index m to lower index m+1; lower index 0 stays uncoupled.
// Retaining the full lower partner of every rung keeps each retained rung a
// complete invariant block, so spectral and propagator statements are exact
// with no truncation edge.

#include <array>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace sijc {

enum class CouplingMode { linear, intensity };

struct Harmonic { double omega = 1.0; };              // R_k = hbar*omega
struct Scaling  { double q = 0.5; double r1 = 1.0; }; // R_k = r1 * q^(k-1)
struct Explicit { std::vector<double> remainders; };

// A bound-state ladder family. The remainder sequence R_k fixes the spectrum
// through E_n = sum_{k<=n} R_k with E_0 = 0.
struct ShapeInvariantModel {
    std::variant<Harmonic, Scaling, Explicit> kind = Harmonic{};
    double hbar = 1.0;

    static ShapeInvariantModel harmonic(double omega, double hbar = 1.0);
    static ShapeInvariantModel scaling(double q, double r1, double hbar = 1.0);
    static ShapeInvariantModel explicit_seq(std::vector<double> remainders,
                                            double hbar = 1.0);
};

// First n remainders R(a_1)..R(a_n). Throws std::out_of_range when an
// explicit list is exhausted (the message names the maximum) and
// std::domain_error on a non-positive remainder.
std::vector<double> remainder_sequence(const ShapeInvariantModel& model, int n);

// Truncated eigenvalue ladder E_0..E_N, E_0 = 0 exactly.
struct EnergyLadder {
    int dim = 0;                  // N, the number of retained rungs
    double hbar = 1.0;
    std::vector<double> energies; // E_0..E_N (dim+1 entries)

    double energy(int n) const { return energies.at(static_cast<std::size_t>(n)); }
};

EnergyLadder energy_ladder(const ShapeInvariantModel& model, int dim);

struct CouplingConfig {
    double alpha = 0.2;
    double delta = 0.0;
    CouplingMode mode = CouplingMode::linear;

    // beta = hbar*delta/alpha; always derived, never stored.
    double beta(double hbar) const;
    bool resonant() const { return delta == 0.0; }
};

// Rung amplitude g_{m+1} for the energy above the rung.
double rung_amplitude(double energy_above, CouplingMode mode);

// Block decomposition of the interaction: per rung the 2x2 matrix
// alpha*[[beta, g],[g, -beta]] on (upper m, lower m+1), plus the uncoupled
// lower ground state with interaction eigenvalue -hbar*delta.
struct RungSystem {
    EnergyLadder ladder;
    CouplingConfig coupling;
    std::vector<double> amplitudes;   // g_{m+1}, m = 0..N-1

    int rung_count() const { return ladder.dim; }
    // row-major [[a,b],[b,d]] of the interaction restricted to rung m
    std::array<double, 4> rung_interaction(int m) const;
    // interaction plus the free part E_{m+1}*I
    std::array<double, 4> rung_full(int m) const;
    double singleton_interaction() const;   // -hbar*delta
    double singleton_full() const;          // E_0 - hbar*delta
};

RungSystem rung_system(const EnergyLadder& ladder, const CouplingConfig& coupling);

// Elementwise function of a diagonal operator. Throws std::domain_error
// naming the offending eigenvalue when f leaves the reals.
std::vector<double> diag_apply(const std::vector<double>& values,
                               const std::function<double(double)>& f,
                               const std::string& fname);

} // namespace sijc
