#pragma once
// Brute-force reference implementations used by the verification suites:
// analytic 2x2 eigensystems, a dense Jacobi eigensolver, exact matrix
// exponentials, adaptive quadrature, and Heisenberg conjugation. These share
// no evaluation machinery with the closed forms they check.

#include <array>

#include "sijc/block.hpp"
#include "sijc/inversion.hpp"

namespace sijc::oracle {

struct DenseSpectrum {
    std::vector<double> eigenvalues;            // ascending
    std::vector<TwoChannelState> eigenvectors;  // matching order, unit norm
};

// Eigendecomposition of the full Hamiltonian rung by rung (analytic 2x2)
// merged with the uncoupled ground state.
DenseSpectrum brute_spectrum(const RungSystem& rungs);

// Analytic eigensystem of a single full rung; vectors live on
// (upper m, lower m+1) and carry a positive first nonzero component.
struct RungEigen {
    double value_plus = 0.0, value_minus = 0.0;
    std::array<double, 2> vec_plus{}, vec_minus{};
};
RungEigen rung_eigensystem(const RungSystem& rungs, int m);

// exp(-i H_int_rung t / hbar), row-major 2x2 on (upper m, lower m+1).
std::array<cplx, 4> exact_rung_propagator(const RungSystem& rungs, int m, double t);

// exp(+i delta t): the exact interaction phase of the uncoupled ground state.
cplx exact_singleton_phase(const RungSystem& rungs, double t);

// Adaptive quadrature of the defining trig-product integral to abs_tol.
double quad_f(inversion::TrigKind kind, double x, double w, double t,
              double abs_tol = 1e-11);

// U†(t) sigma3 U(t) per rung. `exponential` selects the matrix-exponential
// propagator; otherwise the closed-form evolution matrix is used, whose
// off-diagonal phase convention is conjugate to it.
BlockOperator heisenberg_sigma3(const EnergyLadder& ladder,
                                const CouplingConfig& coupling, double t,
                                bool exponential = true);

// Cyclic-Jacobi eigenvalues of a dense real symmetric matrix (row-major),
// ascending.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

// Dense (2N+1)-dimensional assemblies; index map: upper m -> m, lower n -> N+n.
std::vector<double> assemble_interaction(const RungSystem& rungs);
std::vector<double> assemble_full(const RungSystem& rungs);

} // namespace sijc::oracle
