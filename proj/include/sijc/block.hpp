#pragma once
// Dense complex matrices and the 2x2-of-blocks operators acting on the
// two-channel space (upper channel N indices, lower channel N+1).

#include <complex>
#include <vector>

#include "sijc/model.hpp"

namespace sijc {

using cplx = std::complex<double>;

struct Matrix {
    int rows = 0, cols = 0;
    std::vector<cplx> a;

    Matrix() = default;
    Matrix(int r, int c)
        : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

    cplx& operator()(int i, int j) {
        return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                 static_cast<std::size_t>(j)];
    }
    const cplx& operator()(int i, int j) const {
        return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                 static_cast<std::size_t>(j)];
    }

    static Matrix identity(int n);
    static Matrix diag_real(const std::vector<double>& d);
    Matrix adjoint() const;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scale(cplx s, const Matrix& a);
double frob(const Matrix& a);
double max_abs(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);

// Two-channel block operator; adjoint conjugate-transposes each block and
// swaps the off-diagonal pair.
struct BlockOperator {
    Matrix uu, ul, lu, ll;

    int dim_upper() const { return uu.rows; }
    int dim_lower() const { return ll.rows; }

    static BlockOperator zeros(int nu);
    static BlockOperator identity(int nu);
    static BlockOperator diag(const std::vector<double>& upper,
                              const std::vector<double>& lower);

    BlockOperator adjoint() const;
};

BlockOperator operator*(const BlockOperator& a, const BlockOperator& b);
BlockOperator operator+(const BlockOperator& a, const BlockOperator& b);
BlockOperator operator-(const BlockOperator& a, const BlockOperator& b);
BlockOperator scale(cplx s, const BlockOperator& a);
BlockOperator commutator(const BlockOperator& a, const BlockOperator& b);

double frob(const BlockOperator& a);
double max_abs(const BlockOperator& a);
double max_abs_diff(const BlockOperator& a, const BlockOperator& b);
double hermiticity_defect(const BlockOperator& a);   // max |X - X†|

struct TwoChannelState {
    std::vector<cplx> upper;   // N entries
    std::vector<cplx> lower;   // N+1 entries

    double norm() const;
    void normalize();          // throws std::domain_error on zero norm

    static TwoChannelState zeros(int nu);
    static TwoChannelState basis(int nu, bool upper_channel, int index);
};

TwoChannelState apply(const BlockOperator& op, const TwoChannelState& x);
cplx inner(const TwoChannelState& a, const TwoChannelState& b);

// Operator builders in the energy-index basis.
BlockOperator interaction_s(const EnergyLadder& ladder, CouplingMode mode);
BlockOperator free_hamiltonian(const EnergyLadder& ladder);
BlockOperator interaction_hamiltonian(const EnergyLadder& ladder,
                                      const CouplingConfig& coupling);
BlockOperator full_hamiltonian(const EnergyLadder& ladder,
                               const CouplingConfig& coupling);
BlockOperator sigma3_block(int nu);   // diag(+I, -I)

} // namespace sijc
