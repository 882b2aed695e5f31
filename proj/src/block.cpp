#include "sijc/block.hpp"

#include <cmath>
#include <stdexcept>

#include "sijc/kernels.hpp"

namespace sijc {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diag_real(const std::vector<double>& d) {
    const int n = static_cast<int>(d.size());
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(cols, rows);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m(j, i) = std::conj((*this)(i, j));
    }
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw std::logic_error("matrix product: inner dimensions differ");
    Matrix c(a.rows, b.cols);
    kernels::matmul_acc(a.a.data(), b.a.data(), c.a.data(),
                        static_cast<std::size_t>(a.rows),
                        static_cast<std::size_t>(a.cols),
                        static_cast<std::size_t>(b.cols));
    return c;
}

static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) {
        throw std::logic_error("matrix sum: shapes differ");
    }
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix c = a;
    kernels::axpy(1.0, b.a.data(), c.a.data(), b.a.size());
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix c = a;
    kernels::axpy(-1.0, b.a.data(), c.a.data(), b.a.size());
    return c;
}

Matrix scale(cplx s, const Matrix& a) {
    Matrix c(a.rows, a.cols);
    kernels::axpy(s, a.a.data(), c.a.data(), a.a.size());
    return c;
}

double frob(const Matrix& a) {
    return std::sqrt(kernels::frob_norm_sq(a.a.data(), a.a.size()));
}

double max_abs(const Matrix& a) {
    const Matrix z(a.rows, a.cols);
    return kernels::max_abs_diff(a.a.data(), z.a.data(), a.a.size());
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    return kernels::max_abs_diff(a.a.data(), b.a.data(), a.a.size());
}

BlockOperator BlockOperator::zeros(int nu) {
    const int nl = nu + 1;
    BlockOperator b;
    b.uu = Matrix(nu, nu);
    b.ul = Matrix(nu, nl);
    b.lu = Matrix(nl, nu);
    b.ll = Matrix(nl, nl);
    return b;
}

BlockOperator BlockOperator::identity(int nu) {
    BlockOperator b = zeros(nu);
    b.uu = Matrix::identity(nu);
    b.ll = Matrix::identity(nu + 1);
    return b;
}

BlockOperator BlockOperator::diag(const std::vector<double>& upper,
                                  const std::vector<double>& lower) {
    if (lower.size() != upper.size() + 1) {
        throw std::logic_error("block diag: lower channel must hold one more index");
    }
    BlockOperator b = zeros(static_cast<int>(upper.size()));
    b.uu = Matrix::diag_real(upper);
    b.ll = Matrix::diag_real(lower);
    return b;
}

BlockOperator BlockOperator::adjoint() const {
    BlockOperator b;
    b.uu = uu.adjoint();
    b.ll = ll.adjoint();
    b.ul = lu.adjoint();
    b.lu = ul.adjoint();
    return b;
}

BlockOperator operator*(const BlockOperator& a, const BlockOperator& b) {
    BlockOperator c = BlockOperator::zeros(a.dim_upper());
    auto acc = [](const Matrix& x, const Matrix& y, Matrix& into) {
        kernels::matmul_acc(x.a.data(), y.a.data(), into.a.data(),
                            static_cast<std::size_t>(x.rows),
                            static_cast<std::size_t>(x.cols),
                            static_cast<std::size_t>(y.cols));
    };
    acc(a.uu, b.uu, c.uu);
    acc(a.ul, b.lu, c.uu);
    acc(a.uu, b.ul, c.ul);
    acc(a.ul, b.ll, c.ul);
    acc(a.lu, b.uu, c.lu);
    acc(a.ll, b.lu, c.lu);
    acc(a.lu, b.ul, c.ll);
    acc(a.ll, b.ll, c.ll);
    return c;
}

BlockOperator operator+(const BlockOperator& a, const BlockOperator& b) {
    BlockOperator c;
    c.uu = a.uu + b.uu;
    c.ul = a.ul + b.ul;
    c.lu = a.lu + b.lu;
    c.ll = a.ll + b.ll;
    return c;
}

BlockOperator operator-(const BlockOperator& a, const BlockOperator& b) {
    BlockOperator c;
    c.uu = a.uu - b.uu;
    c.ul = a.ul - b.ul;
    c.lu = a.lu - b.lu;
    c.ll = a.ll - b.ll;
    return c;
}

BlockOperator scale(cplx s, const BlockOperator& a) {
    BlockOperator c;
    c.uu = scale(s, a.uu);
    c.ul = scale(s, a.ul);
    c.lu = scale(s, a.lu);
    c.ll = scale(s, a.ll);
    return c;
}

BlockOperator commutator(const BlockOperator& a, const BlockOperator& b) {
    return a * b - b * a;
}

double frob(const BlockOperator& a) {
    const double s = kernels::frob_norm_sq(a.uu.a.data(), a.uu.a.size()) +
                     kernels::frob_norm_sq(a.ul.a.data(), a.ul.a.size()) +
                     kernels::frob_norm_sq(a.lu.a.data(), a.lu.a.size()) +
                     kernels::frob_norm_sq(a.ll.a.data(), a.ll.a.size());
    return std::sqrt(s);
}

double max_abs(const BlockOperator& a) {
    double m = max_abs(a.uu);
    m = std::max(m, max_abs(a.ul));
    m = std::max(m, max_abs(a.lu));
    return std::max(m, max_abs(a.ll));
}

double max_abs_diff(const BlockOperator& a, const BlockOperator& b) {
    double m = max_abs_diff(a.uu, b.uu);
    m = std::max(m, max_abs_diff(a.ul, b.ul));
    m = std::max(m, max_abs_diff(a.lu, b.lu));
    return std::max(m, max_abs_diff(a.ll, b.ll));
}

double hermiticity_defect(const BlockOperator& a) {
    return max_abs_diff(a, a.adjoint());
}

double TwoChannelState::norm() const {
    const double s = kernels::frob_norm_sq(upper.data(), upper.size()) +
                     kernels::frob_norm_sq(lower.data(), lower.size());
    return std::sqrt(s);
}

void TwoChannelState::normalize() {
    const double n = norm();
    if (!(n > 0.0)) throw std::domain_error("state has zero norm");
    for (auto& v : upper) v /= n;
    for (auto& v : lower) v /= n;
}

TwoChannelState TwoChannelState::zeros(int nu) {
    TwoChannelState s;
    s.upper.assign(static_cast<std::size_t>(nu), cplx{});
    s.lower.assign(static_cast<std::size_t>(nu) + 1, cplx{});
    return s;
}

TwoChannelState TwoChannelState::basis(int nu, bool upper_channel, int index) {
    TwoChannelState s = zeros(nu);
    auto& v = upper_channel ? s.upper : s.lower;
    v.at(static_cast<std::size_t>(index)) = 1.0;
    return s;
}

TwoChannelState apply(const BlockOperator& op, const TwoChannelState& x) {
    if (static_cast<int>(x.upper.size()) != op.dim_upper() ||
        static_cast<int>(x.lower.size()) != op.dim_lower()) {
        throw std::invalid_argument("apply: state dimension does not match operator");
    }
    TwoChannelState y = TwoChannelState::zeros(op.dim_upper());
    auto acc = [](const Matrix& mat, const std::vector<cplx>& v, std::vector<cplx>& out) {
        kernels::matmul_acc(mat.a.data(), v.data(), out.data(),
                            static_cast<std::size_t>(mat.rows),
                            static_cast<std::size_t>(mat.cols), 1);
    };
    acc(op.uu, x.upper, y.upper);
    acc(op.ul, x.lower, y.upper);
    acc(op.lu, x.upper, y.lower);
    acc(op.ll, x.lower, y.lower);
    return y;
}

cplx inner(const TwoChannelState& a, const TwoChannelState& b) {
    cplx s{};
    for (std::size_t i = 0; i < a.upper.size(); ++i) s += std::conj(a.upper[i]) * b.upper[i];
    for (std::size_t i = 0; i < a.lower.size(); ++i) s += std::conj(a.lower[i]) * b.lower[i];
    return s;
}

BlockOperator interaction_s(const EnergyLadder& ladder, CouplingMode mode) {
    const int n = ladder.dim;
    BlockOperator s = BlockOperator::zeros(n);
    for (int m = 0; m < n; ++m) {
        const double g = rung_amplitude(ladder.energies[static_cast<std::size_t>(m) + 1], mode);
        s.ul(m, m + 1) = g;
        s.lu(m + 1, m) = g;
    }
    return s;
}

BlockOperator free_hamiltonian(const EnergyLadder& ladder) {
    std::vector<double> up(static_cast<std::size_t>(ladder.dim));
    for (int m = 0; m < ladder.dim; ++m) {
        up[static_cast<std::size_t>(m)] = ladder.energies[static_cast<std::size_t>(m) + 1];
    }
    return BlockOperator::diag(up, ladder.energies);
}

BlockOperator interaction_hamiltonian(const EnergyLadder& ladder,
                                      const CouplingConfig& coupling) {
    BlockOperator h = scale(coupling.alpha, interaction_s(ladder, coupling.mode));
    const double hd = ladder.hbar * coupling.delta;
    for (int m = 0; m < ladder.dim; ++m) h.uu(m, m) += hd;
    for (int k = 0; k <= ladder.dim; ++k) h.ll(k, k) -= hd;
    return h;
}

BlockOperator full_hamiltonian(const EnergyLadder& ladder,
                               const CouplingConfig& coupling) {
    return free_hamiltonian(ladder) + interaction_hamiltonian(ladder, coupling);
}

BlockOperator sigma3_block(int nu) {
    return BlockOperator::diag(std::vector<double>(static_cast<std::size_t>(nu), 1.0),
                               std::vector<double>(static_cast<std::size_t>(nu) + 1, -1.0));
}

} // namespace sijc
