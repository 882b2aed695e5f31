#pragma once
// Runtime-dispatched arithmetic kernels. A scalar reference implementation is
// always present; an AVX2 variant is compiled on x86-64 and selected at
// startup when the CPU supports it. The environment variable SIJC_KERNELS
// (values: "scalar", "avx2") overrides the automatic choice.
//
// Complex data is interleaved re/im with the std::complex<double> layout.

#include <complex>
#include <cstddef>
#include <string_view>

namespace sijc::kernels {

using cplx = std::complex<double>;

enum class Backend { scalar, avx2 };

Backend active();
std::string_view backend_name(Backend b);
bool set_backend(Backend b);   // false (and no change) if unsupported here
bool cpu_has_avx2();

// C[n x k] += A[n x m] * B[m x k], row-major
void matmul_acc(const cplx* a, const cplx* b, cplx* c,
                std::size_t n, std::size_t m, std::size_t k);

// y[i] = sqrt(c2*x[i]^2 + c1*x[i] + c0)
void sqrt_poly2(const double* x, double* y, std::size_t n,
                double c2, double c1, double c0);

// y[i] += a * x[i]
void axpy(cplx a, const cplx* x, cplx* y, std::size_t n);

double frob_norm_sq(const cplx* a, std::size_t n);
double max_abs_diff(const cplx* a, const cplx* b, std::size_t n);

} // namespace sijc::kernels
