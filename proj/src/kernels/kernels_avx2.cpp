// AVX2/FMA kernel variants. Two interleaved complex doubles per 256-bit lane.

#include "kernels_impl.hpp"

#include <algorithm>
#include <cmath>
#include <immintrin.h>

namespace sijc::kernels::detail {

namespace {

// crow[j] += av * brow[j] over a row; complex multiply via fmaddsub:
// (ar + i*ai)(br + i*bi) = (ar*br - ai*bi) + i*(ar*bi + ai*br)
inline void row_axpy(cplx av, const double* brow, double* crow, std::size_t k) {
    const __m256d ar = _mm256_set1_pd(av.real());
    const __m256d ai = _mm256_set1_pd(av.imag());
    std::size_t j = 0;
    for (; j + 2 <= k; j += 2) {
        const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        const __m256d bs = _mm256_permute_pd(bv, 0x5);   // swap re/im per lane
        __m256d cv = _mm256_loadu_pd(crow + 2 * j);
        const __m256d t = _mm256_mul_pd(ai, bs);
        cv = _mm256_add_pd(cv, _mm256_fmaddsub_pd(ar, bv, t));
        _mm256_storeu_pd(crow + 2 * j, cv);
    }
    for (; j < k; ++j) {
        const double br = brow[2 * j], bi = brow[2 * j + 1];
        crow[2 * j] += av.real() * br - av.imag() * bi;
        crow[2 * j + 1] += av.real() * bi + av.imag() * br;
    }
}

void matmul_acc_avx2(const cplx* a, const cplx* b, cplx* c,
                     std::size_t n, std::size_t m, std::size_t k) {
    const double* bp = reinterpret_cast<const double*>(b);
    double* cp = reinterpret_cast<double*>(c);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < m; ++l) {
            row_axpy(a[i * m + l], bp + 2 * l * k, cp + 2 * i * k, k);
        }
    }
}

void sqrt_poly2_avx2(const double* x, double* y, std::size_t n,
                     double c2, double c1, double c0) {
    const __m256d v2 = _mm256_set1_pd(c2);
    const __m256d v1 = _mm256_set1_pd(c1);
    const __m256d v0 = _mm256_set1_pd(c0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        const __m256d p = _mm256_fmadd_pd(xv, _mm256_fmadd_pd(xv, v2, v1), v0);
        _mm256_storeu_pd(y + i, _mm256_sqrt_pd(p));
    }
    for (; i < n; ++i) {
        y[i] = std::sqrt(std::fma(x[i], std::fma(x[i], c2, c1), c0));
    }
}

void axpy_avx2(cplx a, const cplx* x, cplx* y, std::size_t n) {
    row_axpy(a, reinterpret_cast<const double*>(x), reinterpret_cast<double*>(y), n);
}

double frob_norm_sq_avx2(const cplx* a, std::size_t n) {
    const double* p = reinterpret_cast<const double*>(a);
    const std::size_t nd = 2 * n;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= nd; i += 4) {
        const __m256d v = _mm256_loadu_pd(p + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < nd; ++i) s += p[i] * p[i];
    return s;
}

double max_abs_diff_avx2(const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    __m256d mx = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(pa + 2 * i),
                                        _mm256_loadu_pd(pb + 2 * i));
        const __m256d sq = _mm256_mul_pd(d, d);
        // re^2 + im^2 per complex entry
        const __m256d sw = _mm256_permute_pd(sq, 0x5);
        mx = _mm256_max_pd(mx, _mm256_add_pd(sq, sw));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, mx);
    double m = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
    for (; i < n; ++i) {
        const double re = pa[2 * i] - pb[2 * i];
        const double im = pa[2 * i + 1] - pb[2 * i + 1];
        m = std::max(m, re * re + im * im);
    }
    return std::sqrt(m);
}

} // namespace

const Vtable avx2_vtable = {
    matmul_acc_avx2, sqrt_poly2_avx2, axpy_avx2,
    frob_norm_sq_avx2, max_abs_diff_avx2,
};

} // namespace sijc::kernels::detail
