// Scalar reference kernels and backend dispatch.

#include "kernels_impl.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>

namespace sijc::kernels {

namespace detail {

namespace {

void matmul_acc_scalar(const cplx* a, const cplx* b, cplx* c,
                       std::size_t n, std::size_t m, std::size_t k) {
    // i-l-j loop order matches the vectorized variant so accumulation order
    // agrees up to FMA rounding.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < m; ++l) {
            const cplx av = a[i * m + l];
            const cplx* brow = b + l * k;
            cplx* crow = c + i * k;
            for (std::size_t j = 0; j < k; ++j) crow[j] += av * brow[j];
        }
    }
}

void sqrt_poly2_scalar(const double* x, double* y, std::size_t n,
                       double c2, double c1, double c0) {
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = x[i];
        y[i] = std::sqrt(std::fma(xi, std::fma(xi, c2, c1), c0));
    }
}

void axpy_scalar(cplx a, const cplx* x, cplx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double frob_norm_sq_scalar(const cplx* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return s;
}

double max_abs_diff_scalar(const cplx* a, const cplx* b, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double re = a[i].real() - b[i].real();
        const double im = a[i].imag() - b[i].imag();
        m = std::max(m, re * re + im * im);
    }
    return std::sqrt(m);
}

} // namespace

const Vtable scalar_vtable = {
    matmul_acc_scalar, sqrt_poly2_scalar, axpy_scalar,
    frob_norm_sq_scalar, max_abs_diff_scalar,
};

} // namespace detail

namespace {

const detail::Vtable* g_active = nullptr;
Backend g_backend = Backend::scalar;

void init_dispatch() {
    if (g_active) return;
    Backend want = cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
    if (const char* env = std::getenv("SIJC_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) want = Backend::scalar;
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) want = Backend::avx2;
    }
    g_backend = want;
#if SIJC_HAVE_AVX2
    g_active = (want == Backend::avx2) ? &detail::avx2_vtable : &detail::scalar_vtable;
#else
    g_active = &detail::scalar_vtable;
#endif
}

} // namespace

bool cpu_has_avx2() {
#if SIJC_HAVE_AVX2
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend active() {
    init_dispatch();
    return g_backend;
}

std::string_view backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

bool set_backend(Backend b) {
    init_dispatch();
    if (b == Backend::avx2) {
#if SIJC_HAVE_AVX2
        if (!cpu_has_avx2()) return false;
        g_active = &detail::avx2_vtable;
        g_backend = b;
        return true;
#else
        return false;
#endif
    }
    g_active = &detail::scalar_vtable;
    g_backend = b;
    return true;
}

void matmul_acc(const cplx* a, const cplx* b, cplx* c,
                std::size_t n, std::size_t m, std::size_t k) {
    init_dispatch();
    g_active->matmul_acc(a, b, c, n, m, k);
}

void sqrt_poly2(const double* x, double* y, std::size_t n,
                double c2, double c1, double c0) {
    init_dispatch();
    g_active->sqrt_poly2(x, y, n, c2, c1, c0);
}

void axpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
    init_dispatch();
    g_active->axpy(a, x, y, n);
}

double frob_norm_sq(const cplx* a, std::size_t n) {
    init_dispatch();
    return g_active->frob_norm_sq(a, n);
}

double max_abs_diff(const cplx* a, const cplx* b, std::size_t n) {
    init_dispatch();
    return g_active->max_abs_diff(a, b, n);
}

} // namespace sijc::kernels
