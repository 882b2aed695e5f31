#pragma once
// Internal kernel variant tables. Each backend provides the same entry points;
// dispatch happens once through a function-pointer table.

#include "sijc/kernels.hpp"

namespace sijc::kernels::detail {

struct Vtable {
    void (*matmul_acc)(const cplx*, const cplx*, cplx*,
                       std::size_t, std::size_t, std::size_t);
    void (*sqrt_poly2)(const double*, double*, std::size_t,
                       double, double, double);
    void (*axpy)(cplx, const cplx*, cplx*, std::size_t);
    double (*frob_norm_sq)(const cplx*, std::size_t);
    double (*max_abs_diff)(const cplx*, const cplx*, std::size_t);
};

extern const Vtable scalar_vtable;
#if SIJC_HAVE_AVX2
extern const Vtable avx2_vtable;
#endif

} // namespace sijc::kernels::detail
