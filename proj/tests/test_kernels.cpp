// Scalar/AVX2 kernel equivalence and dispatch behavior.

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "sijc/kernels.hpp"

namespace k = sijc::kernels;
using k::cplx;

namespace {

std::vector<cplx> random_cvec(std::mt19937_64& gen, std::size_t n) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (auto& x : v) x = cplx(d(gen), d(gen));
    return v;
}

std::vector<double> random_rvec(std::mt19937_64& gen, std::size_t n) {
    std::uniform_real_distribution<double> d(0.0, 50.0);
    std::vector<double> v(n);
    for (auto& x : v) x = d(gen);
    return v;
}

struct BackendGuard {
    k::Backend saved = k::active();
    ~BackendGuard() { k::set_backend(saved); }
};

} // namespace

TEST_CASE("kernel dispatch honors set_backend") {
    BackendGuard guard;
    REQUIRE(k::set_backend(k::Backend::scalar));
    CHECK(k::active() == k::Backend::scalar);
    if (k::cpu_has_avx2()) {
        REQUIRE(k::set_backend(k::Backend::avx2));
        CHECK(k::active() == k::Backend::avx2);
    } else {
        CHECK_FALSE(k::set_backend(k::Backend::avx2));
    }
}

TEST_CASE("scalar and avx2 matmul variants agree") {
    if (!k::cpu_has_avx2()) {
        MESSAGE("AVX2 unavailable on this CPU; equivalence suite skipped");
        return;
    }
    BackendGuard guard;
    std::mt19937_64 gen(1234);

    const struct { std::size_t n, m, kk; } shapes[] = {
        {1, 1, 1}, {3, 5, 2}, {17, 17, 17}, {64, 65, 64}, {65, 64, 65},
    };

    for (const auto& s : shapes) {
        CAPTURE(s.n);
        const auto a = random_cvec(gen, s.n * s.m);
        const auto b = random_cvec(gen, s.m * s.kk);
        std::vector<cplx> c_scalar(s.n * s.kk), c_avx2(s.n * s.kk);

        REQUIRE(k::set_backend(k::Backend::scalar));
        k::matmul_acc(a.data(), b.data(), c_scalar.data(), s.n, s.m, s.kk);
        const double f_scalar = k::frob_norm_sq(c_scalar.data(), c_scalar.size());

        REQUIRE(k::set_backend(k::Backend::avx2));
        k::matmul_acc(a.data(), b.data(), c_avx2.data(), s.n, s.m, s.kk);
        const double f_avx2 = k::frob_norm_sq(c_avx2.data(), c_avx2.size());

        const double scale = std::sqrt(f_scalar) + 1.0;
        CHECK(k::max_abs_diff(c_scalar.data(), c_avx2.data(), c_scalar.size()) <=
              1e-12 * scale);
        CHECK(f_scalar == doctest::Approx(f_avx2).epsilon(1e-12));
    }
}

TEST_CASE("sqrt_poly2 variants agree bitwise") {
    if (!k::cpu_has_avx2()) return;
    BackendGuard guard;
    std::mt19937_64 gen(99);
    for (std::size_t n : {std::size_t{1}, std::size_t{7}, std::size_t{64}, std::size_t{65}}) {
        const auto x = random_rvec(gen, n);
        std::vector<double> ys(n), yv(n);
        REQUIRE(k::set_backend(k::Backend::scalar));
        k::sqrt_poly2(x.data(), ys.data(), n, 0.04, 0.3, 0.09);
        REQUIRE(k::set_backend(k::Backend::avx2));
        k::sqrt_poly2(x.data(), yv.data(), n, 0.04, 0.3, 0.09);
        for (std::size_t i = 0; i < n; ++i) CHECK(ys[i] == yv[i]);
    }
}

TEST_CASE("axpy and max_abs_diff variants agree") {
    if (!k::cpu_has_avx2()) return;
    BackendGuard guard;
    std::mt19937_64 gen(7);
    const std::size_t n = 131;
    const auto x = random_cvec(gen, n);
    auto y1 = random_cvec(gen, n);
    auto y2 = y1;
    const cplx a(0.3, -0.8);

    REQUIRE(k::set_backend(k::Backend::scalar));
    k::axpy(a, x.data(), y1.data(), n);
    const double d1 = k::max_abs_diff(y1.data(), x.data(), n);

    REQUIRE(k::set_backend(k::Backend::avx2));
    k::axpy(a, x.data(), y2.data(), n);
    const double d2 = k::max_abs_diff(y2.data(), x.data(), n);

    CHECK(k::max_abs_diff(y1.data(), y2.data(), n) <= 1e-14);
    CHECK(d1 == doctest::Approx(d2).epsilon(1e-13));
}
