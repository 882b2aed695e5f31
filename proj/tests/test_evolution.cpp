// Evolution matrix: frequencies, rung isometry, unitarity, state evolution,
// and generator residuals.

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sijc/evolution.hpp"
#include "sijc/oracle.hpp"
#include "sijc/spectrum.hpp"

using namespace sijc;
namespace ev = sijc::evolution;

namespace {

EnergyLadder ho_ladder(int n = 8) {
    return energy_ladder(ShapeInvariantModel::harmonic(1.0), n);
}

} // namespace

TEST_CASE("interaction frequencies") {
    const auto lad = ho_ladder();

    const auto res = ev::interaction_frequencies(lad, {0.2, 0.0, CouplingMode::linear});
    CHECK(res.omega1[0] == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(res.omega2[0] == 0.0);

    const auto det = ev::interaction_frequencies(lad, {0.2, 0.3, CouplingMode::linear});
    CHECK(det.omega1[1] == doctest::Approx(std::sqrt(0.17)).epsilon(1e-15));

    const auto inten = ev::interaction_frequencies(lad, {0.2, 0.3, CouplingMode::intensity});
    CHECK(inten.omega1[1] == doctest::Approx(std::sqrt(0.04 * 4.0 + 0.09)).epsilon(1e-15));

    // rung matching is exact, not approximate
    for (const auto& w : {res, det, inten}) {
        for (int m = 0; m < lad.dim; ++m) {
            CHECK(w.omega2[static_cast<std::size_t>(m) + 1] ==
                  w.omega1[static_cast<std::size_t>(m)]);
        }
    }
}

TEST_CASE("rung isometry") {
    const auto lad = ho_ladder(5);
    const Matrix c = ev::c_operator(lad);
    REQUIRE(c.rows == 5);
    REQUIRE(c.cols == 6);
    for (int m = 0; m < 5; ++m) CHECK(c(m, m + 1) == cplx(0.0, 1.0));
    for (int m = 0; m < 5; ++m) CHECK(c(m, 0) == cplx{});   // annihilates lower 0

    const Matrix cc_dag = c * c.adjoint();
    CHECK(max_abs_diff(cc_dag, Matrix::identity(5)) == 0.0);
    const Matrix cdag_c = c.adjoint() * c;
    CHECK(cdag_c(0, 0) == cplx{});
    for (int k = 1; k <= 5; ++k) CHECK(cdag_c(k, k) == cplx(1.0));

    // the isometry against the half-shift: amplitudes i * E^{1/4}
    const std::vector<double> eu(lad.energies.begin() + 1, lad.energies.end());
    const auto quarter = diag_apply(eu, [](double x) { return std::pow(x, 0.25); }, "E^(1/4)");
    Matrix half_shift(6, 5);   // lower <- upper with amplitude E^{1/4}
    for (int m = 0; m < 5; ++m) half_shift(m + 1, m) = quarter[static_cast<std::size_t>(m)];
    const Matrix prod = c * half_shift;
    for (int m = 0; m < 5; ++m) {
        CHECK(prod(m, m) == cplx(0.0, quarter[static_cast<std::size_t>(m)]));
    }
}

TEST_CASE("propagator structure and unitarity") {
    const auto lad = ho_ladder();
    const CouplingConfig res{0.2, 0.0, CouplingMode::linear};

    const auto p0 = ev::propagator(lad, res, 0.0);
    CHECK(max_abs_diff(p0.u, BlockOperator::identity(lad.dim)) == 0.0);

    // half Rabi cycle on rung 0: population fully transferred
    const double t_half = std::numbers::pi / 0.4;
    const auto ph = ev::propagator(lad, res, t_half);
    CHECK(std::abs(ph.u.uu(0, 0)) <= 1e-12);
    CHECK(std::abs(ph.u.ul(0, 1)) == doctest::Approx(1.0).epsilon(1e-12));

    const auto pd = ev::propagator(lad, {0.2, 0.3, CouplingMode::linear}, 1.7);
    const auto d = ev::unitarity_defect(pd);
    CHECK(d.coupled <= 1e-12);
    const double c0 = std::cos(0.3 * 1.7);
    CHECK(d.singleton == doctest::Approx(std::abs(c0 * c0 - 1.0)).epsilon(1e-12));
}

TEST_CASE("unitarity sweep over both modes") {
    const auto lad = ho_ladder(12);
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> ut(0.0, 20.0);
    for (CouplingMode mode : {CouplingMode::linear, CouplingMode::intensity}) {
        for (double delta : {0.0, 0.3}) {
            const CouplingConfig cc{0.2, delta, mode};
            for (int i = 0; i < 50; ++i) {
                const auto p = ev::propagator(lad, cc, ut(gen));
                CHECK(ev::unitarity_defect(p).coupled <= 1e-10);
            }
        }
    }
}

TEST_CASE("shift block intertwines channel frequency functions exactly") {
    const auto lad = ho_ladder(6);
    const CouplingConfig cc{0.2, 0.3, CouplingMode::linear};
    const auto w = ev::interaction_frequencies(lad, cc);

    Matrix shift(6, 7);   // the index routing of the rung isometry
    for (int m = 0; m < 6; ++m) shift(m, m + 1) = 1.0;

    auto diag_of = [](const std::vector<double>& v, auto&& f) {
        std::vector<double> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = f(v[i]);
        return Matrix::diag_real(out);
    };
    const double t = 1.3;
    const auto funcs = {
        std::function<double(double)>([t](double x) { return std::sin(x * t); }),
        std::function<double(double)>([t](double x) { return std::cos(x * t); }),
        std::function<double(double)>([](double x) { return x * x * x; }),
        std::function<double(double)>(
            [](double x) { return x * x * x * x * x * x; }),
    };
    for (const auto& f : funcs) {
        const Matrix lhs = shift * diag_of(w.omega2, f);
        const Matrix rhs = diag_of(w.omega1, f) * shift;
        CHECK(max_abs_diff(lhs, rhs) == 0.0);
    }
}

TEST_CASE("rung periodicity") {
    const auto lad = ho_ladder();
    const CouplingConfig cc{0.2, 0.3, CouplingMode::linear};
    const auto w = ev::interaction_frequencies(lad, cc);
    for (int m : {0, 3, 7}) {
        const double period = 2.0 * std::numbers::pi / w.omega1[static_cast<std::size_t>(m)];
        const auto pa = ev::propagator(lad, cc, 0.6);
        const auto pb = ev::propagator(lad, cc, 0.6 + period);
        CHECK(std::abs(pa.u.uu(m, m) - pb.u.uu(m, m)) <= 1e-9);
        CHECK(std::abs(pa.u.ul(m, m + 1) - pb.u.ul(m, m + 1)) <= 1e-9);
    }
}

TEST_CASE("evolve_state basics") {
    const auto lad = ho_ladder();
    const CouplingConfig res{0.2, 0.0, CouplingMode::linear};

    const auto st = TwoChannelState::basis(lad.dim, true, 0);
    const auto same = ev::evolve_state(st, lad, res, 0.0);
    for (std::size_t i = 0; i < st.upper.size(); ++i) CHECK(same.upper[i] == st.upper[i]);

    // half Rabi cycle empties the initial upper level
    const double t_half = std::numbers::pi / 0.4;
    const auto out = ev::evolve_state(st, lad, res, t_half);
    CHECK(std::norm(out.upper[0]) <= 1e-12);
    CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-12));

    TwoChannelState wrong = TwoChannelState::zeros(lad.dim + 1);
    CHECK_THROWS_AS(ev::evolve_state(wrong, lad, res, 0.1), std::invalid_argument);
}

TEST_CASE("evolution preserves the norm of random states off the uncoupled entry") {
    const auto lad = ho_ladder(10);
    std::mt19937_64 gen(404);
    std::uniform_real_distribution<double> d(-1.0, 1.0), ut(0.0, 12.0);
    for (CouplingMode mode : {CouplingMode::linear, CouplingMode::intensity}) {
        for (double delta : {0.0, 0.45}) {
            const CouplingConfig cc{0.3, delta, mode};
            for (int trial = 0; trial < 8; ++trial) {
                TwoChannelState st = TwoChannelState::zeros(lad.dim);
                for (auto& v : st.upper) v = cplx(d(gen), d(gen));
                for (std::size_t i = 1; i < st.lower.size(); ++i) {
                    st.lower[i] = cplx(d(gen), d(gen));
                }
                st.normalize();
                const auto out = ev::evolve_state(st, lad, cc, ut(gen));
                CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("dressed states evolve by a pure phase at resonance") {
    const auto lad = ho_ladder();
    for (CouplingMode mode : {CouplingMode::linear, CouplingMode::intensity}) {
        const CouplingConfig cc{0.2, 0.0, mode};
        for (int m : {0, 2}) {
            for (int sign : {+1, -1}) {
                const auto st = spectrum::dressed_state(lad, cc, m, sign);
                for (double t : {0.4, 1.3, 5.0}) {
                    const auto out = ev::evolve_state(st, lad, cc, t);
                    CHECK(std::abs(inner(st, out)) == doctest::Approx(1.0).epsilon(1e-10));
                }
            }
        }
    }
}

TEST_CASE("uncoupled ground state keeps the literal cosine entry") {
    const auto lad = ho_ladder();
    const CouplingConfig cc{0.2, 0.3, CouplingMode::linear};
    const auto rs = rung_system(lad, cc);
    const auto st = TwoChannelState::basis(lad.dim, false, 0);
    const double t = 1.1;
    const auto out = ev::evolve_state(st, lad, cc, t);
    // as built: cos(|delta| t) (E_0 = 0 so the free phase is trivial)
    CHECK(out.lower[0].real() == doctest::Approx(std::cos(0.3 * t)).epsilon(1e-14));
    CHECK(out.lower[0].imag() == 0.0);
    // the exact interaction propagator would give the phase e^{+i delta t}
    const cplx exact = oracle::exact_singleton_phase(rs, t);
    CHECK(std::abs(out.lower[0] - exact) ==
          doctest::Approx(std::abs(std::sin(0.3 * t))).epsilon(1e-12));
}

TEST_CASE("resonant propagator matches the exact exponential up to phase convention") {
    const auto lad = ho_ladder();
    for (CouplingMode mode : {CouplingMode::linear, CouplingMode::intensity}) {
        const CouplingConfig cc{0.2, 0.0, mode};
        const auto rs = rung_system(lad, cc);
        for (double t : {0.7, 2.9}) {
            const auto p = ev::propagator(lad, cc, t);
            for (int m = 0; m < lad.dim; ++m) {
                const auto e = oracle::exact_rung_propagator(rs, m, t);
                CHECK(std::abs(std::abs(p.u.uu(m, m)) - std::abs(e[0])) <= 1e-10);
                CHECK(std::abs(std::abs(p.u.ul(m, m + 1)) - std::abs(e[1])) <= 1e-10);
                CHECK(std::abs(std::abs(p.u.lu(m + 1, m)) - std::abs(e[2])) <= 1e-10);
                CHECK(std::abs(std::abs(p.u.ll(m + 1, m + 1)) - std::abs(e[3])) <= 1e-10);
                // off-diagonal signs are conjugate between the conventions
                CHECK(std::abs(p.u.ul(m, m + 1) - std::conj(e[1])) <= 1e-12);
            }
        }
    }
}

TEST_CASE("schrodinger residual per phase convention") {
    const auto lad = ho_ladder();
    const CouplingConfig res{0.2, 0.0, CouplingMode::linear};
    CHECK(ev::schrodinger_residual(lad, res, 1.4, true) <= 1e-12);
    CHECK(ev::schrodinger_residual(lad, res, 1.4, false) > 0.1);

    // detuned residuals are nonzero and frozen as regression values
    const CouplingConfig det{0.2, 0.3, CouplingMode::linear};
    CHECK(ev::schrodinger_residual(lad, det, 1.0, false) ==
          doctest::Approx(3.9680307073153713).epsilon(1e-9));
    CHECK(ev::schrodinger_residual(lad, det, 1.0, true) ==
          doctest::Approx(1.3094778752626082).epsilon(1e-9));
}

TEST_CASE("nontrivial hbar threads through frequencies and phases") {
    // hbar = 0.5, omega = 2: the remainder is still 1, so E_n = n
    const auto lad = energy_ladder(ShapeInvariantModel::harmonic(2.0, 0.5), 6);
    CHECK(lad.energies[3] == 3.0);

    // omega1[m] = sqrt(alpha^2 E_{m+1} + (hbar delta)^2) / hbar
    const auto w = ev::interaction_frequencies(lad, {0.2, 0.3, CouplingMode::linear});
    CHECK(w.omega1[1] ==
          doctest::Approx(std::sqrt(0.04 * 2.0 + 0.0225) / 0.5).epsilon(1e-14));

    // resonant rung 0 from lower 1: cosine at alpha*sqrt(E_1)/hbar = 0.4,
    // free phase e^{-i E_1 t / hbar} = e^{-2 i t}
    const CouplingConfig res{0.2, 0.0, CouplingMode::linear};
    const double t = 0.9;
    const auto out =
        ev::evolve_state(TwoChannelState::basis(lad.dim, false, 1), lad, res, t);
    const cplx want = std::polar(1.0, -2.0 * t) * std::cos(0.4 * t);
    CHECK(std::abs(out.lower[1] - want) <= 1e-13);
}

TEST_CASE("second-order equation holds analytically and under differencing") {
    const auto lad = energy_ladder(ShapeInvariantModel::harmonic(1.0), 16);
    for (CouplingMode mode : {CouplingMode::linear, CouplingMode::intensity}) {
        const CouplingConfig cc{1.0, 0.7, mode};
        for (double t : {0.3, 0.7, 1.1, 1.6, 2.0}) {
            CHECK(ev::second_order_residual(lad, cc, t) <= 1e-10);
            const double r1 = ev::second_order_residual_fd(lad, cc, t, 1e-3);
            const double r2 = ev::second_order_residual_fd(lad, cc, t, 5e-4);
            CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.15));
        }
    }
}
