// Closed-form dressed spectrum against the analytic rung oracle, limit
// behavior, and table structure.

#include <doctest.h>

#include <cmath>
#include <random>

#include "sijc/oracle.hpp"
#include "sijc/spectrum.hpp"

using namespace sijc;

namespace {

EnergyLadder ho_ladder(int n = 8) {
    return energy_ladder(ShapeInvariantModel::harmonic(1.0), n);
}

} // namespace

TEST_CASE("dressed energies: resonant and detuned values") {
    const auto lad = ho_ladder();

    const auto [rp, rm] = spectrum::dressed_energies(lad, {0.2, 0.0, CouplingMode::linear}, 0);
    CHECK(rp == doctest::Approx(1.2).epsilon(1e-14));
    CHECK(rm == doctest::Approx(0.8).epsilon(1e-14));

    const auto [ip, im] =
        spectrum::dressed_energies(lad, {0.5, 0.0, CouplingMode::intensity}, 1);
    CHECK(ip == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(im == doctest::Approx(1.0).epsilon(1e-14));

    // detuned rung 1: 2 +- sqrt(alpha^2 E_2 + (hbar delta)^2) = 2 +- sqrt(0.17)
    const auto [dp, dm] = spectrum::dressed_energies(lad, {0.2, 0.3, CouplingMode::linear}, 1);
    CHECK(dp == doctest::Approx(2.0 + std::sqrt(0.17)).epsilon(1e-14));
    CHECK(dm == doctest::Approx(2.0 - std::sqrt(0.17)).epsilon(1e-14));

    CHECK_THROWS_AS(spectrum::dressed_energies(lad, {0.2, 0.0, CouplingMode::linear}, 8),
                    std::out_of_range);
    CHECK_THROWS_AS(spectrum::dressed_energies(lad, {0.2, 0.0, CouplingMode::linear}, -1),
                    std::out_of_range);
}

TEST_CASE("mixing coefficients: closed form vs rung eigenvectors") {
    const auto lad = ho_ladder();
    const CouplingConfig cc{0.2, 0.3, CouplingMode::linear};

    const auto p = spectrum::mixing_coefficients(lad, cc, 1);
    const double delta1 = 1.5 / std::sqrt(2.0);   // beta / sqrt(E_2)
    CHECK(p.delta_m == doctest::Approx(delta1).epsilon(1e-14));
    const double gp = std::sqrt(1.0 + delta1 * delta1) - delta1;
    CHECK(p.gamma_plus == doctest::Approx(gp).epsilon(1e-13));
    CHECK(p.gamma_minus == doctest::Approx(1.0 / gp).epsilon(1e-13));
    CHECK(p.c_plus == doctest::Approx(1.0 / std::sqrt(1.0 + gp * gp)).epsilon(1e-13));
    CHECK(p.c_plus * p.c_plus + p.c_minus * p.c_minus ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p.lambda_plus == -p.lambda_minus);

    // the mixing amplitudes are the analytic rung eigenvector components
    const auto re = oracle::rung_eigensystem(rung_system(lad, cc), 1);
    CHECK(p.c_plus == doctest::Approx(re.vec_plus[0]).epsilon(1e-12));
    CHECK(p.c_minus == doctest::Approx(re.vec_plus[1]).epsilon(1e-12));

    // ratio chain: C(-) = gamma(+) C(+) and C(+) = gamma(-) C(-)
    CHECK(p.c_minus == doctest::Approx(p.gamma_plus * p.c_plus).epsilon(1e-13));
    CHECK(p.c_plus == doctest::Approx(p.gamma_minus * p.c_minus).epsilon(1e-13));
    CHECK(p.gamma_plus * p.gamma_minus == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(spectrum::mixing_coefficients(lad, {0.0, 0.3, CouplingMode::linear}, 1),
                    std::domain_error);
}

TEST_CASE("mixing coefficients limits") {
    const auto lad = ho_ladder();
    for (CouplingMode mode : {CouplingMode::linear, CouplingMode::intensity}) {
        for (int m = 0; m < 8; ++m) {
            const auto p = spectrum::mixing_coefficients(lad, {0.4, 0.0, mode}, m);
            CHECK(p.c_plus == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
            CHECK(p.c_minus == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
            CHECK(p.gamma_plus == 1.0);
            CHECK(p.gamma_minus == 1.0);
        }
    }
}

TEST_CASE("dressed states are eigenstates of the full Hamiltonian") {
    const auto lad = ho_ladder(10);
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> ua(0.05, 1.0), ud(-1.0, 1.0);
    for (int trial = 0; trial < 4; ++trial) {
        for (CouplingMode mode : {CouplingMode::linear, CouplingMode::intensity}) {
            const CouplingConfig cc{ua(gen), ud(gen), mode};
            const auto h = full_hamiltonian(lad, cc);
            for (int m = 0; m + 1 < lad.dim; ++m) {
                for (int sign : {+1, -1}) {
                    const auto st = spectrum::dressed_state(lad, cc, m, sign);
                    const auto [ep, em] = spectrum::dressed_energies(lad, cc, m);
                    const double e = sign > 0 ? ep : em;
                    auto hs = apply(h, st);
                    for (std::size_t i = 0; i < hs.upper.size(); ++i) {
                        hs.upper[i] -= e * st.upper[i];
                    }
                    for (std::size_t i = 0; i < hs.lower.size(); ++i) {
                        hs.lower[i] -= e * st.lower[i];
                    }
                    CHECK(hs.norm() <= 1e-10 * std::max(1.0, std::abs(e)));
                    CHECK(st.norm() == doctest::Approx(1.0).epsilon(1e-12));
                }
                const auto sp = spectrum::dressed_state(lad, cc, m, +1);
                const auto sm = spectrum::dressed_state(lad, cc, m, -1);
                CHECK(std::abs(inner(sp, sm)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("dressed state structure and bounds") {
    const auto lad = ho_ladder();
    const CouplingConfig res{0.2, 0.0, CouplingMode::linear};
    const auto st = spectrum::dressed_state(lad, res, 2, +1);
    CHECK(st.upper[2].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(st.lower[3].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    const auto sm = spectrum::dressed_state(lad, res, 2, -1);
    CHECK(sm.lower[3].real() == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));

    CHECK_THROWS_AS(spectrum::dressed_state(lad, res, 7, +1), std::out_of_range);
    CHECK_THROWS_AS(spectrum::dressed_state(lad, res, 0, 2), std::invalid_argument);
}

TEST_CASE("spectrum table structure") {
    const auto lad = ho_ladder();
    const CouplingConfig cc{0.2, 0.0, CouplingMode::linear};
    const auto t = spectrum::spectrum_table(lad, cc, 0);
    CHECK(t.pairs.size() == 1);
    CHECK(t.singleton_energy == 0.0);
    CHECK(t.pairs[0].energy_plus == doctest::Approx(1.2).epsilon(1e-14));

    const auto t5 = spectrum::spectrum_table(lad, {0.2, -0.7, CouplingMode::linear}, 5);
    CHECK(t5.pairs.size() + 1 == 7);   // m_max + 2 rows counting the singleton
    CHECK(t5.singleton_energy == doctest::Approx(0.7));

    CHECK_THROWS_AS(spectrum::spectrum_table(lad, cc, 7), std::out_of_range);
}

TEST_CASE("pair ordering invariant under joint rescaling of alpha and delta") {
    const auto lad = ho_ladder();
    const CouplingConfig base{0.3, 0.45, CouplingMode::linear};
    for (double kappa : {0.5, 3.0, 17.0}) {
        const CouplingConfig scaled{kappa * base.alpha, kappa * base.delta,
                                    CouplingMode::linear};
        for (int m = 0; m < lad.dim; ++m) {
            const auto p0 = spectrum::mixing_coefficients(lad, base, m);
            const auto p1 = spectrum::mixing_coefficients(lad, scaled, m);
            CHECK(p1.delta_m == doctest::Approx(p0.delta_m).epsilon(1e-14));
            CHECK(p1.gamma_plus == doctest::Approx(p0.gamma_plus).epsilon(1e-14));
            CHECK(p1.c_plus == doctest::Approx(p0.c_plus).epsilon(1e-14));
            CHECK(p1.c_minus == doctest::Approx(p0.c_minus).epsilon(1e-14));
            CHECK((p1.energy_plus > p1.energy_minus) ==
                  (p0.energy_plus > p0.energy_minus));
        }
    }
}

TEST_CASE("closed form tracks the dense spectrum as alpha -> 0") {
    const auto lad = ho_ladder(12);
    const CouplingConfig cc{1e-8, 0.5, CouplingMode::linear};
    const auto rs = rung_system(lad, cc);
    const auto dense = oracle::symmetric_eigenvalues(oracle::assemble_full(rs), 25);
    std::vector<double> closed{rs.singleton_full()};
    for (int m = 0; m < 12; ++m) {
        const auto [ep, em] = spectrum::dressed_energies(lad, cc, m);
        closed.push_back(ep);
        closed.push_back(em);
    }
    std::sort(closed.begin(), closed.end());
    for (std::size_t i = 0; i < dense.size(); ++i) {
        CHECK(std::abs(closed[i] - dense[i]) <= 1e-12 * std::max(1.0, std::abs(dense[i])));
        // decoupled levels sit at E_{m+1} +- hbar*|delta| up to O(alpha^2)
    }
}

TEST_CASE("harmonic closed forms are algebraic rearrangements") {
    const auto lad = ho_ladder(10);
    std::mt19937_64 gen(77);
    std::uniform_real_distribution<double> ua(0.05, 1.0), ud(-1.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        const double alpha = ua(gen), delta = ud(gen);
        for (int m = 0; m < 10; ++m) {
            const double em1 = m + 1.0;
            {
                const CouplingConfig cc{alpha, delta, CouplingMode::linear};
                const auto [ep, emn] = spectrum::dressed_energies(lad, cc, m);
                const double want =
                    std::sqrt(alpha * alpha * em1 + delta * delta);
                CHECK(std::abs(ep - (em1 + want)) <= 1e-12);
                CHECK(std::abs(emn - (em1 - want)) <= 1e-12);
                const auto p = spectrum::mixing_coefficients(lad, cc, m);
                const double dm = delta / std::sqrt(em1 * alpha * alpha);
                CHECK(std::abs(p.delta_m - dm) <= 1e-12);
                CHECK(std::abs(p.gamma_plus - (std::sqrt(1.0 + dm * dm) - dm)) <= 1e-12);
            }
            {
                const CouplingConfig cc{alpha, delta, CouplingMode::intensity};
                const auto [ep, emn] = spectrum::dressed_energies(lad, cc, m);
                const double want =
                    std::sqrt(alpha * alpha * em1 * em1 + delta * delta);
                CHECK(std::abs(ep - (em1 + want)) <= 1e-12);
                CHECK(std::abs(emn - (em1 - want)) <= 1e-12);
                const auto p = spectrum::mixing_coefficients(lad, cc, m);
                const double dm = delta / (alpha * em1);
                CHECK(std::abs(p.delta_m - dm) <= 1e-12);
            }
        }
    }
}
