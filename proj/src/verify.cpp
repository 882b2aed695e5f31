#include "sijc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>

#include "sijc/evolution.hpp"
#include "sijc/inversion.hpp"
#include "sijc/oracle.hpp"
#include "sijc/spectrum.hpp"

namespace sijc::verify {

namespace {

constexpr double kInfo = std::numeric_limits<double>::infinity();

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double uni(double a, double b) {
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        return a + (b - a) * u;
    }
};

struct Collector {
    Report& report;
    void add(const std::string& name, double measured, double tol) {
        report.checks.push_back({name, measured, tol, !(measured > tol)});
    }
    void info(const std::string& name, double measured) {
        report.checks.push_back({name, measured, kInfo, true});
    }
};

double rel_diff(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

std::vector<CouplingConfig> seeded_couplings(Rng& rng) {
    std::vector<CouplingConfig> out;
    for (int i = 0; i < 5; ++i) {
        const double alpha = rng.uni(0.05, 1.0);
        const double delta = rng.uni(-1.0, 1.0);
        for (CouplingMode mode : {CouplingMode::linear, CouplingMode::intensity}) {
            out.push_back({alpha, delta, mode});
        }
    }
    return out;
}

void suite_spectrum(const io::RunConfig& cfg, std::uint64_t seed, Collector& c) {
    const EnergyLadder lad = energy_ladder(cfg.model, cfg.dim);
    Rng rng(seed);

    double energy_dev = 0.0, vec_dev = 0.0, norm_dev = 0.0, ortho_dev = 0.0;
    long comparisons = 0;
    for (const auto& cc : seeded_couplings(rng)) {
        const RungSystem rs = rung_system(lad, cc);
        for (int m = 0; m < lad.dim; ++m) {
            const auto [ep, em] = spectrum::dressed_energies(lad, cc, m);
            const auto re = oracle::rung_eigensystem(rs, m);
            energy_dev = std::max(energy_dev, rel_diff(ep, re.value_plus));
            energy_dev = std::max(energy_dev, rel_diff(em, re.value_minus));
            comparisons += 2;
        }
        for (int m = 0; m + 1 < lad.dim; ++m) {
            const auto re = oracle::rung_eigensystem(rs, m);
            const auto sp = spectrum::dressed_state(lad, cc, m, +1);
            const auto sm = spectrum::dressed_state(lad, cc, m, -1);
            // the library fixes the upper component positive; align signs
            const double fp = re.vec_plus[0] >= 0.0 ? 1.0 : -1.0;
            vec_dev = std::max(vec_dev,
                               std::abs(sp.upper[static_cast<std::size_t>(m)].real() -
                                        fp * re.vec_plus[0]));
            vec_dev = std::max(vec_dev,
                               std::abs(sp.lower[static_cast<std::size_t>(m) + 1].real() -
                                        fp * re.vec_plus[1]));
            const double sgn_minus =
                sm.upper[static_cast<std::size_t>(m)].real() * re.vec_minus[0] +
                sm.lower[static_cast<std::size_t>(m) + 1].real() * re.vec_minus[1];
            const double fm = sgn_minus >= 0.0 ? 1.0 : -1.0;
            vec_dev = std::max(vec_dev,
                               std::abs(sm.upper[static_cast<std::size_t>(m)].real() -
                                        fm * re.vec_minus[0]));
            vec_dev = std::max(vec_dev,
                               std::abs(sm.lower[static_cast<std::size_t>(m) + 1].real() -
                                        fm * re.vec_minus[1]));
            norm_dev = std::max(norm_dev, std::abs(sp.norm() - 1.0));
            norm_dev = std::max(norm_dev, std::abs(sm.norm() - 1.0));
            ortho_dev = std::max(ortho_dev, std::abs(inner(sp, sm)));
        }
    }
    c.info("spectrum.energy_comparisons_run", static_cast<double>(comparisons));
    c.add("spectrum.energies_vs_brute_rel", energy_dev, 1e-10);
    c.add("spectrum.eigenvectors_vs_brute", vec_dev, 1e-9);
    c.add("spectrum.state_norms", norm_dev, 1e-12);
    c.add("spectrum.pair_orthogonality", ortho_dev, 1e-12);

    // resonant limit: equal mixing and algebraic energies
    double res_dev = 0.0;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (CouplingMode mode : {CouplingMode::linear, CouplingMode::intensity}) {
        const CouplingConfig cc{cfg.coupling.alpha, 0.0, mode};
        for (int m = 0; m < lad.dim; ++m) {
            const auto p = spectrum::mixing_coefficients(lad, cc, m);
            res_dev = std::max(res_dev, std::abs(p.c_plus - inv_sqrt2));
            res_dev = std::max(res_dev, std::abs(p.c_minus - inv_sqrt2));
            const double e = lad.energies[static_cast<std::size_t>(m) + 1];
            const double want_p =
                mode == CouplingMode::linear ? e + cc.alpha * std::sqrt(e)
                                             : (1.0 + cc.alpha) * e;
            const double want_m =
                mode == CouplingMode::linear ? e - cc.alpha * std::sqrt(e)
                                             : (1.0 - cc.alpha) * e;
            const auto [ep, em] = spectrum::dressed_energies(lad, cc, m);
            res_dev = std::max(res_dev, rel_diff(ep, want_p));
            res_dev = std::max(res_dev, rel_diff(em, want_m));
        }
    }
    c.add("spectrum.resonant_limit", res_dev, 1e-14);

    // assembled interaction vs independent rung eigenvalues
    double assembled_dev = 0.0;
    {
        const RungSystem rs = rung_system(lad, cfg.coupling);
        const auto dense = oracle::symmetric_eigenvalues(
            oracle::assemble_interaction(rs), 2 * lad.dim + 1);
        std::vector<double> per_rung{rs.singleton_interaction()};
        for (int m = 0; m < lad.dim; ++m) {
            const auto h = rs.rung_interaction(m);
            const double rad = std::hypot(0.5 * (h[0] - h[3]), h[1]);
            const double mid = 0.5 * (h[0] + h[3]);
            per_rung.push_back(mid + rad);
            per_rung.push_back(mid - rad);
        }
        std::sort(per_rung.begin(), per_rung.end());
        for (std::size_t i = 0; i < dense.size(); ++i) {
            assembled_dev = std::max(assembled_dev, rel_diff(dense[i], per_rung[i]));
        }
    }
    c.add("spectrum.assembled_vs_rung_eigenvalues", assembled_dev, 1e-12);

    // decoupling limit: alpha -> 0 against the dense oracle
    double decouple_dev = 0.0;
    {
        const double delta = cfg.coupling.resonant() ? 0.5 : cfg.coupling.delta;
        const CouplingConfig cc{1e-8, delta, cfg.coupling.mode};
        const RungSystem rs = rung_system(lad, cc);
        const auto dense =
            oracle::symmetric_eigenvalues(oracle::assemble_full(rs), 2 * lad.dim + 1);
        std::vector<double> closed{rs.singleton_full()};
        for (int m = 0; m < lad.dim; ++m) {
            const auto [ep, em] = spectrum::dressed_energies(lad, cc, m);
            closed.push_back(ep);
            closed.push_back(em);
        }
        std::sort(closed.begin(), closed.end());
        for (std::size_t i = 0; i < dense.size(); ++i) {
            decouple_dev = std::max(decouple_dev, rel_diff(closed[i], dense[i]));
        }
    }
    c.add("spectrum.decoupling_limit_vs_dense", decouple_dev, 1e-12);
}

void suite_evolution(const io::RunConfig& cfg, std::uint64_t seed, Collector& c) {
    const EnergyLadder lad = energy_ladder(cfg.model, cfg.dim);
    Rng rng(seed);

    std::vector<double> deltas{0.0};
    if (!cfg.coupling.resonant()) deltas.push_back(cfg.coupling.delta);

    double coupled_dev = 0.0, singleton_res = 0.0, singleton_off = 0.0;
    for (CouplingMode mode : {CouplingMode::linear, CouplingMode::intensity}) {
        for (double delta : deltas) {
            const CouplingConfig cc{cfg.coupling.alpha, delta, mode};
            for (int i = 0; i < 50; ++i) {
                const double t = rng.uni(0.0, 20.0);
                const auto p = evolution::propagator(lad, cc, t);
                const auto d = evolution::unitarity_defect(p);
                coupled_dev = std::max(coupled_dev, d.coupled);
                if (delta == 0.0) singleton_res = std::max(singleton_res, d.singleton);
                else singleton_off = std::max(singleton_off, d.singleton);
            }
        }
    }
    c.add("evolution.unitarity_coupled", coupled_dev, 1e-10);
    c.add("evolution.unitarity_singleton_resonant", singleton_res, 1e-12);
    c.info("evolution.unitarity_singleton_detuned", singleton_off);

    // second-order equation: finite differences shrink ~4x when h halves
    double ratio_dev = 0.0;
    for (int i = 0; i < 5; ++i) {
        const double t = 0.3 + 0.4 * i;
        const double r1 = evolution::second_order_residual_fd(lad, cfg.coupling, t, 1e-3);
        const double r2 = evolution::second_order_residual_fd(lad, cfg.coupling, t, 5e-4);
        ratio_dev = std::max(ratio_dev, std::abs(r1 / r2 - 4.0));
    }
    c.add("evolution.second_order_fd_ratio_minus_4", ratio_dev, 1.0);

    double analytic_second = 0.0;
    for (int i = 0; i < 5; ++i) {
        analytic_second = std::max(
            analytic_second, evolution::second_order_residual(lad, cfg.coupling, 0.4 * (i + 1)));
    }
    c.add("evolution.second_order_analytic", analytic_second, 1e-10);

    // resonant propagator against the exact rung exponential
    double mag_dev = 0.0, conj_res = 0.0;
    for (CouplingMode mode : {CouplingMode::linear, CouplingMode::intensity}) {
        const CouplingConfig cc{cfg.coupling.alpha, 0.0, mode};
        const RungSystem rs = rung_system(lad, cc);
        for (int i = 0; i < 10; ++i) {
            const double t = rng.uni(0.0, 8.0);
            const auto p = evolution::propagator(lad, cc, t);
            for (int m = 0; m < lad.dim; ++m) {
                const auto e = oracle::exact_rung_propagator(rs, m, t);
                const cplx u00 = p.u.uu(m, m), u01 = p.u.ul(m, m + 1);
                const cplx u10 = p.u.lu(m + 1, m), u11 = p.u.ll(m + 1, m + 1);
                mag_dev = std::max(mag_dev, std::abs(std::abs(u00) - std::abs(e[0])));
                mag_dev = std::max(mag_dev, std::abs(std::abs(u01) - std::abs(e[1])));
                mag_dev = std::max(mag_dev, std::abs(std::abs(u10) - std::abs(e[2])));
                mag_dev = std::max(mag_dev, std::abs(std::abs(u11) - std::abs(e[3])));
            }
            conj_res = std::max(conj_res,
                                evolution::schrodinger_residual(lad, cc, t, true));
        }
    }
    c.add("evolution.resonant_magnitudes_vs_exact", mag_dev, 1e-10);
    c.add("evolution.resonant_conjugated_residual", conj_res, 1e-12);

    if (!cfg.coupling.resonant()) {
        c.info("evolution.detuned_residual_as_printed",
               evolution::schrodinger_residual(lad, cfg.coupling, 1.0, false));
        c.info("evolution.detuned_residual_conjugated",
               evolution::schrodinger_residual(lad, cfg.coupling, 1.0, true));
    }

    // the rung isometry intertwines the channel frequencies exactly
    double twine_dev = 0.0;
    {
        const auto w = evolution::interaction_frequencies(lad, cfg.coupling);
        for (int m = 0; m < lad.dim; ++m) {
            const double w1 = w.omega1[static_cast<std::size_t>(m)];
            const double w2 = w.omega2[static_cast<std::size_t>(m) + 1];
            twine_dev = std::max(twine_dev, std::abs(std::sin(w2 * 1.3) - std::sin(w1 * 1.3)));
            twine_dev = std::max(twine_dev, std::abs(std::cos(w2 * 1.3) - std::cos(w1 * 1.3)));
            double p1 = 1.0, p2 = 1.0;
            for (int k = 0; k < 6; ++k) {
                p1 *= w1;
                p2 *= w2;
                twine_dev = std::max(twine_dev, std::abs(p1 - p2));
            }
        }
    }
    c.add("evolution.intertwining_exact", twine_dev, 1e-15);
}

void suite_inversion(const io::RunConfig& cfg, std::uint64_t seed, Collector& c) {
    const EnergyLadder lad = energy_ladder(cfg.model, cfg.dim);
    Rng rng(seed);
    const int order = cfg.series_order;

    const CouplingConfig detuned{cfg.coupling.alpha,
                                 cfg.coupling.resonant() ? 0.3 : cfg.coupling.delta,
                                 cfg.coupling.mode};

    // guard-safe time horizon for the series assembly
    const auto w = evolution::interaction_frequencies(lad, detuned);
    const auto nu = inversion::rabi_frequencies(lad, detuned);
    double wmax = 0.0;
    for (int m = 0; m < lad.dim; ++m) {
        wmax = std::max(wmax, nu.nu1[static_cast<std::size_t>(m)] +
                                  w.omega1[static_cast<std::size_t>(m)]);
    }
    const double t_guard = std::min(2.5, 0.9 * 25.0 / wmax);

    c.add("inversion.particular_at_zero",
          max_abs(inversion::particular_solution(lad, detuned, 0.0, order)), 0.0);

    {
        const double h = 1e-4;
        const auto pp = inversion::particular_solution(lad, detuned, h, order);
        const auto pm = inversion::particular_solution(lad, detuned, -h, order);
        c.add("inversion.particular_slope_at_zero",
              max_abs_diff(pp, pm) / (2.0 * h), 1e-8);
    }

    double kc_dev = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double t = t_guard * (i + 1) / 10.0;
        kc_dev = std::max(kc_dev,
                          max_abs_diff(inversion::particular_solution(lad, detuned, t, order),
                                       inversion::particular_solution_closed(lad, detuned, t)));
    }
    c.add("inversion.series_vs_closed_assembly", kc_dev, 1e-8);

    // resonant consistency with the Heisenberg oracle
    double res_dev = 0.0, rung0_dev = 0.0;
    for (CouplingMode mode : {CouplingMode::linear, CouplingMode::intensity}) {
        const CouplingConfig cc{cfg.coupling.alpha, 0.0, mode};
        const auto nures = inversion::rabi_frequencies(lad, cc);
        const BlockOperator init = sigma3_block(lad.dim);
        for (int i = 0; i < 20; ++i) {
            const double t = rng.uni(0.0, 6.0);
            const auto sol = inversion::resonant_inversion(lad, cc, init, t);
            const auto heis = oracle::heisenberg_sigma3(lad, cc, t, true);
            res_dev = std::max(res_dev, max_abs_diff(sol.total, heis));
            rung0_dev = std::max(rung0_dev,
                                 std::abs(sol.total.uu(0, 0) -
                                          std::cos(nures.nu1[0] * t)));
        }
    }
    c.add("inversion.resonant_vs_heisenberg", res_dev, 1e-9);
    c.add("inversion.rung0_cosine", rung0_dev, 1e-10);

    // commutator identities
    double comm_dev = 0.0, theta_dev = 0.0;
    for (CouplingMode mode : {CouplingMode::linear, CouplingMode::intensity}) {
        const CouplingConfig cc{detuned.alpha, detuned.delta, mode};
        const BlockOperator h = full_hamiltonian(lad, cc);
        const BlockOperator s = interaction_s(lad, mode);
        const BlockOperator s3 = sigma3_block(lad.dim);
        const BlockOperator lhs1 = commutator(s3, h);
        const BlockOperator rhs1 = scale(-2.0 * cc.alpha, s * s3);
        comm_dev = std::max(comm_dev, max_abs_diff(lhs1, rhs1));
        const BlockOperator lhs2 = commutator(s, h);
        const BlockOperator rhs2 =
            scale(2.0 * cc.alpha * cc.beta(lad.hbar), s * s3);
        comm_dev = std::max(comm_dev, max_abs_diff(lhs2, rhs2));
        theta_dev = std::max(
            theta_dev, max_abs(commutator(inversion::theta_operator(lad, cc) *
                                              inversion::theta_operator(lad, cc),
                                          h)));
    }
    c.add("inversion.commutator_identities", comm_dev, 1e-12);
    c.add("inversion.theta_constant_of_motion", theta_dev, 1e-12);

    // Hermiticity of sigma3(t)
    {
        const BlockOperator init = sigma3_block(lad.dim);
        const CouplingConfig res{cfg.coupling.alpha, 0.0, cfg.coupling.mode};
        double herm_res = 0.0;
        for (int i = 1; i <= 5; ++i) {
            herm_res = std::max(herm_res,
                                hermiticity_defect(
                                    inversion::sigma3_of_t(lad, res, init, 0.5 * i, order)
                                        .total));
        }
        c.add("inversion.hermiticity_resonant", herm_res, 1e-10);
        double herm_det = 0.0;
        for (int i = 1; i <= 5; ++i) {
            const double t = t_guard * i / 5.0;
            herm_det = std::max(herm_det,
                                hermiticity_defect(
                                    inversion::sigma3_of_t(lad, detuned, init, t, order)
                                        .total));
        }
        c.info("inversion.hermiticity_detuned", herm_det);
    }

    // documented open residual: detuned sigma3(t) vs Heisenberg conjugation
    {
        const BlockOperator init = sigma3_block(lad.dim);
        const double t = t_guard;
        const auto sol = inversion::sigma3_of_t(lad, detuned, init, t, order);
        c.info("inversion.detuned_vs_heisenberg_exact",
               max_abs_diff(sol.total, oracle::heisenberg_sigma3(lad, detuned, t, true)));
        c.info("inversion.detuned_vs_heisenberg_printed",
               max_abs_diff(sol.total, oracle::heisenberg_sigma3(lad, detuned, t, false)));
    }
}

void suite_series(const io::RunConfig& cfg, std::uint64_t seed, Collector& c) {
    Rng rng(seed);
    const int order = cfg.series_order;
    using inversion::TrigKind;

    double dev = 0.0;
    long comparisons = 0;
    for (TrigKind kind : {TrigKind::CC, TrigKind::CS, TrigKind::SC, TrigKind::SS}) {
        for (int i = 0; i < 50; ++i) {
            const double x = rng.uni(0.0, 3.0);
            const double w = rng.uni(0.0, 3.0);
            const double t = rng.uni(0.0, 2.0);
            dev = std::max(dev, std::abs(inversion::f_series(kind, x, w, t, order) -
                                         oracle::quad_f(kind, x, w, t)));
            ++comparisons;
        }
    }
    c.info("series.comparisons_run", static_cast<double>(comparisons));
    c.add("series.random_vs_quadrature", dev, 1e-8);

    const double pi = 3.14159265358979323846;
    c.add("series.cc_pi_quadrature",
          std::abs(oracle::quad_f(TrigKind::CC, 1.0, 1.0, pi) - pi / 2.0), 1e-10);
    c.add("series.cc_pi_series",
          std::abs(inversion::f_series(TrigKind::CC, 1.0, 1.0, pi, order) - pi / 2.0),
          1e-10);
    c.add("series.cc_spot_value",
          std::abs(oracle::quad_f(TrigKind::CC, 1.0, 2.0, 1.0) - 0.444255), 1e-5);

    // quadrature self-consistency under a tighter tolerance
    double self_dev = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double x = rng.uni(0.0, 3.0), w = rng.uni(0.0, 3.0), t = rng.uni(0.0, 2.0);
        self_dev = std::max(self_dev,
                            std::abs(oracle::quad_f(TrigKind::SC, x, w, t, 1e-11) -
                                     oracle::quad_f(TrigKind::SC, x, w, t, 5e-12)));
    }
    c.add("series.quadrature_self_consistency", self_dev, 1e-11);
}

} // namespace

bool Report::all_pass() const {
    for (const auto& ch : checks) {
        if (!ch.pass) return false;
    }
    return true;
}

bool known_suite(const std::string& suite) {
    return suite == "spectrum" || suite == "evolution" || suite == "inversion" ||
           suite == "series" || suite == "all";
}

Report run_suite(const std::string& suite, const io::RunConfig& cfg, std::uint64_t seed) {
    Report report;
    Collector c{report};
    if (suite == "spectrum" || suite == "all") suite_spectrum(cfg, seed, c);
    if (suite == "evolution" || suite == "all") suite_evolution(cfg, seed, c);
    if (suite == "inversion" || suite == "all") suite_inversion(cfg, seed, c);
    if (suite == "series" || suite == "all") suite_series(cfg, seed, c);
    if (report.checks.empty() && !known_suite(suite)) {
        throw std::invalid_argument("unknown verify suite: " + suite);
    }
    return report;
}

void print_report(std::ostream& os, const Report& report) {
    for (const auto& ch : report.checks) {
        os << "CHECK " << ch.name << ' ' << io::format_double(ch.measured) << ' '
           << io::format_double(ch.tolerance) << ' ' << (ch.pass ? "PASS" : "FAIL")
           << '\n';
    }
}

} // namespace sijc::verify
