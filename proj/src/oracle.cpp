#include "sijc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sijc::oracle {

RungEigen rung_eigensystem(const RungSystem& rungs, int m) {
    const auto h = rungs.rung_full(m);
    const double a = h[0], b = h[1], d = h[3];
    const double mid = 0.5 * (a + d);
    const double rad = std::hypot(0.5 * (a - d), b);
    // stable rotation angle of the symmetric 2x2
    const double phi = 0.5 * std::atan2(2.0 * b, a - d);
    const double c = std::cos(phi), s = std::sin(phi);

    RungEigen e;
    e.value_plus = mid + rad;
    e.value_minus = mid - rad;
    e.vec_plus = {c, s};
    e.vec_minus = {-s, c};
    // fix the overall sign: first nonzero component positive
    if (-s < 0.0 || (s == 0.0 && c < 0.0)) e.vec_minus = {s, -c};
    return e;
}

DenseSpectrum brute_spectrum(const RungSystem& rungs) {
    const int n = rungs.rung_count();
    struct Entry {
        double value;
        TwoChannelState vec;
    };
    std::vector<Entry> entries;
    entries.reserve(2 * static_cast<std::size_t>(n) + 1);

    entries.push_back({rungs.singleton_full(), TwoChannelState::basis(n, false, 0)});

    for (int m = 0; m < n; ++m) {
        const RungEigen e = rung_eigensystem(rungs, m);
        TwoChannelState vp = TwoChannelState::zeros(n);
        vp.upper[static_cast<std::size_t>(m)] = e.vec_plus[0];
        vp.lower[static_cast<std::size_t>(m) + 1] = e.vec_plus[1];
        TwoChannelState vm = TwoChannelState::zeros(n);
        vm.upper[static_cast<std::size_t>(m)] = e.vec_minus[0];
        vm.lower[static_cast<std::size_t>(m) + 1] = e.vec_minus[1];
        entries.push_back({e.value_plus, std::move(vp)});
        entries.push_back({e.value_minus, std::move(vm)});
    }

    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& x, const Entry& y) { return x.value < y.value; });

    DenseSpectrum out;
    out.eigenvalues.reserve(entries.size());
    out.eigenvectors.reserve(entries.size());
    for (auto& e : entries) {
        out.eigenvalues.push_back(e.value);
        out.eigenvectors.push_back(std::move(e.vec));
    }
    return out;
}

std::array<cplx, 4> exact_rung_propagator(const RungSystem& rungs, int m, double t) {
    const auto h = rungs.rung_interaction(m);
    const double hbar = rungs.ladder.hbar;
    const double homega = std::hypot(h[1], h[0]);   // alpha*sqrt(g^2 + beta^2)
    if (homega == 0.0) return {cplx(1.0), cplx(0.0), cplx(0.0), cplx(1.0)};
    const double theta = homega * t / hbar;
    const double c = std::cos(theta);
    const double s = std::sin(theta) / homega;
    // cos(w t) I - i sin(w t) H / (hbar w)
    return {cplx(c, -s * h[0]), cplx(0.0, -s * h[1]),
            cplx(0.0, -s * h[2]), cplx(c, -s * h[3])};
}

cplx exact_singleton_phase(const RungSystem& rungs, double t) {
    return std::polar(1.0, rungs.coupling.delta * t);
}

namespace {

double trig_product(inversion::TrigKind kind, double x, double w, double xi) {
    using inversion::TrigKind;
    switch (kind) {
        case TrigKind::CC: return std::cos(x * xi) * std::cos(w * xi);
        case TrigKind::CS: return std::cos(x * xi) * std::sin(w * xi);
        case TrigKind::SC: return std::sin(x * xi) * std::cos(w * xi);
        default:           return std::sin(x * xi) * std::sin(w * xi);
    }
}

struct Quad {
    inversion::TrigKind kind;
    double x, w;
    int depth_limit = 60;

    double f(double xi) const { return trig_product(kind, x, w, xi); }

    double recurse(double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) const {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        const double flm = f(lm), frm = f(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (depth >= depth_limit) {
            std::ostringstream os;
            os << "quad_f: adaptive quadrature hit the depth limit; achieved ~"
               << std::abs(delta);
            throw std::runtime_error(os.str());
        }
        if (std::abs(delta) <= 15.0 * tol) {
            return left + right + delta / 15.0;
        }
        return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
               recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }
};

} // namespace

double quad_f(inversion::TrigKind kind, double x, double w, double t, double abs_tol) {
    if (t == 0.0) return 0.0;
    const Quad q{kind, x, w};
    const double fa = q.f(0.0), fb = q.f(t), fm = q.f(0.5 * t);
    const double whole = t / 6.0 * (fa + 4.0 * fm + fb);
    return q.recurse(0.0, t, fa, fm, fb, whole, abs_tol, 0);
}

BlockOperator heisenberg_sigma3(const EnergyLadder& ladder,
                                const CouplingConfig& coupling, double t,
                                bool exponential) {
    const auto rungs = rung_system(ladder, coupling);
    const int n = ladder.dim;
    BlockOperator out = BlockOperator::zeros(n);

    for (int m = 0; m < n; ++m) {
        std::array<cplx, 4> u;
        if (exponential) {
            u = exact_rung_propagator(rungs, m, t);
        } else {
            const auto h = rungs.rung_interaction(m);
            const double homega = std::hypot(h[1], h[0]);
            const double theta = homega * t / ladder.hbar;
            const double c = std::cos(theta), s = std::sin(theta);
            u = {cplx(c), cplx(0.0, s), cplx(0.0, s), cplx(c)};
        }
        // r = u† sigma3 u with sigma3 = diag(1, -1) on the rung
        const cplx a = u[0], b = u[1], c = u[2], d = u[3];
        const cplx r00 = std::conj(a) * a - std::conj(c) * c;
        const cplx r01 = std::conj(a) * b - std::conj(c) * d;
        const cplx r10 = std::conj(b) * a - std::conj(d) * c;
        const cplx r11 = std::conj(b) * b - std::conj(d) * d;
        out.uu(m, m) = r00;
        out.ul(m, m + 1) = r01;
        out.lu(m + 1, m) = r10;
        out.ll(m + 1, m + 1) = r11;
    }

    if (exponential) {
        out.ll(0, 0) = -1.0;   // pure phase cancels
    } else {
        const double c0 = std::cos(std::abs(coupling.delta) * t);
        out.ll(0, 0) = -c0 * c0;
    }
    return out;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
    auto at = [&](int i, int j) -> double& {
        return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)];
    };
    double scale_ref = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) scale_ref = std::max(scale_ref, std::abs(at(i, j)));
    }
    if (scale_ref == 0.0) return std::vector<double>(static_cast<std::size_t>(n), 0.0);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
        }
        if (std::sqrt(off) <= 1e-15 * scale_ref * n) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double phi = 0.5 * std::atan2(2.0 * apq, at(p, p) - at(q, q));
                const double c = std::cos(phi), s = std::sin(phi);
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp + s * akq;
                    at(k, q) = -s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk + s * aqk;
                    at(q, k) = -s * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> ev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

namespace {

std::vector<double> assemble(const RungSystem& rungs, bool with_free) {
    const int n = rungs.rung_count();
    const int dim = 2 * n + 1;
    std::vector<double> a(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0.0);
    auto at = [&](int i, int j) -> double& {
        return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) +
                 static_cast<std::size_t>(j)];
    };
    const int lower0 = n;   // lower index k sits at n + k
    at(lower0, lower0) = with_free ? rungs.singleton_full() : rungs.singleton_interaction();
    for (int m = 0; m < n; ++m) {
        const auto h = with_free ? rungs.rung_full(m) : rungs.rung_interaction(m);
        const int iu = m;
        const int il = n + m + 1;
        at(iu, iu) = h[0];
        at(iu, il) = h[1];
        at(il, iu) = h[2];
        at(il, il) = h[3];
    }
    return a;
}

} // namespace

std::vector<double> assemble_interaction(const RungSystem& rungs) {
    return assemble(rungs, false);
}

std::vector<double> assemble_full(const RungSystem& rungs) {
    return assemble(rungs, true);
}

} // namespace sijc::oracle
