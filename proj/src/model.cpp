#include "sijc/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sijc {

ShapeInvariantModel ShapeInvariantModel::harmonic(double omega, double hbar) {
    if (!(omega > 0.0)) throw std::domain_error("harmonic model: omega must be positive");
    if (!(hbar > 0.0)) throw std::domain_error("model: hbar must be positive");
    return {Harmonic{omega}, hbar};
}

ShapeInvariantModel ShapeInvariantModel::scaling(double q, double r1, double hbar) {
    if (!(q > 0.0 && q <= 1.0)) throw std::domain_error("scaling model: q must lie in (0, 1]");
    if (!(r1 > 0.0)) throw std::domain_error("scaling model: r1 must be positive");
    if (!(hbar > 0.0)) throw std::domain_error("model: hbar must be positive");
    return {Scaling{q, r1}, hbar};
}

ShapeInvariantModel ShapeInvariantModel::explicit_seq(std::vector<double> remainders,
                                                      double hbar) {
    if (remainders.empty()) throw std::domain_error("explicit model: remainder list is empty");
    if (!(hbar > 0.0)) throw std::domain_error("model: hbar must be positive");
    return {Explicit{std::move(remainders)}, hbar};
}

std::vector<double> remainder_sequence(const ShapeInvariantModel& model, int n) {
    if (n < 1) throw std::invalid_argument("remainder_sequence: n must be >= 1");
    std::vector<double> r(static_cast<std::size_t>(n));

    if (const auto* h = std::get_if<Harmonic>(&model.kind)) {
        const double v = model.hbar * h->omega;
        for (auto& x : r) x = v;
    } else if (const auto* s = std::get_if<Scaling>(&model.kind)) {
        double v = s->r1;
        for (int k = 0; k < n; ++k) {
            r[static_cast<std::size_t>(k)] = v;
            v *= s->q;
        }
    } else {
        const auto& e = std::get<Explicit>(model.kind);
        if (static_cast<std::size_t>(n) > e.remainders.size()) {
            std::ostringstream os;
            os << "remainder_sequence: requested " << n
               << " remainders but the explicit list holds only " << e.remainders.size();
            throw std::out_of_range(os.str());
        }
        r.assign(e.remainders.begin(), e.remainders.begin() + n);
    }

    for (int k = 0; k < n; ++k) {
        if (!(r[static_cast<std::size_t>(k)] > 0.0)) {
            std::ostringstream os;
            os << "model validity: remainder R_" << (k + 1) << " = "
               << r[static_cast<std::size_t>(k)] << " is not positive";
            throw std::domain_error(os.str());
        }
    }
    return r;
}

EnergyLadder energy_ladder(const ShapeInvariantModel& model, int dim) {
    if (dim < 2) throw std::invalid_argument("energy_ladder: dim must be >= 2");
    const auto r = remainder_sequence(model, dim);
    EnergyLadder lad;
    lad.dim = dim;
    lad.hbar = model.hbar;
    lad.energies.resize(static_cast<std::size_t>(dim) + 1);
    lad.energies[0] = 0.0;
    for (int n = 1; n <= dim; ++n) {
        lad.energies[static_cast<std::size_t>(n)] =
            lad.energies[static_cast<std::size_t>(n - 1)] + r[static_cast<std::size_t>(n - 1)];
    }
    return lad;
}

double CouplingConfig::beta(double hbar) const {
    if (!(alpha > 0.0)) {
        throw std::domain_error("coupling: beta = hbar*delta/alpha undefined, alpha must be positive");
    }
    return hbar * delta / alpha;
}

double rung_amplitude(double energy_above, CouplingMode mode) {
    return mode == CouplingMode::linear ? std::sqrt(energy_above) : energy_above;
}

RungSystem rung_system(const EnergyLadder& ladder, const CouplingConfig& coupling) {
    RungSystem rs{ladder, coupling, {}};
    rs.amplitudes.resize(static_cast<std::size_t>(ladder.dim));
    for (int m = 0; m < ladder.dim; ++m) {
        rs.amplitudes[static_cast<std::size_t>(m)] =
            rung_amplitude(ladder.energies[static_cast<std::size_t>(m) + 1], coupling.mode);
    }
    return rs;
}

std::array<double, 4> RungSystem::rung_interaction(int m) const {
    if (m < 0 || m >= ladder.dim) throw std::out_of_range("rung index out of range");
    const double ab = ladder.hbar * coupling.delta;        // alpha*beta
    const double ag = coupling.alpha * amplitudes[static_cast<std::size_t>(m)];
    return {ab, ag, ag, -ab};
}

std::array<double, 4> RungSystem::rung_full(int m) const {
    auto r = rung_interaction(m);
    const double e = ladder.energies[static_cast<std::size_t>(m) + 1];
    r[0] += e;
    r[3] += e;
    return r;
}

double RungSystem::singleton_interaction() const {
    return -ladder.hbar * coupling.delta;
}

double RungSystem::singleton_full() const {
    return ladder.energies[0] + singleton_interaction();
}

std::vector<double> diag_apply(const std::vector<double>& values,
                               const std::function<double(double)>& f,
                               const std::string& fname) {
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out[i] = f(values[i]);
        if (!std::isfinite(out[i])) {
            std::ostringstream os;
            os << fname << " undefined at eigenvalue " << values[i];
            throw std::domain_error(os.str());
        }
    }
    return out;
}

} // namespace sijc
