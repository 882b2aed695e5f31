#include "sijc/spectrum.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sijc::spectrum {

namespace {

void check_rung(const EnergyLadder& ladder, int m) {
    if (m < 0 || m >= ladder.dim) {
        std::ostringstream os;
        os << "rung index m = " << m << " out of range [0, " << ladder.dim - 1 << "]";
        throw std::out_of_range(os.str());
    }
}

} // namespace

std::pair<double, double> dressed_energies(const EnergyLadder& ladder,
                                           const CouplingConfig& coupling, int m) {
    check_rung(ladder, m);
    const double e = ladder.energies[static_cast<std::size_t>(m) + 1];
    const double g = rung_amplitude(e, coupling.mode);
    const double split = std::hypot(coupling.alpha * g, ladder.hbar * coupling.delta);
    return {e + split, e - split};
}

DressedPair mixing_coefficients(const EnergyLadder& ladder,
                                const CouplingConfig& coupling, int m) {
    check_rung(ladder, m);
    const double e = ladder.energies[static_cast<std::size_t>(m) + 1];
    const double g = rung_amplitude(e, coupling.mode);
    const double b = coupling.beta(ladder.hbar);   // rejects alpha <= 0

    DressedPair p;
    p.m = m;
    p.delta_m = b / g;
    const double root = std::hypot(1.0, p.delta_m);
    // gamma+ = root - delta cancels for large positive delta; use the stable
    // branch and gamma+ * gamma- = 1 for the partner.
    if (p.delta_m >= 0.0) {
        p.gamma_plus = 1.0 / (root + p.delta_m);
        p.gamma_minus = root + p.delta_m;
    } else {
        p.gamma_plus = root - p.delta_m;
        p.gamma_minus = 1.0 / p.gamma_plus;
    }
    p.c_plus = 1.0 / std::sqrt(1.0 + p.gamma_plus * p.gamma_plus);
    p.c_minus = 1.0 / std::sqrt(1.0 + p.gamma_minus * p.gamma_minus);

    const double split = std::hypot(coupling.alpha * g, ladder.hbar * coupling.delta);
    p.lambda_plus = split;
    p.lambda_minus = -split;
    p.energy_plus = e + split;
    p.energy_minus = e - split;
    return p;
}

TwoChannelState dressed_state(const EnergyLadder& ladder,
                              const CouplingConfig& coupling, int m, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("dressed_state: sign must be +1 or -1");
    }
    if (m < 0 || m > ladder.dim - 2) {
        std::ostringstream os;
        os << "dressed_state: m = " << m << " out of range [0, " << ladder.dim - 2
           << "] (lower component uses index m+1)";
        throw std::out_of_range(os.str());
    }
    const DressedPair p = mixing_coefficients(ladder, coupling, m);
    TwoChannelState st = TwoChannelState::zeros(ladder.dim);
    if (sign > 0) {
        st.upper[static_cast<std::size_t>(m)] = p.c_plus;
        st.lower[static_cast<std::size_t>(m) + 1] = p.c_minus;
    } else {
        st.upper[static_cast<std::size_t>(m)] = p.c_minus;
        st.lower[static_cast<std::size_t>(m) + 1] = -p.c_plus;
    }
    return st;
}

SpectrumTable spectrum_table(const EnergyLadder& ladder,
                             const CouplingConfig& coupling, int m_max) {
    if (m_max < 0 || m_max > ladder.dim - 2) {
        std::ostringstream os;
        os << "spectrum_table: m_max = " << m_max << " out of range [0, "
           << ladder.dim - 2 << "]";
        throw std::out_of_range(os.str());
    }
    SpectrumTable t;
    t.singleton_energy = ladder.energies[0] - ladder.hbar * coupling.delta;
    t.pairs.reserve(static_cast<std::size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) {
        t.pairs.push_back(mixing_coefficients(ladder, coupling, m));
    }
    return t;
}

} // namespace sijc::spectrum
