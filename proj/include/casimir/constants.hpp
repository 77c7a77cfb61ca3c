#pragma once

#include <cmath>

namespace casimir {

// Physical constants (CODATA 2018; e and c are exact by definition).
// Frequencies and wavevectors are carried in eV throughout the library;
// distances in micrometers.  hc_ev_um() is the bridge between the two.
struct PhysicalConstants {
    double hbar = 1.054571817e-34;        // J s
    double c = 299792458.0;               // m / s
    double ev_to_radps = 1.602176634e-19 / 1.054571817e-34;  // e / hbar

    // electron charge implied by (hbar, ev_to_radps), J per eV
    double e_charge() const { return hbar * ev_to_radps; }

    // hbar * c in eV um  (= 0.1973269804...)
    double hc_ev_um() const { return hbar * c / e_charge() * 1e6; }

    // photon energy in eV for a vacuum wavelength in um
    double ev_from_lambda_um(double lambda_um) const {
        return 2.0 * M_PI * hc_ev_um() / lambda_um;
    }

    bool valid() const { return hbar > 0.0 && c > 0.0 && ev_to_radps > 0.0; }
};

inline const PhysicalConstants kDefaultConstants{};

// Ideal-mirror Casimir energy per unit area, J/m^2 (negative), and the
// corresponding pressure, N/m^2 (negative).  L in um.
inline double perfect_mirror_energy(double L_um,
                                    const PhysicalConstants& pc = kDefaultConstants) {
    const double hc_J_m = pc.hbar * pc.c;                 // J m
    const double L_m = L_um * 1e-6;
    return -M_PI * M_PI * hc_J_m / (720.0 * L_m * L_m * L_m);
}

inline double perfect_mirror_force(double L_um,
                                   const PhysicalConstants& pc = kDefaultConstants) {
    const double hc_J_m = pc.hbar * pc.c;
    const double L_m = L_um * 1e-6;
    return -M_PI * M_PI * hc_J_m / (240.0 * L_m * L_m * L_m * L_m);
}

}  // namespace casimir
