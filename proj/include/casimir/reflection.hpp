#pragma once

#include <utility>

#include "casimir/constants.hpp"

namespace casimir {

// Integration point on the imaginary axis.  xi is the imaginary frequency
// and kappa the vacuum longitudinal wavevector, both expressed in eV
// (kappa^2 = k_transverse^2 + xi^2, so kappa >= xi always).
struct ImagFreqPoint {
    double xi = 0.0;
    double kappa = 0.0;

    bool valid() const { return xi > 0.0 && kappa >= xi; }
};

// TE/TM reflection amplitudes of a half-space at imaginary frequency.
// Convention: r_te <= 0 and r_tm >= 0 for eps > 1; only products of two
// amplitudes enter the energy, so the sign choice is internal.
struct ReflectionPair {
    double r_te = 0.0;
    double r_tm = 0.0;
};

// r_te = (kappa - kappa_m) / (kappa + kappa_m)
// r_tm = (eps kappa - kappa_m) / (eps kappa + kappa_m)
// kappa_m = sqrt(kappa^2 + (eps - 1) xi^2)   (medium wavevector; >= kappa)
ReflectionPair fresnel(double eps, const ImagFreqPoint& point);

// Per-polarization integrand factors ln(1 - r_a r_b e^{-2 kappa L / hbar c}),
// kappa in eV, L in um.  Both are <= 0 for identical mirrors.
std::pair<double, double> loop_function(const ReflectionPair& pair_a,
                                        const ReflectionPair& pair_b, double kappa,
                                        double L_um,
                                        const PhysicalConstants& pc = kDefaultConstants);

}  // namespace casimir
