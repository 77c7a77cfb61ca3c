#pragma once

#include "casimir/optical_table.hpp"

namespace casimir {

// Free-carrier parameters, both in eV.
struct DrudeParams {
    double omega_p = 0.0;  // plasma frequency
    double gamma = 0.0;    // relaxation rate

    bool valid() const { return omega_p > 0.0 && gamma > 0.0 && gamma < omega_p; }
};

// eps''(omega) = omega_p^2 gamma / (omega (omega^2 + gamma^2))
inline double drude_eps2(const DrudeParams& p, double omega) {
    return p.omega_p * p.omega_p * p.gamma / (omega * (omega * omega + p.gamma * p.gamma));
}

struct FitWindow {
    double omega_lo = 0.1;  // eV
    double omega_hi = 1.0;  // eV
};

struct DrudeFit {
    DrudeParams params;
    double rms_log_residual = 0.0;  // rms of log eps2_model - log eps2_data
    int samples_used = 0;
};

// Least-squares fit of log eps2 over table samples inside the window.
// The amplitude omega_p^2 gamma is profiled out analytically, leaving a 1-D
// minimization in gamma (bracketed scan + golden section).
DrudeFit fit_drude(const OpticalTable& table, const FitWindow& window = {});

}  // namespace casimir
