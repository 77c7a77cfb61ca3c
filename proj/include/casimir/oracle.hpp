#pragma once

#include <span>
#include <string>
#include <vector>

#include "casimir/lifshitz.hpp"

namespace casimir::oracle {

// Closed form for the causality transform of the Drude spectral density:
//   eps(i xi) = 1 + omega_p^2 / (xi (xi + gamma)).
double drude_dispersion_closed_form(const DrudeParams& params, double xi);

// Dense trapezoid evaluation of the dispersion integral over the model's
// eps''.  Shares no quadrature code with the production transform; used to
// certify the closed form and the adaptive integrator.
double dense_eps_imag_axis(const DielectricModel& model, double xi, long total_nodes);

struct OracleOptions {
    long eps_nodes = 20000;       // dense dispersion nodes per xi row
    bool corrupt_rtm_sign = false;  // mutation hook: flips the TM round-trip sign
};

// Dense trapezoid evaluation of the plane-plane energy on the same mapped
// variables as production, with the reflection formulas re-derived inline.
// Node counts must be >= 1000.  Returns J/m^2.
double brute_force_energy(const MirrorPair& mirrors, double L_um, int n_xi, int n_kappa,
                          const PhysicalConstants& pc = kDefaultConstants,
                          const OracleOptions& opt = {});

struct OracleReport {
    std::string name;
    double production_value = 0.0;
    double oracle_value = 0.0;
    double rel_diff = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    double budget_seconds = 0.0;
};

// Runs every oracle comparison: constants consistency, the Drude dispersion
// closed form, perfect-mirror limits, brute-force energies for each material
// at each probe distance, and the force/energy-derivative consistency check.
// Empty L_probes yields an empty report.  Failures are reported, not thrown.
std::vector<OracleReport> run_certification_suite(
    const std::vector<MirrorPair>& materials, std::span<const double> L_probes,
    const QuadratureSpec& quad = {}, const PhysicalConstants& pc = kDefaultConstants,
    const OracleOptions& opt = {});

void write_report(const std::vector<OracleReport>& reports, std::ostream& out);
bool all_passed(const std::vector<OracleReport>& reports);

}  // namespace casimir::oracle
