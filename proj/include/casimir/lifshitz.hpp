#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/dielectric_model.hpp"
#include "casimir/dispersion.hpp"

namespace casimir {

struct QuadratureSpec {
    enum class Scheme { gauss_legendre_mapped, adaptive };

    int xi_nodes = 64;
    int kappa_nodes = 64;
    double target_rel_tol = 1e-6;
    Scheme scheme = Scheme::adaptive;
    int max_nodes = 4096;  // per-axis cap for the adaptive scheme

    void validate() const;
};

// One reflector: either a dielectric model with a cached eps(i xi), a
// closed-form Drude half-space, or the ideal mirror (r^2 forced to 1).
class Mirror {
  public:
    static Mirror from_model(DielectricModel model, double xi_lo, double xi_hi,
                             int points_per_decade = 16, double tol = 1e-8);
    static Mirror drude_closed_form(DrudeParams params, std::string label = "drude");
    static Mirror perfect();

    double eps(double xi) const;
    double eps_minus_one(double xi) const;
    bool is_perfect() const;
    const std::string& label() const;
    const EpsImagAxis* cache() const;  // null unless built from a model
    const DielectricModel* model() const;

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

struct MirrorPair {
    Mirror a;
    Mirror b;

    static MirrorPair identical(Mirror m) { return {m, m}; }
    std::string label() const;
};

// xi range the quadrature can request from the eps caches for distances in
// [L_min, L_max], including node-doubling and the adaptive cap, with margin.
struct XiRange {
    double lo = 0.0;
    double hi = 0.0;
};
XiRange required_xi_range(double L_min_um, double L_max_um, const QuadratureSpec& quad,
                          const PhysicalConstants& pc = kDefaultConstants);

struct Converged {
    double value = 0.0;
    double est_rel_error = 0.0;  // from node-count doubling
    int xi_nodes = 0;
    int kappa_nodes = 0;
};

// Casimir energy per unit area between plane mirrors, J/m^2 (negative), and
// the pressure -dE/dL, N/m^2 (negative), at zero temperature.
Converged energy_plane_plane(const MirrorPair& mirrors, double L_um,
                             const QuadratureSpec& quad,
                             const PhysicalConstants& pc = kDefaultConstants);
Converged force_plane_plane(const MirrorPair& mirrors, double L_um,
                            const QuadratureSpec& quad,
                            const PhysicalConstants& pc = kDefaultConstants);

struct EtaResult {
    double eta = 0.0;
    Converged raw;  // the underlying energy (or force) evaluation
};

// Reduction factors relative to the ideal mirror at the same distance.
EtaResult eta_E(const MirrorPair& mirrors, double L_um, const QuadratureSpec& quad,
                const PhysicalConstants& pc = kDefaultConstants);
EtaResult eta_F(const MirrorPair& mirrors, double L_um, const QuadratureSpec& quad,
                const PhysicalConstants& pc = kDefaultConstants);

// Proximity-force mapping to the sphere-plane geometry:
//   F_sp(L) = 2 pi R E_pp(L), reduction factor identical to eta_E.
struct SphereForceResult {
    double force_N = 0.0;
    double eta = 0.0;
    bool geometry_warning = false;  // R/L < 100
    Converged energy;               // underlying plane-plane energy
};
SphereForceResult force_sphere_plane(const MirrorPair& mirrors, double L_um, double R_cm,
                                     const QuadratureSpec& quad,
                                     const PhysicalConstants& pc = kDefaultConstants);

struct EtaEntry {
    double L_um = 0.0;
    double E_pp = 0.0;   // J/m^2
    double eta_E = 0.0;
    double F_pp = 0.0;   // N/m^2
    double eta_F = 0.0;
    double est_rel_error = 0.0;
    bool failed = false;
    std::string error;
};

struct EtaCurve {
    std::string label;
    std::vector<EtaEntry> entries;
    std::vector<std::string> warnings;  // diagnostics, e.g. non-monotonic eta
};

// Batch driver over a sorted distance grid; entries evaluate concurrently.
// Per-entry failures are annotated; throws only if every entry fails.
EtaCurve eta_curve(const MirrorPair& mirrors, std::span<const double> L_grid_um,
                   const QuadratureSpec& quad,
                   const PhysicalConstants& pc = kDefaultConstants);

// Delimited-text export (9 significant digits, stable ordering).
void write_eta_curve_csv(const EtaCurve& curve, std::ostream& out,
                         const std::vector<std::string>& header_comments = {});

}  // namespace casimir
