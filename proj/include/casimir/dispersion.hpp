#pragma once

#include <iosfwd>
#include <vector>

#include "casimir/dielectric_model.hpp"

namespace casimir {

// Dielectric function on the imaginary frequency axis,
//   eps(i xi) = 1 + (2/pi) Int_0^inf  w eps''(w) / (w^2 + xi^2) dw.
//
// The Drude region below omega_min and the power-law closure beyond
// omega_max integrate in closed form; the tabulated region in between uses
// adaptive Gauss-Kronrod with panel seeds on the table segments, split at
// w = xi.  tol is relative to eps(i xi) - 1.
double eps_imag_axis(const DielectricModel& model, double xi, double tol = 1e-8,
                     int max_intervals = 4000);

// Same transform, returning eps(i xi) - 1 directly.  At large xi the
// difference sits far below the 1 ulp granularity of 1 + x, so callers that
// need the small quantity must use this form.
double eps_imag_axis_minus_one(const DielectricModel& model, double xi, double tol = 1e-8,
                               int max_intervals = 4000);

// Log-spaced cache of eps(i xi) with cubic interpolation in
// (log xi, log(eps - 1)).  The grid is refined beyond points_per_decade
// until midpoint interpolation error drops below 3 * tol, so cached lookups
// track direct evaluation within 10 * tol.
class EpsImagAxis {
  public:
    double eval(double xi) const;           // throws CacheRangeExceeded outside grid
    double eval_minus_one(double xi) const; // eps(i xi) - 1, same accuracy

    double xi_min() const { return xi_grid_.front(); }
    double xi_max() const { return xi_grid_.back(); }
    double tol() const { return tol_; }
    const std::vector<double>& xi_grid() const { return xi_grid_; }
    const std::vector<double>& eps_values() const { return eps_values_; }

    void write_csv(std::ostream& out) const;  // columns: xi_eV eps

    friend EpsImagAxis build_eps_cache(const DielectricModel& model, double xi_min,
                                       double xi_max, int points_per_decade, double tol);

  private:
    std::vector<double> xi_grid_;
    std::vector<double> eps_values_;
    std::vector<double> log_xi_;
    std::vector<double> log_em1_;
    double tol_ = 0.0;
};

EpsImagAxis build_eps_cache(const DielectricModel& model, double xi_min, double xi_max,
                            int points_per_decade = 8, double tol = 1e-8);

}  // namespace casimir
