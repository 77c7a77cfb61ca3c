#pragma once

#include <vector>

#include "casimir/drude.hpp"
#include "casimir/optical_table.hpp"

namespace casimir {

enum class HighFreqClosure { truncate, power_law_decay };

// Composite eps''(omega) model over the full positive axis:
//   omega <  omega_min : Drude formula with the fitted parameters
//   omega in [min,max] : piecewise power law through the table samples
//                        (linear interpolation in log-log)
//   omega >  omega_max : closure (zero, or omega^-3 continued from the
//                        last sample)
//
// pure_drude() builds a degenerate model that evaluates the Drude formula
// everywhere; it exists so the dispersion transform can be validated against
// the closed form 1 + omega_p^2/(xi (xi + gamma)).
class DielectricModel {
  public:
    static DielectricModel from_table(OpticalTable table, DrudeParams drude,
                                      HighFreqClosure closure = HighFreqClosure::power_law_decay);

    static DielectricModel pure_drude(DrudeParams drude, double omega_min = 0.1,
                                      double omega_max = 100.0);

    double eps2(double omega) const;

    double omega_min() const { return omega_min_; }
    double omega_max() const { return omega_max_; }
    const DrudeParams& drude() const { return drude_; }
    HighFreqClosure closure() const { return closure_; }
    const OpticalTable& table() const { return table_; }
    bool is_pure_drude() const { return pure_drude_; }
    const std::string& material() const { return table_.material; }

    // Tail coefficient for the power-law closure: eps2 = tail_c / omega^3.
    double tail_coefficient() const;

    // Segment data for integrators: on [omega_i, omega_i+1),
    // eps2(w) = exp(log_e2[i] + p[i] (log w - log_w[i])).
    struct Segment {
        double w_lo, w_hi;
        double log_w_lo, log_e2_lo;
        double p;
    };
    const std::vector<Segment>& segments() const { return segments_; }

  private:
    DielectricModel() = default;

    OpticalTable table_;
    DrudeParams drude_;
    HighFreqClosure closure_ = HighFreqClosure::power_law_decay;
    double omega_min_ = 0.0, omega_max_ = 0.0;
    bool pure_drude_ = false;
    std::vector<Segment> segments_;
};

}  // namespace casimir
