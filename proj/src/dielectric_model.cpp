#include "casimir/dielectric_model.hpp"

#include <algorithm>
#include <cmath>

#include "casimir/error.hpp"

namespace casimir {

DielectricModel DielectricModel::from_table(OpticalTable table, DrudeParams drude,
                                            HighFreqClosure closure) {
    if (table.samples.size() < 2) fail(ErrorCode::empty_table, "table needs >= 2 samples");
    if (!drude.valid()) fail(ErrorCode::invalid_argument, "invalid Drude parameters");

    DielectricModel m;
    m.omega_min_ = table.samples.front().omega;
    m.omega_max_ = table.samples.back().omega;
    m.drude_ = drude;
    m.closure_ = closure;

    // Matching condition at the table edge: the extrapolation and the data
    // must agree to 20% or the model is inconsistent with its own fit.
    const double at_edge = drude_eps2(drude, m.omega_min_);
    const double data_edge = table.samples.front().eps2;
    if (data_edge > 0.0 && std::abs(at_edge - data_edge) > 0.2 * data_edge)
        fail(ErrorCode::domain_error,
             "Drude extrapolation misses the first table sample by more than 20%");

    m.segments_.reserve(table.samples.size() - 1);
    for (size_t i = 0; i + 1 < table.samples.size(); ++i) {
        const auto& lo = table.samples[i];
        const auto& hi = table.samples[i + 1];
        if (lo.eps2 <= 0.0 || hi.eps2 <= 0.0)
            fail(ErrorCode::negative_value,
                 "log-log interpolation requires strictly positive eps2 samples");
        Segment s;
        s.w_lo = lo.omega;
        s.w_hi = hi.omega;
        s.log_w_lo = std::log(lo.omega);
        s.log_e2_lo = std::log(lo.eps2);
        s.p = std::log(hi.eps2 / lo.eps2) / std::log(hi.omega / lo.omega);
        m.segments_.push_back(s);
    }
    m.table_ = std::move(table);
    return m;
}

DielectricModel DielectricModel::pure_drude(DrudeParams drude, double omega_min,
                                            double omega_max) {
    if (!drude.valid()) fail(ErrorCode::invalid_argument, "invalid Drude parameters");
    DielectricModel m;
    m.drude_ = drude;
    m.omega_min_ = omega_min;
    m.omega_max_ = omega_max;
    m.pure_drude_ = true;
    m.closure_ = HighFreqClosure::power_law_decay;
    m.table_.material = "drude";
    m.table_.samples = {{omega_min, drude_eps2(drude, omega_min)},
                        {omega_max, drude_eps2(drude, omega_max)}};
    return m;
}

double DielectricModel::eps2(double omega) const {
    if (!(omega > 0.0)) fail(ErrorCode::invalid_argument, "omega must be positive");
    if (pure_drude_) return drude_eps2(drude_, omega);
    if (omega < omega_min_) return drude_eps2(drude_, omega);
    if (omega > omega_max_) {
        if (closure_ == HighFreqClosure::truncate) return 0.0;
        const double r = omega_max_ / omega;
        return table_.samples.back().eps2 * r * r * r;
    }
    // binary search for the segment; exact sample hits return the sample
    const auto& ss = table_.samples;
    auto it = std::lower_bound(ss.begin(), ss.end(), omega,
                               [](const OpticalSample& s, double w) { return s.omega < w; });
    if (it != ss.end() && it->omega == omega) return it->eps2;
    const size_t idx = static_cast<size_t>(it - ss.begin()) - 1;
    const Segment& seg = segments_[idx];
    return std::exp(seg.log_e2_lo + seg.p * (std::log(omega) - seg.log_w_lo));
}

double DielectricModel::tail_coefficient() const {
    if (closure_ == HighFreqClosure::truncate && !pure_drude_) return 0.0;
    const double wN = omega_max_;
    const double e2N = pure_drude_ ? drude_eps2(drude_, wN) : table_.samples.back().eps2;
    return e2N * wN * wN * wN;
}

}  // namespace casimir
