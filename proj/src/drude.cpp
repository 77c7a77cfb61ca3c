#include "casimir/drude.hpp"

#include <cmath>
#include <vector>

#include "casimir/error.hpp"

namespace casimir {

namespace {

// Residual model in log space:  log eps2 = a - log(w (w^2 + g^2)),
// a = log(omega_p^2 gamma).  For fixed g the optimal a is the mean residual,
// so the objective reduces to a function of g alone.
struct ProfiledObjective {
    std::vector<double> log_w;
    std::vector<double> log_e2;
    std::vector<double> w2;

    double amplitude(double g) const {
        double a = 0.0;
        for (size_t i = 0; i < log_w.size(); ++i)
            a += log_e2[i] + log_w[i] + std::log(w2[i] + g * g);
        return a / static_cast<double>(log_w.size());
    }

    double operator()(double g) const {
        const double a = amplitude(g);
        double ss = 0.0;
        for (size_t i = 0; i < log_w.size(); ++i) {
            const double r = a - log_w[i] - std::log(w2[i] + g * g) - log_e2[i];
            ss += r * r;
        }
        return ss;
    }
};

}  // namespace

DrudeFit fit_drude(const OpticalTable& table, const FitWindow& window) {
    if (!(window.omega_lo > 0.0 && window.omega_lo < window.omega_hi))
        fail(ErrorCode::invalid_argument, "bad fit window");
    if (window.omega_hi > 2.0)
        fail(ErrorCode::invalid_argument, "fit window upper bound must be <= 2 eV");

    ProfiledObjective obj;
    for (const auto& s : table.samples) {
        if (s.omega < window.omega_lo || s.omega > window.omega_hi) continue;
        if (s.eps2 <= 0.0)
            fail(ErrorCode::negative_value, "eps2 must be positive inside the fit window");
        obj.log_w.push_back(std::log(s.omega));
        obj.log_e2.push_back(std::log(s.eps2));
        obj.w2.push_back(s.omega * s.omega);
    }
    const int n = static_cast<int>(obj.log_w.size());
    if (n < 4)
        fail(ErrorCode::too_few_samples,
             "fit window holds " + std::to_string(n) + " samples, need >= 4");

    // Coarse log-spaced scan brackets the minimum; gamma is searched well
    // below the window top (the model is Drude, not interband).
    const double g_lo = 1e-4;
    const double g_hi = window.omega_hi;
    const int n_scan = 96;
    int best = 0;
    double best_val = HUGE_VAL;
    std::vector<double> grid(n_scan);
    for (int i = 0; i < n_scan; ++i) {
        grid[i] = g_lo * std::pow(g_hi / g_lo, static_cast<double>(i) / (n_scan - 1));
        const double v = obj(grid[i]);
        if (v < best_val) best_val = v, best = i;
    }
    double a = grid[best > 0 ? best - 1 : 0];
    double b = grid[best + 1 < n_scan ? best + 1 : n_scan - 1];

    // Golden-section refinement.
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = obj(c), fd = obj(d);
    const int max_iter = 300;
    int iter = 0;
    while (b - a > 1e-14 * (1.0 + b)) {
        if (++iter > max_iter)
            fail(ErrorCode::fit_diverged, "gamma search exceeded iteration cap");
        if (fc < fd) {
            b = d, d = c, fd = fc;
            c = b - phi * (b - a);
            fc = obj(c);
        } else {
            a = c, c = d, fc = fd;
            d = a + phi * (b - a);
            fd = obj(d);
        }
    }

    const double g = 0.5 * (a + b);
    const double amp = obj.amplitude(g);  // log(omega_p^2 gamma)
    DrudeFit fit;
    fit.params.gamma = g;
    fit.params.omega_p = std::sqrt(std::exp(amp) / g);
    fit.rms_log_residual = std::sqrt(obj(g) / n);
    fit.samples_used = n;
    if (!fit.params.valid())
        fail(ErrorCode::fit_diverged, "fit produced invalid Drude parameters");
    return fit;
}

}  // namespace casimir
