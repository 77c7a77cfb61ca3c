#include "casimir/reflection.hpp"

#include <cmath>

#include "casimir/error.hpp"

namespace casimir {

ReflectionPair fresnel(double eps, const ImagFreqPoint& point) {
    if (!(eps >= 1.0))
        fail(ErrorCode::invalid_eps, "eps(i xi) < 1 signals an upstream dispersion bug");
    if (!point.valid()) fail(ErrorCode::invalid_argument, "invalid imaginary-frequency point");
    const double kappa = point.kappa;
    // sqrt(kappa^2 + (eps-1) xi^2) rather than sqrt(eps xi^2 + k^2): identical
    // algebraically, stable when k >> xi.
    const double kappa_m = std::sqrt(kappa * kappa + (eps - 1.0) * point.xi * point.xi);
    ReflectionPair rp;
    rp.r_te = (kappa - kappa_m) / (kappa + kappa_m);
    rp.r_tm = (eps * kappa - kappa_m) / (eps * kappa + kappa_m);
    return rp;
}

std::pair<double, double> loop_function(const ReflectionPair& pair_a,
                                        const ReflectionPair& pair_b, double kappa,
                                        double L_um, const PhysicalConstants& pc) {
    if (!(L_um > 0.0)) fail(ErrorCode::invalid_argument, "L must be positive");
    const double damp = std::exp(-2.0 * kappa * L_um / pc.hc_ev_um());
    const double x_te = pair_a.r_te * pair_b.r_te * damp;
    const double x_tm = pair_a.r_tm * pair_b.r_tm * damp;
    if (x_te >= 1.0 || x_tm >= 1.0)
        fail(ErrorCode::domain_error, "round-trip factor r_a r_b e^{-2 kappa L} >= 1");
    return {std::log1p(-x_te), std::log1p(-x_tm)};
}

}  // namespace casimir
