#pragma once

#include <cstddef>
#include <vector>

#include "casimir/quadrature.hpp"

namespace casimir::kernels {

// Precomputed inner (kappa) quadrature grid for the Lifshitz integral.
// Nodes u on (0,1) map to y = tau + u/(1-u); everything that does not
// depend on the outer xi node lives here.
struct InnerGrid {
    std::vector<double> sigma;      // u / (1 - u)
    std::vector<double> exp_sigma;  // exp(-sigma)
    std::vector<double> wmap;       // w / (1 - u)^2

    size_t size() const { return sigma.size(); }
};

InnerGrid make_inner_grid(const GaussLegendre& rule);

// Per-xi-node inputs.  da/db = eps(i xi) - 1 for the two mirrors and
// ca/cb = (eps - 1) xi^2; the kernels evaluate the reflection amplitudes in
// conjugate form,
//   r_te = -c / (kappa + kappa_m)^2
//   r_tm = d (kappa^2 (d + 2) - xi^2) / ((1 + d) kappa + kappa_m)^2
// which stays fully conditioned even when (eps - 1) xi^2 << kappa^2.
struct InnerParams {
    double tau = 0.0;       // 2 xi L / hbar c
    double exp_tau = 0.0;   // exp(-tau)
    double half_hcl = 0.0;  // hbar c / (2 L), eV
    double xi2 = 0.0;       // xi^2
    double ca = 0.0;
    double cb = 0.0;
    double da = 0.0;
    double db = 0.0;
    bool perfect = false;   // force r_te^2 = r_tm^2 = 1
};

// Accumulated inner quadrature sums at one xi node:
//   energy = sum w y   [ln(1 - x_te) + ln(1 - x_tm)]
//   force  = sum w y^2 [x_te/(1-x_te) + x_tm/(1-x_tm)]
// with x_p = r_p^a r_p^b e^{-y}, y = tau + sigma.
struct InnerSums {
    double energy = 0.0;
    double force = 0.0;
};

InnerSums inner_sums_scalar(const InnerGrid& grid, const InnerParams& p);
#if defined(__x86_64__)
InnerSums inner_sums_avx2(const InnerGrid& grid, const InnerParams& p);
#endif

// Runtime-dispatched entry point.  The implementation is chosen once from
// cpuid (overridable via set_kernel or the CASIMIR_KERNEL env var) and the
// variants agree to roundoff; see tests/test_kernels.cpp.
InnerSums inner_sums(const InnerGrid& grid, const InnerParams& p);

enum class KernelIsa { auto_detect, scalar, avx2 };

void set_kernel(KernelIsa isa);          // throws if the ISA is unavailable
const char* active_kernel_name();        // "scalar" or "avx2"
bool avx2_available();

namespace detail {
// ln(1 - x) for x in [0, 1), evaluated with the active kernel's code path.
// Exposed so the vector log can be tested against the scalar one directly.
void log1m_block(const double* x, double* out, size_t n);
}  // namespace detail

}  // namespace casimir::kernels
