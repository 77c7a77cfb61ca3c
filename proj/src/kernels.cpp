#include "casimir/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

#include "casimir/error.hpp"

namespace casimir::kernels {

InnerGrid make_inner_grid(const GaussLegendre& rule) {
    InnerGrid g;
    const size_t n = rule.x.size();
    g.sigma.resize(n);
    g.exp_sigma.resize(n);
    g.wmap.resize(n);
    for (size_t j = 0; j < n; ++j) {
        const double u = rule.x[j];
        const double om = 1.0 - u;
        g.sigma[j] = u / om;
        g.exp_sigma[j] = std::exp(-g.sigma[j]);
        g.wmap[j] = rule.w[j] / (om * om);
    }
    return g;
}

InnerSums inner_sums_scalar(const InnerGrid& grid, const InnerParams& p) {
    double acc_e = 0.0, acc_f = 0.0;
    const size_t n = grid.size();
    for (size_t j = 0; j < n; ++j) {
        const double y = p.tau + grid.sigma[j];
        const double q = p.exp_tau * grid.exp_sigma[j];
        double x_te, x_tm;
        if (p.perfect) {
            x_te = q;
            x_tm = q;
        } else {
            const double kappa = p.half_hcl * y;
            const double k2 = kappa * kappa;
            const double ka = std::sqrt(k2 + p.ca);
            const double kb = std::sqrt(k2 + p.cb);
            const double sa = kappa + ka, sb = kappa + kb;
            const double rho_te = (p.ca * p.cb) / (sa * sa * sb * sb);
            const double ta = kappa + p.da * kappa + ka;
            const double tb = kappa + p.db * kappa + kb;
            const double rho_tm = p.da * p.db * (k2 * (p.da + 2.0) - p.xi2) *
                                  (k2 * (p.db + 2.0) - p.xi2) / (ta * ta * tb * tb);
            x_te = rho_te * q;
            x_tm = rho_tm * q;
        }
        const double fe = std::log1p(-x_te) + std::log1p(-x_tm);
        const double gf = x_te / (1.0 - x_te) + x_tm / (1.0 - x_tm);
        acc_e += grid.wmap[j] * y * fe;
        acc_f += grid.wmap[j] * y * y * gf;
    }
    return {acc_e, acc_f};
}

namespace {

using KernelFn = InnerSums (*)(const InnerGrid&, const InnerParams&);

bool cpu_has_avx2() {
#if defined(__x86_64__) && defined(CASIMIR_HAVE_AVX2_SOURCES)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

KernelFn resolve(KernelIsa isa) {
    switch (isa) {
        case KernelIsa::scalar: return inner_sums_scalar;
        case KernelIsa::avx2:
#if defined(__x86_64__) && defined(CASIMIR_HAVE_AVX2_SOURCES)
            if (cpu_has_avx2()) return inner_sums_avx2;
#endif
            fail(ErrorCode::invalid_argument, "avx2 kernel not available on this machine");
        case KernelIsa::auto_detect:
        default:
#if defined(__x86_64__) && defined(CASIMIR_HAVE_AVX2_SOURCES)
            if (cpu_has_avx2()) return inner_sums_avx2;
#endif
            return inner_sums_scalar;
    }
}

KernelFn initial_kernel() {
    if (const char* env = std::getenv("CASIMIR_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return resolve(KernelIsa::scalar);
        if (std::strcmp(env, "avx2") == 0) return resolve(KernelIsa::avx2);
    }
    return resolve(KernelIsa::auto_detect);
}

KernelFn g_kernel = initial_kernel();

}  // namespace

InnerSums inner_sums(const InnerGrid& grid, const InnerParams& p) {
    return g_kernel(grid, p);
}

void set_kernel(KernelIsa isa) { g_kernel = resolve(isa); }

const char* active_kernel_name() {
    return g_kernel == inner_sums_scalar ? "scalar" : "avx2";
}

bool avx2_available() { return cpu_has_avx2(); }

namespace detail {

#if defined(__x86_64__) && defined(CASIMIR_HAVE_AVX2_SOURCES)
void log1m_block_avx2(const double* x, double* out, size_t n);  // kernels_avx2.cpp
#endif

void log1m_block(const double* x, double* out, size_t n) {
#if defined(__x86_64__) && defined(CASIMIR_HAVE_AVX2_SOURCES)
    if (g_kernel == inner_sums_avx2) {
        log1m_block_avx2(x, out, n);
        return;
    }
#endif
    for (size_t i = 0; i < n; ++i) out[i] = std::log1p(-x[i]);
}

}  // namespace detail

}  // namespace casimir::kernels
