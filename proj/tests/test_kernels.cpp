#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "casimir/error.hpp"
#include "casimir/kernels.hpp"

using namespace casimir;
using namespace casimir::kernels;

namespace {

std::vector<InnerParams> parameter_sweep() {
    std::vector<InnerParams> out;
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> u(0, 1);
    auto make = [&](double tau, double eps_a, double eps_b, double half_hcl, bool perfect) {
        InnerParams p;
        p.tau = tau;
        p.exp_tau = std::exp(-tau);
        p.half_hcl = half_hcl;
        const double xi = half_hcl * tau;
        p.xi2 = xi * xi;
        p.da = eps_a - 1.0;
        p.db = eps_b - 1.0;
        p.ca = p.da * p.xi2;
        p.cb = p.db * p.xi2;
        p.perfect = perfect;
        return p;
    };
    for (double tau : {1e-6, 1e-2, 0.5, 3.0, 15.0, 60.0})
        for (double eps : {1.0 + 1e-9, 2.5, 79.26, 1e8})
            for (double h : {0.016, 0.33, 4.9})
                out.push_back(make(tau, eps, eps, h, false));
    for (int i = 0; i < 40; ++i) {
        const double tau = std::pow(10.0, -5.0 + 7.0 * u(rng));
        const double ea = 1.0 + std::pow(10.0, -8.0 + 16.0 * u(rng));
        const double eb = 1.0 + std::pow(10.0, -8.0 + 16.0 * u(rng));
        out.push_back(make(std::min(tau, 300.0), ea, eb, 0.01 + 3.0 * u(rng), false));
    }
    for (double tau : {1e-5, 0.3, 8.0}) out.push_back(make(tau, 1.0, 1.0, 1.0, true));
    return out;
}

}  // namespace

TEST_CASE("scalar kernel matches the textbook Fresnel factors on one node") {
    // The kernel evaluates the amplitudes in conjugate form; this check
    // recomputes the node from the plain (kappa - kappa_m)/(kappa + kappa_m)
    // expressions, so it also validates the algebraic rearrangement.
    GaussLegendre rule{{0.25}, {1.0}};
    const auto grid = make_inner_grid(rule);
    InnerParams p;
    p.tau = 0.7;
    p.exp_tau = std::exp(-0.7);
    p.half_hcl = 0.2;
    const double xi = 0.2 * 0.7;
    p.xi2 = xi * xi;
    p.da = p.db = 49.0;
    p.ca = p.cb = 49.0 * xi * xi;
    const auto s = inner_sums_scalar(grid, p);

    const double sigma = 0.25 / 0.75;
    const double y = 0.7 + sigma;
    const double kappa = 0.2 * y;
    const double km = std::sqrt(kappa * kappa + p.ca);
    const double rte = (kappa - km) / (kappa + km);
    const double rtm = (50.0 * kappa - km) / (50.0 * kappa + km);
    const double q = std::exp(-y);
    const double x_te = rte * rte * q;
    const double x_tm = rtm * rtm * q;
    const double wmap = 1.0 / (0.75 * 0.75);
    CHECK(s.energy == doctest::Approx(wmap * y * (std::log1p(-x_te) + std::log1p(-x_tm)))
                          .epsilon(1e-12));
    CHECK(s.force == doctest::Approx(wmap * y * y *
                                     (x_te / (1 - x_te) + x_tm / (1 - x_tm)))
                         .epsilon(1e-12));
}

TEST_CASE("kernel variants agree to roundoff") {
    if (!avx2_available()) {
        MESSAGE("avx2 not available on this machine; dispatch equivalence skipped");
        return;
    }
    for (int n : {8, 33, 64, 200}) {
        const auto grid = make_inner_grid(gauss_legendre(n));
        for (const auto& p : parameter_sweep()) {
            const auto s = inner_sums_scalar(grid, p);
            const auto v = inner_sums_avx2(grid, p);
            const double se = std::max({std::abs(s.energy), std::abs(v.energy), 1e-290});
            const double sf = std::max({std::abs(s.force), std::abs(v.force), 1e-290});
            CHECK(std::abs(s.energy - v.energy) / se < 5e-12);
            CHECK(std::abs(s.force - v.force) / sf < 5e-12);
        }
    }
}

TEST_CASE("vector log1m tracks std::log1p") {
    if (!avx2_available()) return;
    std::vector<double> xs{0.0, 1e-300, 1e-20, 1e-9, 1e-3, 0.1, 0.5, 0.75,
                           0.9, 0.99, 1.0 - 1e-6, 1.0 - 1e-12, 1.0 - 1e-15};
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 4000; ++i) xs.push_back(std::pow(u(rng), 4.0));

    std::vector<double> got(xs.size());
    set_kernel(KernelIsa::avx2);
    detail::log1m_block(xs.data(), got.data(), xs.size());
    set_kernel(KernelIsa::auto_detect);
    for (size_t i = 0; i < xs.size(); ++i) {
        const double want = std::log1p(-xs[i]);
        const double tol = 4e-15 * std::abs(want) + 1e-320;
        CHECK(std::abs(got[i] - want) <= tol);
    }
}

TEST_CASE("dispatch control") {
    CHECK(std::strlen(active_kernel_name()) > 0);
    set_kernel(KernelIsa::scalar);
    CHECK(std::string(active_kernel_name()) == "scalar");
    if (avx2_available()) {
        set_kernel(KernelIsa::avx2);
        CHECK(std::string(active_kernel_name()) == "avx2");
    } else {
        CHECK_THROWS_AS(set_kernel(KernelIsa::avx2), Error);
    }
    set_kernel(KernelIsa::auto_detect);
}

TEST_CASE("kernel evaluation is deterministic") {
    const auto grid = make_inner_grid(gauss_legendre(96));
    InnerParams p;
    p.tau = 0.21;
    p.exp_tau = std::exp(-0.21);
    p.half_hcl = 0.164;
    const double xi = p.half_hcl * p.tau;
    p.xi2 = xi * xi;
    p.da = p.db = 2480.0;
    p.ca = p.cb = 2480.0 * xi * xi;
    const auto a = inner_sums(grid, p);
    const auto b = inner_sums(grid, p);
    CHECK(a.energy == b.energy);
    CHECK(a.force == b.force);
}
