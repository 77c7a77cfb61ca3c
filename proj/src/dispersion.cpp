#include "casimir/dispersion.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>
#include <thread>

#include "casimir/error.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

// Int_0^W dw / ((w^2 + g^2)(w^2 + x^2)) via partial fractions, written as a
// divided difference of h(a) = atan(W/a)/a so the x ~ g case stays stable.
double rational_product_integral(double W, double g, double x) {
    const double A = g * g, B = x * x;
    auto h = [W](double a2) {
        const double a = std::sqrt(a2);
        return std::atan(W / a) / a;
    };
    if (std::abs(B - A) > 1e-5 * std::max(A, B))
        return (h(A) - h(B)) / (B - A);
    // -h'(m) at the midpoint; relative error O(((B-A)/A)^2)
    const double m = 0.5 * (A + B);
    const double a = std::sqrt(m);
    return 0.5 * (std::atan(W / a) / (m * a) + W / (m * (m + W * W)));
}

// Int_W^inf dw / (w^2 (w^2 + x^2)) = (1/x^2) (1/W - atan(x/W)/x)
double tail_integral(double W, double x) {
    const double z = x / W;
    if (z < 0.5) {
        // (1/W) (z^2/3 - z^4/5 + ...) avoids the cancellation at small z
        const double z2 = z * z;
        double term = z2 / 3.0, sum = term;
        double zpow = z2;
        for (int k = 2; k < 60; ++k) {
            zpow *= -z2;
            term = zpow / (2.0 * k + 1.0);
            sum += term;
            if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        }
        return sum / (W * x * x);
    }
    return (1.0 / W - std::atan(z) / x) / (x * x);
}

unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Evaluate f(i) for i in [0, n) concurrently, results in index order.
std::vector<double> parallel_map(size_t n, const std::function<double(size_t)>& f) {
    std::vector<double> out(n);
    const unsigned workers = std::min<unsigned>(worker_count(), 8);
    if (workers <= 1 || n < 16) {
        for (size_t i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::vector<std::future<void>> futs;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < workers; ++w)
        futs.push_back(std::async(std::launch::async, [&] {
            for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) out[i] = f(i);
        }));
    for (auto& fu : futs) fu.get();
    return out;
}

}  // namespace

double eps_imag_axis_minus_one(const DielectricModel& model, double xi, double tol,
                               int max_intervals) {
    if (!(xi > 0.0)) fail(ErrorCode::invalid_xi, "xi must be positive");
    if (!(tol >= 1e-12 && tol <= 1e-3))
        fail(ErrorCode::invalid_argument, "tol must lie in [1e-12, 1e-3]");

    const DrudeParams& dp = model.drude();
    const double w_lo = model.omega_min();
    const double w_hi = model.omega_max();

    // Drude head, closed form
    const double head =
        dp.omega_p * dp.omega_p * dp.gamma * rational_product_integral(w_lo, dp.gamma, xi);

    // power-law tail, closed form (zero when truncated)
    const double tail_c = model.tail_coefficient();
    const double tail = tail_c > 0.0 ? tail_c * tail_integral(w_hi, xi) : 0.0;

    // tabulated region, adaptive GK15 seeded on the table segments
    std::vector<std::pair<double, double>> seeds;
    if (model.is_pure_drude()) {
        // no kinks; seed one panel per decade, split at xi
        double a = w_lo;
        while (a < w_hi) {
            double b = std::min(a * 10.0, w_hi);
            if (xi > a && xi < b) {
                seeds.emplace_back(a, xi);
                seeds.emplace_back(xi, b);
            } else {
                seeds.emplace_back(a, b);
            }
            a = b;
        }
    } else {
        for (const auto& seg : model.segments()) {
            if (xi > seg.w_lo && xi < seg.w_hi) {
                seeds.emplace_back(seg.w_lo, xi);
                seeds.emplace_back(xi, seg.w_hi);
            } else {
                seeds.emplace_back(seg.w_lo, seg.w_hi);
            }
        }
    }
    auto integrand = [&](double w) { return w * model.eps2(w) / (w * w + xi * xi); };
    const double abs_budget = 0.3 * tol * (head + tail);
    auto mid = integrate_adaptive(integrand, std::move(seeds), 0.3 * tol, abs_budget,
                                  max_intervals);
    if (!mid.converged)
        fail(ErrorCode::tolerance_not_reached,
             "dispersion integral did not converge within the interval budget");

    return (2.0 / M_PI) * (head + mid.value + tail);
}

double eps_imag_axis(const DielectricModel& model, double xi, double tol, int max_intervals) {
    return 1.0 + eps_imag_axis_minus_one(model, xi, tol, max_intervals);
}

double EpsImagAxis::eval_minus_one(double xi) const {
    const double lx = std::log(xi);
    const size_t n = log_xi_.size();
    if (!(lx >= log_xi_.front() && lx <= log_xi_.back()))
        fail(ErrorCode::cache_range_exceeded,
             "xi = " + std::to_string(xi) + " outside cache range");
    const double h = (log_xi_.back() - log_xi_.front()) / static_cast<double>(n - 1);
    auto k = static_cast<ptrdiff_t>((lx - log_xi_.front()) / h);
    k = std::clamp<ptrdiff_t>(k, 0, static_cast<ptrdiff_t>(n) - 2);
    // 4-point Lagrange stencil, one-sided at the edges
    ptrdiff_t s = std::clamp<ptrdiff_t>(k - 1, 0, static_cast<ptrdiff_t>(n) - 4);
    double g = 0.0;
    for (ptrdiff_t i = s; i < s + 4; ++i) {
        double li = 1.0;
        for (ptrdiff_t j = s; j < s + 4; ++j)
            if (j != i) li *= (lx - log_xi_[j]) / (log_xi_[i] - log_xi_[j]);
        g += li * log_em1_[i];
    }
    return std::exp(g);
}

double EpsImagAxis::eval(double xi) const { return 1.0 + eval_minus_one(xi); }

void EpsImagAxis::write_csv(std::ostream& out) const {
    out << "xi_eV eps\n";
    char buf[64];
    for (size_t i = 0; i < xi_grid_.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.8e %.8e\n", xi_grid_[i], eps_values_[i]);
        out << buf;
    }
}

EpsImagAxis build_eps_cache(const DielectricModel& model, double xi_min, double xi_max,
                            int points_per_decade, double tol) {
    if (!(xi_min > 0.0 && xi_min < xi_max))
        fail(ErrorCode::invalid_argument, "need 0 < xi_min < xi_max");
    if (points_per_decade < 8)
        fail(ErrorCode::invalid_argument, "points_per_decade must be >= 8");

    const double lo = std::log(xi_min), hi = std::log(xi_max);
    const double decades = (hi - lo) / std::log(10.0);
    size_t n = static_cast<size_t>(std::ceil(decades * points_per_decade)) + 1;
    n = std::max<size_t>(n, 8);

    auto grid_at = [&](size_t count) {
        std::vector<double> g(count);
        for (size_t i = 0; i < count; ++i)
            g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
        return g;
    };

    EpsImagAxis cache;
    cache.tol_ = tol;
    cache.log_xi_ = grid_at(n);
    cache.log_em1_ = parallel_map(n, [&](size_t i) {
        return std::log(eps_imag_axis_minus_one(model, std::exp(cache.log_xi_[i]), tol));
    });

    // Refine by halving the spacing until cubic interpolation reproduces the
    // direct evaluation at interval midpoints.  Midpoint values merge into
    // the next grid, so no evaluation is wasted.
    const int max_ppd = 1024;
    int ppd = points_per_decade;
    while (true) {
        const size_t m = cache.log_xi_.size() - 1;  // midpoint count
        std::vector<double> mid_lx(m);
        for (size_t i = 0; i < m; ++i)
            mid_lx[i] = 0.5 * (cache.log_xi_[i] + cache.log_xi_[i + 1]);
        auto direct = parallel_map(m, [&](size_t i) {
            return std::log(eps_imag_axis_minus_one(model, std::exp(mid_lx[i]), tol));
        });
        double max_err = 0.0;
        for (size_t i = 0; i < m; ++i) {
            const double interp = std::log(cache.eval_minus_one(std::exp(mid_lx[i])));
            // error in log(eps-1) ~ relative error in eps-1
            max_err = std::max(max_err, std::abs(interp - direct[i]));
        }
        // merge midpoints
        std::vector<double> new_lx(2 * m + 1), new_g(2 * m + 1);
        for (size_t i = 0; i <= m; ++i) {
            new_lx[2 * i] = cache.log_xi_[i];
            new_g[2 * i] = cache.log_em1_[i];
        }
        for (size_t i = 0; i < m; ++i) {
            new_lx[2 * i + 1] = mid_lx[i];
            new_g[2 * i + 1] = direct[i];
        }
        cache.log_xi_ = std::move(new_lx);
        cache.log_em1_ = std::move(new_g);
        ppd *= 2;
        if (max_err <= 3.0 * tol) break;
        if (ppd > max_ppd)
            fail(ErrorCode::tolerance_not_reached,
                 "eps cache interpolation error stuck above 3*tol at max grid density");
    }

    const size_t total = cache.log_xi_.size();
    cache.xi_grid_.resize(total);
    cache.eps_values_.resize(total);
    for (size_t i = 0; i < total; ++i) {
        cache.xi_grid_[i] = std::exp(cache.log_xi_[i]);
        cache.eps_values_[i] = 1.0 + std::exp(cache.log_em1_[i]);
    }
    for (size_t i = 1; i < total; ++i)
        if (!(cache.log_em1_[i] < cache.log_em1_[i - 1]))
            fail(ErrorCode::domain_error, "eps(i xi) cache is not strictly decreasing");
    return cache;
}

}  // namespace casimir
