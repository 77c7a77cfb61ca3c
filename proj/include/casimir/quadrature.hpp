#pragma once

#include <functional>
#include <vector>

namespace casimir {

// Gauss-Legendre rule on (0, 1).  Rules are computed once per node count and
// cached; thread safe.
struct GaussLegendre {
    std::vector<double> x;
    std::vector<double> w;
};

const GaussLegendre& gauss_legendre(int n);

// Adaptive Gauss-Kronrod 7-15 over a list of seed intervals.  Splits the
// interval with the largest error estimate until the summed estimate drops
// below rel_tol * |integral| (or abs_tol), or the interval budget runs out.
struct AdaptiveResult {
    double value = 0.0;
    double abs_error = 0.0;
    int intervals = 0;
    bool converged = false;
};

AdaptiveResult integrate_adaptive(const std::function<double(double)>& f,
                                  std::vector<std::pair<double, double>> seeds,
                                  double rel_tol, double abs_tol = 0.0,
                                  int max_intervals = 4000);

// Single fixed GK15 application on [a, b]: returns {value, error estimate}.
std::pair<double, double> gk15(const std::function<double(double)>& f, double a, double b);

}  // namespace casimir
