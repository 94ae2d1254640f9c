#pragma once

#include <functional>
#include <vector>

#include "domint/model.hpp"

namespace domint::numerics {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    int evaluations = 0;
    bool converged = false;
};

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;   // floor below which differences are treated as noise
    int laguerre_start = 64;  // doubled until stable, then the transform rule takes over
    int laguerre_max = 512;
};

// One generalized Gauss-Laguerre rule for weight x^order e^{-x}.
struct LaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights; // sum to Gamma(order + 1)
};

// Golub-Welsch rule for the weight x^order e^{-x}; cached per (order, n).
const LaguerreRule& laguerre_rule(int npoints, double order);

// E_{T ~ Gamma(n,1)}[f(T)], raw form used by the z-space wrapper below.
QuadratureResult gamma_expectation(const std::function<double(double)>& f, int n,
                                   const QuadratureOptions& opts = {});

// E over the n-th ordered point of the displaced process:
//   E[f(z_n)] = E_{T~Gamma(n,1)}[ f(Lambda_2^{-1}(T)) ].
// The substitution is exact because Lambda_2 is a power law.
QuadratureResult gamma_weighted_expectation(const std::function<double(double)>& f_of_z,
                                            int n, const NetworkModel& net,
                                            const FadingModel& fading,
                                            const QuadratureOptions& opts = {});

// Brent root search; requires a sign change on [lo, hi].
double find_root(const std::function<double(double)>& g, double lo, double hi,
                 double tol = 1e-12);

// Brent scalar minimization on [lo, hi]; unimodality is the caller's problem.
double minimize_scalar(const std::function<double(double)>& h, double lo, double hi,
                       double tol = 1e-10);

} // namespace domint::numerics
