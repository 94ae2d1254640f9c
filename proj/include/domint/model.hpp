#pragma once

#include <cmath>

#include "domint/errors.hpp"
#include "domint/specfun.hpp"

namespace domint {

// Homogeneous planar network: node density, path loss, reception sector.
struct NetworkModel {
    double lambda; // nodes per unit area
    double alpha;  // path-loss exponent, > 2 or every mean diverges
    double phi;    // reception angle, (0, 2*pi]

    NetworkModel(double lambda_, double alpha_, double phi_)
        : lambda(lambda_), alpha(alpha_), phi(phi_) {
        if (!(lambda > 0.0)) throw DomainError("node density must be positive");
        if (!(alpha > 2.0)) throw DomainError("path-loss exponent must exceed 2");
        if (!(phi > 0.0 && phi <= 2.0 * M_PI + 1e-12)) throw DomainError("reception angle must lie in (0, 2*pi]");
    }
};

// Nakagami-m power gain: Gamma(shape m, scale omega/m). m = 1 is Rayleigh.
struct FadingModel {
    double m;
    double omega;

    FadingModel(double m_, double omega_) : m(m_), omega(omega_) {
        if (!(m > 0.5)) throw DomainError("Nakagami shape must exceed 1/2");
        if (!(omega > 0.0)) throw DomainError("fading power must be positive");
    }

    double mean_gain() const { return omega; }
};

// One transmitter-receiver pair under evaluation.
struct LinkModel {
    double u;       // tx-rx distance
    double eta;     // SIR threshold
    int n_excluded; // dominant interferers removed ahead of reception

    LinkModel(double u_, double eta_, int n_excluded_ = 1)
        : u(u_), eta(eta_), n_excluded(n_excluded_) {
        if (!(u > 0.0)) throw DomainError("link distance must be positive");
        if (!(eta > 0.0)) throw DomainError("SIR threshold must be positive");
        if (n_excluded < 0) throw DomainError("excluded-interferer count must be >= 0");
    }
};

// E[h^{2/alpha}] = (m/omega)^{-2/alpha} Gamma(m + 2/alpha) / Gamma(m).
inline double fractional_moment(const FadingModel& fading, double alpha) {
    if (!(alpha > 2.0)) throw DomainError("fractional_moment requires alpha > 2");
    const double b = 2.0 / alpha;
    return std::pow(fading.m / fading.omega, -b) *
           std::exp(specfun::ln_gamma(fading.m + b) - specfun::ln_gamma(fading.m));
}

// Coefficient c in Lambda_2(z) = c z^{2/alpha}.
inline double intensity_coefficient(const NetworkModel& net, const FadingModel& fading) {
    return 0.5 * net.phi * net.lambda * fractional_moment(fading, net.alpha);
}

// Intensity measure of the fading-displaced process on the inverse-power axis.
inline double intensity_measure2(const NetworkModel& net, const FadingModel& fading, double z) {
    if (z < 0.0) throw DomainError("intensity_measure2 requires z >= 0");
    return intensity_coefficient(net, fading) * std::pow(z, 2.0 / net.alpha);
}

// d Lambda_2 / dz.
inline double intensity_density2(const NetworkModel& net, const FadingModel& fading, double z) {
    if (!(z > 0.0)) throw DomainError("intensity_density2 requires z > 0");
    return net.phi * net.lambda * fractional_moment(fading, net.alpha) / net.alpha *
           std::pow(z, 2.0 / net.alpha - 1.0);
}

// Lambda_2^{-1}(t); the measure is a pure power law so the inverse is exact.
inline double intensity_inverse2(const NetworkModel& net, const FadingModel& fading, double t) {
    if (t < 0.0) throw DomainError("intensity_inverse2 requires t >= 0");
    return std::pow(t / intensity_coefficient(net, fading), 0.5 * net.alpha);
}

} // namespace domint
