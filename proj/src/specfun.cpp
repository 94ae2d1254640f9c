#include "domint/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "domint/errors.hpp"

namespace domint::specfun {

namespace {

constexpr int kMaxTerms = 500;
constexpr double kEps = 1e-16;

bool is_nonpositive_integer(double a) {
    return a <= 0.0 && a == std::floor(a);
}

// Regularized lower gamma by its power series; good for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double term = sum;
    for (int k = 0; k < kMaxTerms; ++k) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps) {
            return sum * std::exp(-x + a * std::log(x) - ln_gamma(a));
        }
    }
    throw NumericError("incomplete gamma series did not converge");
}

// Regularized upper gamma by Lentz continued fraction; good for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxTerms; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps) {
            return h * std::exp(-x + a * std::log(x) - ln_gamma(a));
        }
    }
    throw NumericError("incomplete gamma continued fraction did not converge");
}

} // namespace

double ln_gamma(double a) {
    if (!(a > 0.0)) throw DomainError("ln_gamma requires a > 0");
    return std::lgamma(a);
}

double gamma_fn(double a) {
    if (is_nonpositive_integer(a)) throw PoleError("gamma pole at non-positive integer");
    if (a > 0.0) return std::tgamma(a);
    // reflection: Gamma(a) = pi / (sin(pi a) Gamma(1 - a))
    return M_PI / (std::sin(M_PI * a) * std::tgamma(1.0 - a));
}

double reg_lower_gamma(double a, double x) {
    if (!(a > 0.0)) throw DomainError("reg_lower_gamma requires a > 0");
    if (x < 0.0) throw DomainError("reg_lower_gamma requires x >= 0");
    if (x == 0.0) return 0.0;
    return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double reg_upper_gamma(double a, double x) {
    if (!(a > 0.0)) throw DomainError("reg_upper_gamma requires a > 0");
    if (x < 0.0) throw DomainError("reg_upper_gamma requires x >= 0");
    if (x == 0.0) return 1.0;
    return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double upper_inc_gamma(double a, double x) {
    return reg_upper_gamma(a, x) * std::exp(ln_gamma(a));
}

double gamma_tilde(double a, double x) {
    if (is_nonpositive_integer(a)) throw PoleError("gamma_tilde pole at non-positive integer a");
    if (x < 0.0) throw DomainError("gamma_tilde requires x >= 0");
    if (x == 0.0) return 0.0;

    if (x <= 0.5) {
        // sum_{k>=1} (-1)^k x^{a+k} / (k! (a+k)): term magnitudes decay
        // immediately for x <= 1/2, so the alternating sum is stable.
        double sum = 0.0;
        double term = -x; // (-1)^1 x^1 / 1!
        for (int k = 1; k <= kMaxTerms; ++k) {
            sum += term / (a + k);
            term *= -x / (k + 1);
            if (std::fabs(term / (a + k + 1)) < std::fabs(sum) * kEps) {
                return std::pow(x, a) * sum;
            }
        }
        throw NumericError("gamma_tilde series did not converge");
    }
    if (x <= 45.0) {
        // Kummer form: gamma(a,x) = x^a e^{-x} sum_k x^k / (a...(a+k));
        // all terms share a sign, and subtracting 1/a is benign here.
        double sum = 1.0 / a;
        double term = sum;
        for (int k = 1; k <= kMaxTerms; ++k) {
            term *= x / (a + k);
            sum += term;
            if (std::fabs(term) < std::fabs(sum) * kEps) {
                return std::pow(x, a) * (std::exp(-x) * sum - 1.0 / a);
            }
        }
        throw NumericError("gamma_tilde Kummer sum did not converge");
    }
    // Large x: gamma(a,x) = Gamma(a) - Gamma(a,x) and the x^a/a term is small.
    double upper = 0.0;
    if (x <= 700.0) {
        if (a > 0.0) {
            upper = upper_inc_gamma(a, x);
        } else {
            // one step of Gamma(a,x) = (Gamma(a+1,x) - x^a e^{-x}) / a, a in (-1,0)
            upper = (upper_inc_gamma(a + 1.0, x) - std::pow(x, a) * std::exp(-x)) / a;
        }
    }
    return gamma_fn(a) - upper - std::pow(x, a) / a;
}

double lower_inc_gamma(double a, double x) {
    if (is_nonpositive_integer(a)) throw PoleError("lower incomplete gamma pole at non-positive integer a");
    if (x < 0.0) throw DomainError("lower incomplete gamma requires x >= 0");
    if (a > 0.0) return reg_lower_gamma(a, x) * std::exp(ln_gamma(a));
    if (x == 0.0) throw DomainError("continued gamma(a,0) diverges for a < 0");
    return gamma_tilde(a, x) + std::pow(x, a) / a;
}

double lower_inc_gamma_kummer(double a, double x) {
    if (is_nonpositive_integer(a)) throw PoleError("lower incomplete gamma pole at non-positive integer a");
    if (x < 0.0) throw DomainError("lower incomplete gamma requires x >= 0");
    if (x == 0.0 && a < 0.0) throw DomainError("continued gamma(a,0) diverges for a < 0");
    double denom = a;
    double term = 1.0 / denom;
    double sum = term;
    for (int k = 1; k <= kMaxTerms; ++k) {
        denom = a + k;
        term *= x / denom;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps) {
            return std::pow(x, a) * std::exp(-x) * sum;
        }
    }
    throw NumericError("Kummer series exceeded " + std::to_string(kMaxTerms) + " terms");
}

double pochhammer_ratio(int n, double s) {
    if (n < 1) throw DomainError("pochhammer_ratio requires n >= 1");
    if (n + s <= 0.0) throw PoleError("pochhammer_ratio requires n + s > 0");
    return std::exp(std::lgamma(n + s) - std::lgamma(static_cast<double>(n)));
}

} // namespace domint::specfun
