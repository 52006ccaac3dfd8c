#include "gammabal/gamma.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gammabal/error.hpp"

namespace gammabal {

namespace {

void check_params(const GammaParams& p) {
    if (!(p.alpha > 0.0) || !std::isfinite(p.alpha)) {
        throw DomainError("gamma shape must be positive, got " + std::to_string(p.alpha));
    }
    if (!(p.theta > 0.0) || !std::isfinite(p.theta)) {
        throw DomainError("gamma scale must be positive, got " + std::to_string(p.theta));
    }
}

// Regularized lower incomplete gamma P(a, x) by series expansion; converges
// quickly for x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-15) {
            break;
        }
    }
    return sum * std::exp(-x + a * std::log(x) - log_gamma_fn(a));
}

// Complement Q(a, x) by Lentz continued fraction; stable for x >= a + 1.
double gamma_q_continued_fraction(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-15) {
            break;
        }
    }
    return std::exp(-x + a * std::log(x) - log_gamma_fn(a)) * h;
}

}  // namespace

double GammaParams::mode() const {
    if (!(alpha >= 1.0)) {
        throw DomainError("mode requires shape >= 1, got " + std::to_string(alpha));
    }
    return theta * (alpha - 1.0);
}

double log_gamma_fn(double z) {
    // Lanczos approximation, g = 7, 9 coefficients.
    static constexpr double coeff[9] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,       -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
    if (!(z > 0.0)) {
        throw DomainError("log_gamma_fn requires z > 0, got " + std::to_string(z));
    }
    if (z < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        return std::log(M_PI / std::sin(M_PI * z)) - log_gamma_fn(1.0 - z);
    }
    const double zm1 = z - 1.0;
    double x = coeff[0];
    for (int i = 1; i < 9; ++i) {
        x += coeff[i] / (zm1 + static_cast<double>(i));
    }
    const double t = zm1 + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (zm1 + 0.5) * std::log(t) - t + std::log(x);
}

double gamma_pdf(double x, const GammaParams& p) {
    check_params(p);
    if (x < 0.0 || std::isnan(x)) {
        throw DomainError("gamma pdf requires x >= 0, got " + std::to_string(x));
    }
    if (x == 0.0) {
        if (p.alpha < 1.0) return std::numeric_limits<double>::infinity();
        if (p.alpha == 1.0) return 1.0 / p.theta;
        return 0.0;
    }
    const double log_pdf = (p.alpha - 1.0) * std::log(x) - x / p.theta -
                           log_gamma_fn(p.alpha) - p.alpha * std::log(p.theta);
    return std::exp(log_pdf);
}

double gamma_cdf(double x, const GammaParams& p) {
    check_params(p);
    if (x < 0.0 || std::isnan(x)) {
        throw DomainError("gamma cdf requires x >= 0, got " + std::to_string(x));
    }
    if (x == 0.0) {
        return 0.0;
    }
    const double z = x / p.theta;
    if (z < p.alpha + 1.0) {
        return gamma_p_series(p.alpha, z);
    }
    return 1.0 - gamma_q_continued_fraction(p.alpha, z);
}

double gamma_sample(const GammaParams& p, Rng& rng) {
    check_params(p);
    if (p.alpha < 1.0) {
        throw DomainError("gamma sampler requires shape >= 1, got " + std::to_string(p.alpha));
    }
    // Marsaglia & Tsang: accept d*v where v is a cube of a squeezed Gaussian.
    const double d = p.alpha - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (;;) {
        double x = normal(rng);
        double v = 1.0 + c * x;
        if (v <= 0.0) {
            continue;
        }
        v = v * v * v;
        const double u = unit(rng);
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) {
            return d * v * p.theta;
        }
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
            return d * v * p.theta;
        }
    }
}

}  // namespace gammabal
