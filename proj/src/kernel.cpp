#include "hvol/kernel.hpp"

#include <cmath>
#include <numbers>

namespace hvol {

cplx zeta_pow(const Genus& g, long k) {
    const long n = g.n();
    long r = k % n;
    if (r < 0) r += n;
    // exact values on the axes, polar elsewhere
    if (4 * r % n == 0) {
        switch (4 * r / n) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            case 3: return {0.0, -1.0};
        }
    }
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(r) / n;
    return {std::cos(theta), std::sin(theta)};
}

cplx t_u(const Genus& g, long u) {
    const long n = g.n();
    long r = u % n;
    if (r < 0) r += n;
    if (r == 0) return {static_cast<double>(g.g), 0.0};
    if (r % 2 == 0) return {-1.0, 0.0};
    // odd case: (1+zeta^u)/(1-zeta^u) = i*cot(pi u/(2g+2)), pure imaginary
    const double theta = std::numbers::pi * static_cast<double>(r) / n;
    return {0.0, std::cos(theta) / std::sin(theta)};
}

cplx t_u_direct(const Genus& g, long u) {
    cplx s = 0.0;
    for (int p = 1; p <= g.g; ++p) s += zeta_pow(g, u * p);
    return s;
}

namespace {

// Lanczos, g = 7, n = 9 (double precision standard set)
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

} // namespace

double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::invalid_argument("log_gamma requires x > 0");
    if (x < 0.5) {
        // reflection keeps the series argument away from 0
        const double pi = std::numbers::pi;
        return std::log(pi / std::sin(pi * x)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
           std::log(acc);
}

double beta(double u, double v) {
    if (!(u > 0.0) || !(v > 0.0))
        throw std::invalid_argument("beta requires positive arguments");
    return std::exp(log_gamma(u) + log_gamma(v) - log_gamma(u + v));
}

double beta_half(const Genus& g, int i) {
    if (i < 1 || i > g.g)
        throw std::invalid_argument("beta_half: index out of [1, g]");
    return beta(static_cast<double>(i) / g.n(), 0.5);
}

} // namespace hvol
