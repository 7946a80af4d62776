#pragma once

#include "hvol/genus.hpp"

namespace hvol {

// zeta^k for zeta = e^{2 pi i/(2g+2)}, computed by angle reduction so that
// k and k mod (2g+2) give bit-identical values.
cplx zeta_pow(const Genus& g, long k);

// t_u = sum_{p=1}^{g} zeta^{up}, by the three-case closed form:
// g for u in (2g+2)Z, -1 for other even u, (1+zeta^u)/(1-zeta^u) for odd u.
cplx t_u(const Genus& g, long u);

// Same sum evaluated term by term; test oracle for t_u.
cplx t_u_direct(const Genus& g, long u);

// ln Gamma(x) for x > 0 (Lanczos approximation).
double log_gamma(double x);

// Euler beta function B(u, v) = Gamma(u)Gamma(v)/Gamma(u+v), u, v > 0.
double beta(double u, double v);

// B(i/(2g+2), 1/2), the constant entering every period of omega_i.
double beta_half(const Genus& g, int i);

} // namespace hvol
