#pragma once

#include <complex>
#include <stdexcept>

namespace hvol {

using cplx = std::complex<double>;

// Genus of the curve w^2 = z^{2g+2} - 1.  The harmonic volume needs
// g >= 3; the ceiling keeps every dense solve at desk scale.
struct Genus {
    int g;

    explicit Genus(int g_) : g(g_) {
        if (g < 3 || g > 12)
            throw std::invalid_argument("genus must lie in [3, 12]");
    }

    // number of branch points, = order of zeta
    int n() const { return 2 * g + 2; }
};

} // namespace hvol
