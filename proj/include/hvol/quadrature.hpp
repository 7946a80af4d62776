#pragma once

#include "hvol/periods.hpp"

#include <functional>

namespace hvol {

struct QuadConfig {
    int level = 10;         // max node-doubling depth of the tanh-sinh rule
    double abs_tol = 1e-10; // per-integral convergence target
    int grid_size = 64;     // panels per half-letter for the cumulative primitive

    void validate() const;
};

struct QuadResult {
    cplx value;
    double err_estimate;
    bool converged;
};

// tanh-sinh (double exponential) quadrature on [a, b]; handles integrable
// endpoint singularities such as the inverse square root at the
// ramification points without any problem-specific substitution.
QuadResult tanh_sinh(const std::function<cplx(double)>& f, double a, double b,
                     double abs_tol, int max_level);

// Same rule, but the integrand also receives its distances to a and b.
// The offsets stay meaningful far below machine epsilon of t itself, which
// is what an endpoint-singular integrand must be evaluated from to reach
// tolerances beyond ~1e-8.
using OffsetIntegrand = std::function<cplx(double t, double off_a, double off_b)>;
QuadResult tanh_sinh_offsets(const OffsetIntegrand& f, double a, double b,
                             double abs_tol, int max_level);

// Direct numerical single integral of omega'_i (or conjugate) over one
// letter: pulls z^{i-1} dz / w back through the letter parametrization and
// integrates each half, the singular point t = 1/2 sitting at an endpoint.
cplx quad_period(const Genus& g, const FormRef& form, const PathLetter& letter,
                 const QuadConfig& cfg = {});

// Iterated integral along a word by the cumulative-primitive route: the
// primitive of the first pullback is tabulated per half-letter on a grid
// clustered at the singular ends, interpolated by degree-8 pieces, and the
// outer pass is tanh-sinh again.  omega kinds only.
cplx quad_iterated(const Genus& g, const FormRef& f1, const FormRef& f2,
                   const PathWord& word, const QuadConfig& cfg = {});

// Everything the acceptance checks need from the numerical side, with the
// harmonic forms rebuilt from quadrature data alone: loop period matrices
// are integrated numerically and inverted, never read from the closed
// forms.  The only analytic inputs are the curve parametrization and the
// omega'_i normalization constant.
class QuadOracle {
public:
    QuadOracle(const Genus& g, const QuadConfig& cfg = {});

    const Genus& genus() const { return g_; }

    cplx period(const FormRef& form, const PathLetter& letter) const;
    cplx word_period(const FormRef& form, const PathWord& word) const; // any kind
    cplx word_iterated(const FormRef& f1, const FormRef& f2, const PathWord& word) const;

private:
    Genus g_;
    QuadConfig cfg_;
    HarmonicCoefficients hc_; // derived from numerically integrated periods
};

} // namespace hvol
