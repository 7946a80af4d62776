#include "hvol/quadrature.hpp"

#include "hvol/kernel.hpp"

#include <cmath>
#include <numbers>

namespace hvol {

void QuadConfig::validate() const {
    if (level < 4 || level > 14)
        throw std::invalid_argument("QuadConfig: level outside [4, 14]");
    if (!(abs_tol >= 1e-13))
        throw std::invalid_argument("QuadConfig: abs_tol below 1e-13");
    if (grid_size < 8 || grid_size > 4096)
        throw std::invalid_argument("QuadConfig: grid_size outside [8, 4096]");
}

namespace {

QuadResult tanh_sinh_impl(const OffsetIntegrand& f, double a, double b,
                          double abs_tol, int max_level) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    const double pi_half = 0.5 * std::numbers::pi;

    // tail cutoff on the transformed-integrand terms themselves: weights
    // alone undershoot the tail of strong algebraic singularities
    const auto sweep = [&](double h, bool odd_only) {
        const double cut = abs_tol / (200.0 * h * std::max(1.0, std::abs(half)));
        cplx acc = 0.0;
        int below = 0;
        for (long j = odd_only ? 1 : 0; j < 40000000; j += odd_only ? 2 : 1) {
            const double u = h * static_cast<double>(j);
            const double s = pi_half * std::sinh(u);
            const double c = std::cosh(s);
            const double w = pi_half * std::cosh(u) / (c * c);
            const double x = std::tanh(s);
            // half*(1-x) without cancellation: 1-x = (1-x^2)/(1+x) = 1/(c^2 (1+x))
            const double off_small = half / (c * c * (1.0 + x));
            if (off_small == 0.0) break; // beyond double range
            const double off_large = 2.0 * half - off_small;
            const double xp = mid + half * x;
            const double xm = mid - half * x;
            cplx term = f(xp, off_large, off_small) * w;
            if (j != 0) term += f(xm, off_small, off_large) * w;
            acc += term;
            if (j > 3) {
                if (std::abs(term) < cut) {
                    if (++below >= 2) break;
                } else {
                    below = 0;
                }
            }
        }
        return acc;
    };

    double h = 1.0;
    cplx sum = sweep(h, false);
    cplx estimate = sum * h * half;
    double err = std::abs(estimate);
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        sum += sweep(h, true);
        const cplx cur = sum * h * half;
        err = std::abs(cur - estimate);
        estimate = cur;
        if (level >= 3 && err < abs_tol) return {estimate, err, true};
    }
    return {estimate, err, false};
}

} // namespace

QuadResult tanh_sinh_offsets(const OffsetIntegrand& f, double a, double b,
                             double abs_tol, int max_level) {
    return tanh_sinh_impl(f, a, b, abs_tol, max_level);
}

QuadResult tanh_sinh(const std::function<cplx(double)>& f, double a, double b,
                     double abs_tol, int max_level) {
    // rebuild nodes near the endpoints from the offsets, so integrands with
    // endpoint singularities see arguments strictly inside (a, b)
    const double span = std::abs(b - a);
    return tanh_sinh_impl(
        [&, span](double t, double oa, double ob) {
            if (ob < 1e-8 * span) t = b - ob;
            if (oa < 1e-8 * span) t = a + oa;
            if (t <= a || t >= b) return cplx(0.0);
            return f(t);
        },
        a, b, abs_tol, max_level);
}

namespace {

cplx omega_scale(const Genus& g, int i) {
    // (2g+2) sqrt(-1) / (2 B(i/(2g+2), 1/2))
    return cplx(0.0, g.n() / (2.0 * beta_half(g, i)));
}

cplx pow_int(cplx z, int e) {
    cplx r = 1.0;
    for (int k = 0; k < e; ++k) r *= z;
    return r;
}

// Pullback of omega'_i (or conjugate) through a letter at time t, with the
// distance to the ramification time 1/2 supplied separately so that the
// radicand 1 - s^{2g+2} = -expm1((2g+2) log1p(-2 d)) never cancels.
cplx pullback(const Genus& g, const FormRef& form, const PathLetter& letter,
              double t, double dist_half) {
    const double tau = letter.reversed ? 1.0 - t : t;
    const bool first_half = tau <= 0.5;
    const double s = 1.0 - 2.0 * dist_half; // radial coordinate in [0, 1]
    double radicand;
    if (dist_half >= 0.5) {
        radicand = 1.0;
    } else {
        radicand = -std::expm1(static_cast<double>(g.n()) * std::log1p(-2.0 * dist_half));
    }
    const double root = std::sqrt(radicand);
    cplx w = first_half ? cplx(0.0, root) : cplx(0.0, -root);
    if (letter.involuted) w = -w;
    const cplx zj = zeta_pow(g, letter.index);
    const cplx z = s * zj;
    cplx v = first_half ? 2.0 * zj : -2.0 * zj;
    if (letter.reversed) v = -v;
    const cplx val = omega_scale(g, form.index) * pow_int(z, form.index - 1) * v / w;
    return form.kind == FormKind::omega_prime_conj ? std::conj(val) : val;
}

// the two tanh-sinh halves of one letter; the singular time sits at the
// shared endpoint, where the rule supplies the exact offset
cplx quad_letter(const Genus& g, const FormRef& form, const PathLetter& letter,
                 const QuadConfig& cfg) {
    const auto lo = [&](double t, double, double ob) {
        return pullback(g, form, letter, t, ob);
    };
    const auto hi = [&](double t, double oa, double) {
        return pullback(g, form, letter, t, oa);
    };
    const QuadResult r1 = tanh_sinh_impl(lo, 0.0, 0.5, cfg.abs_tol, cfg.level);
    const QuadResult r2 = tanh_sinh_impl(hi, 0.5, 1.0, cfg.abs_tol, cfg.level);
    if (!r1.converged || !r2.converged)
        throw std::runtime_error("quad_period: no convergence at max level, error ~" +
                                 std::to_string(std::max(r1.err_estimate, r2.err_estimate)));
    return r1.value + r2.value;
}

// Cumulative primitive of the pullback of one form along one letter.  Each
// half carries the cosine-clustered grid t = t0 + (1/4)(1 - cos u); the
// integrand times dt/du is analytic up to the singular end, so 16-point
// Gauss panels converge spectrally, and the primitive is interpolated in u
// by degree-8 pieces.
class LetterPrimitive {
public:
    LetterPrimitive(const Genus& g, const FormRef& form, const PathLetter& letter,
                    int panels)
        : m_(panels) {
        values_[0].assign(m_ + 1, cplx{});
        values_[1].assign(m_ + 1, cplx{});
        build(g, form, letter, 0);
        const cplx carried = values_[0][m_];
        build(g, form, letter, 1);
        for (auto& v : values_[1]) v += carried;
    }

    // F(t) = integral of the pullback from 0 to t; dist_half = |t - 1/2|
    cplx eval(double t, double dist_half) const {
        const int half = t <= 0.5 ? 0 : 1;
        // grid variable; cancellation-free near the singular end
        double c = half == 0 ? -1.0 + 4.0 * dist_half : 1.0 - 4.0 * dist_half;
        c = std::min(1.0, std::max(-1.0, c));
        const double u = std::acos(c);
        const double h = std::numbers::pi / m_;
        int base = static_cast<int>(std::floor(u / h)) - 4;
        base = std::max(0, std::min(m_ - 8, base));
        cplx acc = 0.0;
        for (int k = 0; k <= 8; ++k) {
            double l = 1.0;
            const double uk = (base + k) * h;
            for (int r = 0; r <= 8; ++r) {
                if (r == k) continue;
                const double ur = (base + r) * h;
                l *= (u - ur) / (uk - ur);
            }
            acc += l * values_[half][base + k];
        }
        return acc;
    }

    cplx total() const { return values_[1][m_]; }

private:
    void build(const Genus& g, const FormRef& form, const PathLetter& letter, int half) {
        static const double gx[8] = {0.0950125098376374, 0.2816035507792589,
                                     0.4580167776572274, 0.6178762444026438,
                                     0.7554044083550030, 0.8656312023878318,
                                     0.9445750230732326, 0.9894009349916499};
        static const double gw[8] = {0.1894506104550685, 0.1826034150449236,
                                     0.1691565193950025, 0.1495959888165767,
                                     0.1246289712555339, 0.0951585116824928,
                                     0.0622535239386479, 0.0271524594117541};
        const double h = std::numbers::pi / m_;
        values_[half][0] = 0.0;
        for (int k = 0; k < m_; ++k) {
            const double um = (k + 0.5) * h;
            cplx panel = 0.0;
            for (int q = 0; q < 8; ++q) {
                for (double sgn : {-1.0, 1.0}) {
                    const double u = um + sgn * (0.5 * h) * gx[q];
                    // distance to the singular end of the half, exact near it
                    const double dist = half == 0 ? 0.5 * std::cos(0.5 * u) * std::cos(0.5 * u)
                                                  : 0.5 * std::sin(0.5 * u) * std::sin(0.5 * u);
                    const double t = half == 0 ? 0.5 - dist : 0.5 + dist;
                    const double dtdu = 0.25 * std::sin(u);
                    panel += 0.5 * gw[q] * pullback(g, form, letter, t, dist) * dtdu;
                }
            }
            values_[half][k + 1] = values_[half][k] + panel * h;
        }
    }

    int m_;
    std::vector<cplx> values_[2];
};

cplx quad_word_iterated_elementary(const Genus& g, const FormRef& f1,
                                   const FormRef& f2, const PathWord& word,
                                   const QuadConfig& cfg) {
    if (!word.well_formed())
        throw std::invalid_argument("quad_iterated: ill-formed word");
    cplx total = 0.0;
    cplx prefix = 0.0; // integral of f1 over the earlier letters
    for (const PathLetter& letter : word.letters) {
        const LetterPrimitive primitive(g, f1, letter, cfg.grid_size);
        const auto lo = [&](double t, double, double ob) {
            return (prefix + primitive.eval(t, ob)) * pullback(g, f2, letter, t, ob);
        };
        const auto hi = [&](double t, double oa, double) {
            return (prefix + primitive.eval(t, oa)) * pullback(g, f2, letter, t, oa);
        };
        const QuadResult r1 = tanh_sinh_impl(lo, 0.0, 0.5, cfg.abs_tol, cfg.level);
        const QuadResult r2 = tanh_sinh_impl(hi, 0.5, 1.0, cfg.abs_tol, cfg.level);
        if (!r1.converged || !r2.converged)
            throw std::runtime_error("quad_iterated: no convergence at max level");
        total += r1.value + r2.value;
        prefix += primitive.total();
    }
    return total;
}

} // namespace

cplx quad_period(const Genus& g, const FormRef& form, const PathLetter& letter,
                 const QuadConfig& cfg) {
    cfg.validate();
    if (!form.holomorphic_kind())
        throw std::invalid_argument("quad_period: omega kinds only");
    return quad_letter(g, form, letter, cfg);
}

cplx quad_iterated(const Genus& g, const FormRef& f1, const FormRef& f2,
                   const PathWord& word, const QuadConfig& cfg) {
    cfg.validate();
    if (!f1.holomorphic_kind() || !f2.holomorphic_kind())
        throw std::invalid_argument("quad_iterated: omega kinds only");
    return quad_word_iterated_elementary(g, f1, f2, word, cfg);
}

QuadOracle::QuadOracle(const Genus& g, const QuadConfig& cfg)
    : g_(g), cfg_(cfg), hc_{CMat(g.g, 2 * g.g), CMat(g.g, 2 * g.g)} {
    cfg_.validate();
    // loop period matrices by direct integration, then numeric inversion
    CMat qa(g.g, g.g), qb(g.g, g.g);
    for (int i = 1; i <= g.g; ++i)
        for (int j = 1; j <= g.g; ++j) {
            const FormRef w = FormRef::omega(i);
            cplx va = 0.0, vb = 0.0;
            for (const PathLetter& l : loop_a(g, j).letters) va += quad_letter(g, w, l, cfg_);
            for (const PathLetter& l : loop_b(g, j).letters) vb += quad_letter(g, w, l, cfg_);
            qa.at(i - 1, j - 1) = va;
            qb.at(i - 1, j - 1) = vb;
        }
    const CMat ainv = lu_inverse(qa);
    const CMat binv = lu_inverse(qb);
    for (int i = 0; i < g.g; ++i)
        for (int j = 0; j < g.g; ++j) {
            hc_.alpha.at(i, j) = 0.5 * binv.at(i, j);
            hc_.alpha.at(i, g.g + j) = 0.5 * std::conj(binv.at(i, j));
            hc_.beta.at(i, j) = -0.5 * ainv.at(i, j);
            hc_.beta.at(i, g.g + j) = -0.5 * std::conj(ainv.at(i, j));
        }
}

cplx QuadOracle::period(const FormRef& form, const PathLetter& letter) const {
    if (form.holomorphic_kind()) return quad_letter(g_, form, letter, cfg_);
    cplx acc = 0.0;
    for (int j = 1; j <= g_.g; ++j) {
        acc += hc_.coeff(form, j - 1) * quad_letter(g_, FormRef::omega(j), letter, cfg_);
        acc += hc_.coeff(form, g_.g + j - 1) *
               quad_letter(g_, FormRef::omega_conj(j), letter, cfg_);
    }
    return acc;
}

cplx QuadOracle::word_period(const FormRef& form, const PathWord& word) const {
    cplx acc = 0.0;
    for (const PathLetter& l : word.letters) acc += period(form, l);
    return acc;
}

cplx QuadOracle::word_iterated(const FormRef& f1, const FormRef& f2,
                               const PathWord& word) const {
    if (f1.holomorphic_kind() && f2.holomorphic_kind())
        return quad_word_iterated_elementary(g_, f1, f2, word, cfg_);
    // expand harmonic slots through the numerically derived coefficients
    const auto expand = [&](const FormRef& f) {
        std::vector<std::pair<cplx, FormRef>> out;
        if (f.holomorphic_kind()) {
            out.emplace_back(cplx(1.0), f);
            return out;
        }
        for (int j = 1; j <= g_.g; ++j) {
            out.emplace_back(hc_.coeff(f, j - 1), FormRef::omega(j));
            out.emplace_back(hc_.coeff(f, g_.g + j - 1), FormRef::omega_conj(j));
        }
        return out;
    };
    cplx acc = 0.0;
    for (const auto& [c1, e1] : expand(f1))
        for (const auto& [c2, e2] : expand(f2))
            acc += c1 * c2 * quad_word_iterated_elementary(g_, e1, e2, word, cfg_);
    return acc;
}

} // namespace hvol
