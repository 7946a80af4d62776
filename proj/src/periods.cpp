#include "hvol/periods.hpp"

#include "hvol/kernel.hpp"

#include <cmath>
#include <numbers>

namespace hvol {

std::string FormRef::name() const {
    switch (kind) {
        case FormKind::omega_prime: return "omega'_" + std::to_string(index);
        case FormKind::omega_prime_conj: return "conj(omega'_" + std::to_string(index) + ")";
        case FormKind::alpha: return "alpha_" + std::to_string(index);
        case FormKind::beta: return "beta_" + std::to_string(index);
    }
    return "?";
}

PathWord LoopRef::word(const Genus& g) const {
    return kind == a ? loop_a(g, index) : loop_b(g, index);
}

std::string LoopRef::name() const {
    return (kind == a ? "a" : "b") + std::to_string(index);
}

static void require_omega_kind(const FormRef& form, const char* who) {
    if (!form.holomorphic_kind())
        throw std::invalid_argument(std::string(who) +
                                    ": alpha/beta must be expanded upstream");
}

static void require_index(const Genus& g, int i, const char* who) {
    if (i < 1 || i > g.g)
        throw std::invalid_argument(std::string(who) + ": form index out of [1, g]");
}

MonomialPeriod segment_period_monomial(const Genus& g, const FormRef& form,
                                       const PathLetter& letter) {
    require_omega_kind(form, "segment_period_monomial");
    require_index(g, form.index, "segment_period_monomial");
    if (letter.index < 0 || letter.index > 2 * g.g + 1)
        throw std::invalid_argument("segment_period_monomial: letter index out of range");
    // integral of omega'_i over plain e_j is zeta^{ij}; the involution and
    // orientation reversal each negate it; conjugation flips the exponent
    long e = static_cast<long>(form.index) * letter.index;
    if (form.kind == FormKind::omega_prime_conj) e = -e;
    int sign = 1;
    if (letter.involuted) sign = -sign;
    if (letter.reversed) sign = -sign;
    return {e, sign};
}

cplx segment_period(const Genus& g, const FormRef& form, const PathLetter& letter) {
    const MonomialPeriod m = segment_period_monomial(g, form, letter);
    return static_cast<double>(m.sign) * zeta_pow(g, m.exponent);
}

cplx loop_period_closed(const Genus& g, int i, const LoopRef& loop) {
    require_index(g, i, "loop_period_closed");
    require_index(g, loop.index, "loop_period_closed");
    const int j = loop.index;
    if (loop.kind == LoopRef::a)
        return zeta_pow(g, static_cast<long>(i) * (2 * j - 1)) * (1.0 - zeta_pow(g, i));
    return (zeta_pow(g, 2L * i * j) - 1.0) / (zeta_pow(g, i) + 1.0);
}

static CMat omega_a_matrix(const Genus& g) {
    CMat m(g.g, g.g);
    for (int i = 1; i <= g.g; ++i)
        for (int j = 1; j <= g.g; ++j)
            m.at(i - 1, j - 1) = loop_period_closed(g, i, {LoopRef::a, j});
    return m;
}

static CMat omega_b_matrix(const Genus& g) {
    CMat m(g.g, g.g);
    for (int i = 1; i <= g.g; ++i)
        for (int j = 1; j <= g.g; ++j)
            m.at(i - 1, j - 1) = loop_period_closed(g, i, {LoopRef::b, j});
    return m;
}

static CMat omega_a_inv_closed(const Genus& g) {
    CMat m(g.g, g.g);
    const double s = 1.0 / (g.g + 1);
    for (int i = 1; i <= g.g; ++i)
        for (int j = 1; j <= g.g; ++j)
            m.at(i - 1, j - 1) = s * zeta_pow(g, j) *
                                 (zeta_pow(g, -2L * i * j) - 1.0) /
                                 (1.0 - zeta_pow(g, j));
    return m;
}

static CMat omega_b_inv_closed(const Genus& g) {
    CMat m(g.g, g.g);
    const double s = 1.0 / (g.g + 1);
    for (int i = 1; i <= g.g; ++i)
        for (int j = 1; j <= g.g; ++j)
            m.at(i - 1, j - 1) =
                s * zeta_pow(g, -2L * i * j) * (1.0 + zeta_pow(g, j));
    return m;
}

CMat z_schindler(const Genus& g) {
    CMat m(g.g, g.g);
    const double s = 1.0 / (g.g + 1);
    for (int i = 1; i <= g.g; ++i)
        for (int j = 1; j <= g.g; ++j) {
            cplx acc = 0.0;
            for (int k = 1; k <= g.g; ++k)
                acc += zeta_pow(g, k) * (zeta_pow(g, -2L * i * k) - 1.0) *
                       (zeta_pow(g, 2L * k * j) - 1.0) /
                       (1.0 - zeta_pow(g, 2L * k));
            m.at(i - 1, j - 1) = s * acc;
        }
    return m;
}

CMat z_product(const Genus& g) {
    return mat_mul(omega_a_inv_closed(g), omega_b_matrix(g));
}

CMat z_remark(const Genus& g) {
    // (1+cos u pi/(g+1))/sin(u pi/(g+1)) summed over the two odd offsets
    const auto cot_half = [&](long u) {
        const double theta = std::numbers::pi * static_cast<double>(u) / (g.g + 1);
        return (1.0 + std::cos(theta)) / std::sin(theta);
    };
    CMat m(g.g, g.g);
    for (int i = 1; i <= g.g; ++i)
        for (int j = 1; j <= g.g; ++j) {
            double acc = 0.0;
            for (int nu = 1; nu <= i; ++nu)
                acc += cot_half(2L * nu - 1) + cot_half(2L * (j - nu) + 1);
            m.at(i - 1, j - 1) = cplx(0.0, acc / (g.g + 1));
        }
    return m;
}

PeriodMatrices period_matrices(const Genus& g) {
    PeriodMatrices pm;
    pm.omega_a = omega_a_matrix(g);
    pm.omega_b = omega_b_matrix(g);
    pm.omega_a_inv = omega_a_inv_closed(g);
    pm.omega_b_inv = omega_b_inv_closed(g);
    pm.z = z_schindler(g);

    const auto check = [](bool ok, const char* what) {
        if (!ok) throw std::runtime_error(std::string("period_matrices: ") + what);
    };
    const CMat id = CMat::identity(g.g);
    check(mat_max_abs_diff(mat_mul(pm.omega_a, pm.omega_a_inv), id) < 1e-12,
          "closed inverse of omega_a fails");
    check(mat_max_abs_diff(mat_mul(pm.omega_b, pm.omega_b_inv), id) < 1e-12,
          "closed inverse of omega_b fails");
    check(mat_max_abs_diff(lu_inverse(pm.omega_a), pm.omega_a_inv) < 1e-12,
          "LU inverse of omega_a disagrees with closed form");
    check(mat_max_abs_diff(lu_inverse(pm.omega_b), pm.omega_b_inv) < 1e-12,
          "LU inverse of omega_b disagrees with closed form");
    check(mat_max_abs_diff(pm.z, z_product(g)) < 1e-10, "Z routes disagree (product)");
    check(mat_max_abs_diff(pm.z, z_remark(g)) < 1e-10, "Z routes disagree (remark)");

    std::vector<double> imz(static_cast<size_t>(g.g) * g.g);
    for (int i = 0; i < g.g; ++i)
        for (int j = 0; j < g.g; ++j) {
            check(std::abs(pm.z.at(i, j) - pm.z.at(j, i)) < 1e-12, "Z not symmetric");
            check(std::abs(pm.z.at(i, j).real()) < 1e-12, "Z not pure imaginary");
            imz[static_cast<size_t>(i) * g.g + j] = pm.z.at(i, j).imag();
        }
    check(real_sym_positive_definite(imz, g.g), "Im Z not positive definite");
    return pm;
}

cplx HarmonicCoefficients::coeff(const FormRef& harmonic, int col) const {
    const CMat& m = harmonic.kind == FormKind::alpha ? alpha : beta;
    return m.at(harmonic.index - 1, col);
}

HarmonicCoefficients harmonic_coefficients(const Genus& g) {
    // alpha = Re((omega_b)^{-1} omega'), beta = -Re((omega_a)^{-1} omega')
    const CMat ainv = omega_a_inv_closed(g);
    const CMat binv = omega_b_inv_closed(g);
    HarmonicCoefficients hc{CMat(g.g, 2 * g.g), CMat(g.g, 2 * g.g)};
    for (int i = 0; i < g.g; ++i)
        for (int j = 0; j < g.g; ++j) {
            hc.alpha.at(i, j) = 0.5 * binv.at(i, j);
            hc.alpha.at(i, g.g + j) = 0.5 * std::conj(binv.at(i, j));
            hc.beta.at(i, j) = -0.5 * ainv.at(i, j);
            hc.beta.at(i, g.g + j) = -0.5 * std::conj(ainv.at(i, j));
        }
    return hc;
}

cplx loop_period(const Genus& g, const FormRef& form, const LoopRef& loop) {
    require_index(g, form.index, "loop_period");
    if (form.kind == FormKind::omega_prime)
        return loop_period_closed(g, form.index, loop);
    if (form.kind == FormKind::omega_prime_conj)
        return std::conj(loop_period_closed(g, form.index, loop));
    const HarmonicCoefficients hc = harmonic_coefficients(g);
    cplx acc = 0.0;
    for (int j = 1; j <= g.g; ++j) {
        const cplx lp = loop_period_closed(g, j, loop);
        acc += hc.coeff(form, j - 1) * lp + hc.coeff(form, g.g + j - 1) * std::conj(lp);
    }
    return acc;
}

cplx wedge_number(const Genus& g, const FormRef& f1, const FormRef& f2) {
    // Riemann bilinear relation over the symplectic loop system
    cplx acc = 0.0;
    for (int k = 1; k <= g.g; ++k) {
        const LoopRef ak{LoopRef::a, k}, bk{LoopRef::b, k};
        acc += loop_period(g, f1, ak) * loop_period(g, f2, bk) -
               loop_period(g, f1, bk) * loop_period(g, f2, ak);
    }
    return acc;
}

} // namespace hvol
