#include "hvol/iterated.hpp"

#include "hvol/kernel.hpp"

#include <cmath>

namespace hvol {

cplx segment_iterated(const Genus& g, const FormRef& f1, const FormRef& f2,
                      const PathLetter& letter) {
    return 0.5 * segment_period(g, f1, letter) * segment_period(g, f2, letter);
}

CycElem word_iterated_exact(const Genus& g, const FormRef& f1, const FormRef& f2,
                            const PathWord& word) {
    if (!word.well_formed())
        throw std::invalid_argument("word_iterated_exact: ill-formed word");
    const int n = g.n();
    CycElem acc(n);
    CycElem prefix(n); // running sum of f1 letter periods
    for (const PathLetter& letter : word.letters) {
        const MonomialPeriod p = segment_period_monomial(g, f1, letter);
        const MonomialPeriod q = segment_period_monomial(g, f2, letter);
        acc += prefix.shifted_scaled(q.exponent, q.sign);
        acc.add_monomial(p.exponent + q.exponent, p.sign * q.sign); // the half pq term
        prefix.add_monomial(p.exponent, 2 * p.sign);
    }
    return acc;
}

std::vector<std::pair<cplx, FormRef>> expand_form(const Genus& g, const FormRef& f,
                                                  const HarmonicCoefficients& hc) {
    if (f.holomorphic_kind()) return {{cplx(1.0), f}};
    std::vector<std::pair<cplx, FormRef>> out;
    out.reserve(2 * g.g);
    for (int j = 1; j <= g.g; ++j) {
        out.emplace_back(hc.coeff(f, j - 1), FormRef::omega(j));
        out.emplace_back(hc.coeff(f, g.g + j - 1), FormRef::omega_conj(j));
    }
    return out;
}

cplx word_iterated(const Genus& g, const FormRef& f1, const FormRef& f2,
                   const PathWord& word) {
    if (f1.holomorphic_kind() && f2.holomorphic_kind())
        return word_iterated_exact(g, f1, f2, word).eval();
    const HarmonicCoefficients hc = harmonic_coefficients(g);
    cplx acc = 0.0;
    for (const auto& [c1, e1] : expand_form(g, f1, hc))
        for (const auto& [c2, e2] : expand_form(g, f2, hc))
            acc += c1 * c2 * word_iterated_exact(g, e1, e2, word).eval();
    return acc;
}

cplx loop_iterated_closed(const Genus& g, int i, int j, const LoopRef& loop,
                          bool conjugate_second) {
    if (i < 1 || i > g.g || j < 1 || j > g.g)
        throw std::invalid_argument("loop_iterated_closed: index out of [1, g]");
    const int k = loop.index;
    if (k < 1 || k > g.g)
        throw std::invalid_argument("loop_iterated_closed: loop index out of [1, g]");
    const long e = conjugate_second ? -static_cast<long>(j) : j;
    if (loop.kind == LoopRef::a)
        return 0.5 * zeta_pow(g, (i + e) * (2L * k - 1)) *
               (1.0 - 2.0 * zeta_pow(g, e) + zeta_pow(g, i + e));
    cplx acc = 0.0;
    for (int l = 1; l <= k; ++l)
        acc += 0.5 * zeta_pow(g, (i + e) * (2L * l - 2)) *
               (1.0 - 2.0 * zeta_pow(g, i) + zeta_pow(g, i + e));
    const cplx cross = (zeta_pow(g, i) - 1.0) * (zeta_pow(g, e) - 1.0);
    for (int l = 1; l <= k; ++l)
        for (int m = l + 1; m <= k; ++m)
            acc += cross * zeta_pow(g, i * (2L * m - 2) + e * (2L * l - 2));
    return acc;
}

double harmonic_pair_iterated(const Genus& g, const FormRef& h1, const FormRef& h2,
                              const LoopRef& loop) {
    if (!h1.harmonic_kind() || !h2.harmonic_kind())
        throw std::invalid_argument("harmonic_pair_iterated: alpha/beta forms required");
    const cplx v = word_iterated(g, h1, h2, loop.word(g));
    if (std::abs(v.imag()) > 1e-9)
        throw std::runtime_error("harmonic_pair_iterated: value not real");
    return v.real();
}

double harmonic_pair_formula(const Genus& g, const FormRef& h1, const FormRef& h2,
                             const LoopRef& loop) {
    if (h1.kind != h2.kind || !h1.harmonic_kind())
        throw std::invalid_argument(
            "harmonic_pair_formula: only (alpha,alpha) and (beta,beta) have displays");
    const int i = h1.index, j = h2.index, k = loop.index;
    const double scale = 1.0 / (2.0 * (g.g + 1) * (g.g + 1));
    const auto te = [&](long u) { return t_u(g, u).real(); }; // even args only

    if (h1.kind == FormKind::beta) {
        if (loop.kind == LoopRef::b) return 0.0; // equation (2)
        // equation (1)
        double s1 = 0.0, s2 = 0.0;
        for (int u = 1; u <= i; ++u) s1 += te(2L * k - 2 * u);
        for (int u = 1; u <= j; ++u) s2 += te(2L * k - 2 * u + 2);
        return scale * ((te(2L * k - 2 * j) - te(2L * k)) * s1 +
                        (te(2L * k) - te(2L * k - 2 * i)) * s2);
    }
    if (loop.kind == LoopRef::a) return 0.0; // equation (3)
    // equation (4); the v-sum is empty for k = 1
    double s1 = 0.0, s2 = 0.0;
    for (int u = 1; u <= k; ++u)
        s1 += te(2L * u - 2 * j) * te(2L * u - 2 * i) -
              2.0 * te(2L * u - 2 * j - 2) * te(2L * u - 2 * i) +
              te(2L * u - 2 * j - 2) * te(2L * u - 2 * i - 2);
    for (int v = 2; v <= k; ++v)
        s2 += 2.0 * (te(2L * v - 2 * i) - te(2L * v - 2 * i - 2)) *
              (te(2L * v - 2 * j - 2) - te(-2L * j));
    return scale * (s1 + s2);
}

} // namespace hvol
