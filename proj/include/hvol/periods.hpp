#pragma once

#include "hvol/curve.hpp"
#include "hvol/smallmat.hpp"

#include <string>

namespace hvol {

// The four integrand families.  omega'_i is the normalized holomorphic form
// (2g+2) i / (2 B(i/(2g+2), 1/2)) * z^{i-1} dz / w, so every letter period
// is a power of zeta; alpha_i, beta_i are the integral harmonic forms dual
// to the a/b loops.
enum class FormKind { omega_prime, omega_prime_conj, alpha, beta };

struct FormRef {
    FormKind kind;
    int index; // 1..g

    static FormRef omega(int i) { return {FormKind::omega_prime, i}; }
    static FormRef omega_conj(int i) { return {FormKind::omega_prime_conj, i}; }
    static FormRef alpha(int i) { return {FormKind::alpha, i}; }
    static FormRef beta(int i) { return {FormKind::beta, i}; }

    bool holomorphic_kind() const {
        return kind == FormKind::omega_prime || kind == FormKind::omega_prime_conj;
    }
    bool harmonic_kind() const { return !holomorphic_kind(); }

    std::string name() const;
    bool operator==(const FormRef&) const = default;
};

// a_k or b_k
struct LoopRef {
    enum Kind { a, b } kind;
    int index; // 1..g

    PathWord word(const Genus& g) const;
    std::string name() const;
    bool operator==(const LoopRef&) const = default;
};

// A letter period of omega'_i or its conjugate is sign * zeta^{exponent};
// this is the exact form the shuffle engine folds over.
struct MonomialPeriod {
    long exponent;
    int sign; // +1 or -1
};

MonomialPeriod segment_period_monomial(const Genus& g, const FormRef& form,
                                       const PathLetter& letter);

// Closed-form single integral over one letter; omega kinds only.
cplx segment_period(const Genus& g, const FormRef& form, const PathLetter& letter);

// Closed forms of Lemma-level loop periods of omega'_i:
// over a_j: zeta^{i(2j-1)} (1 - zeta^i);  over b_j: (zeta^{2ij}-1)/(zeta^i+1).
cplx loop_period_closed(const Genus& g, int i, const LoopRef& loop);

struct PeriodMatrices {
    CMat omega_a;     // (i,j) = integral of omega'_i over a_j
    CMat omega_b;     // (i,j) = integral of omega'_i over b_j
    CMat omega_a_inv; // closed form
    CMat omega_b_inv; // closed form
    CMat z;           // period matrix, Schindler sum
};

// The three independent presentations of Z.
CMat z_schindler(const Genus& g);
CMat z_product(const Genus& g); // inv(omega_a) * omega_b via closed inverses
CMat z_remark(const Genus& g);  // real cotangent form, pure imaginary by construction

// Builds all matrices and cross-checks them: closed inverses against LU
// inverses (1e-12), Z symmetric and pure imaginary (1e-12), Im Z positive
// definite, the three Z routes within 1e-10.  Throws on any violation.
PeriodMatrices period_matrices(const Genus& g);

// alpha_i, beta_i expanded over (omega'_1..omega'_g, conj omega'_1..conj
// omega'_g); rows i = 1..g, columns j < g hold the omega'_{j+1} coefficient
// and columns g+j its conjugate partner.
struct HarmonicCoefficients {
    CMat alpha; // g x 2g
    CMat beta;  // g x 2g

    cplx coeff(const FormRef& harmonic, int col) const;
};

HarmonicCoefficients harmonic_coefficients(const Genus& g);

// Single integral of any form over a canonical loop (harmonic kinds are
// expanded through the coefficients; the duality table lives here).
cplx loop_period(const Genus& g, const FormRef& form, const LoopRef& loop);

// integral over C0 of form1 wedge form2, by the Riemann bilinear relation
// for omega kinds and by the intersection pairing for harmonic kinds
cplx wedge_number(const Genus& g, const FormRef& f1, const FormRef& f2);

} // namespace hvol
