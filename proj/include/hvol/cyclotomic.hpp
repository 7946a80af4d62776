#pragma once

#include "hvol/genus.hpp"

#include <cstdint>
#include <vector>

namespace hvol {

// n-th cyclotomic polynomial, ascending integer coefficients.
std::vector<long long> cyclotomic_poly(int n);

// Element of (1/2) Z[x] / (x^n - 1), the ring where every closed-form
// iterated integral of the omega' family lives: letter periods are
// +-x^m and the shuffle fold only ever multiplies by +-x^m and halves.
// Coefficients are stored doubled so all arithmetic is in int64.
//
// Zero testing reduces modulo the cyclotomic polynomial Phi_n, i.e. it
// decides exactly whether the element evaluates to 0 at zeta = e^{2pi i/n}.
class CycElem {
public:
    CycElem() = default;
    explicit CycElem(int n) : n_(n), twice_(n, 0) {}

    static CycElem monomial(int n, long exponent, long long twice_coeff);

    int modulus() const { return n_; }
    bool compatible(const CycElem& o) const { return n_ == o.n_; }

    CycElem& operator+=(const CycElem& o);
    CycElem& operator-=(const CycElem& o);
    friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
    friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }

    // multiply by s * x^e (cyclic shift); s in {+1, -1} times any int64
    CycElem shifted_scaled(long exponent, long long scale) const;

    void add_monomial(long exponent, long long twice_coeff);

    // all stored coefficients zero (no reduction applied)
    bool is_literal_zero() const;

    // exact: divisible by Phi_n, i.e. evaluates to 0 at the primitive root
    bool is_zero() const;

    // numeric value at zeta = e^{2 pi i/n}
    cplx eval() const;

    const std::vector<long long>& twice_coefficients() const { return twice_; }

private:
    int n_ = 0;
    std::vector<long long> twice_; // twice_[m] = 2 * coefficient of x^m
};

} // namespace hvol
