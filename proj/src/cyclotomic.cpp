#include "hvol/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hvol {

namespace {

// exact division of polynomials with integer coefficients, ascending order;
// divisor must be monic and must divide evenly
std::vector<long long> divide_exact(std::vector<long long> num,
                                    const std::vector<long long>& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    if (dn < dd) throw std::logic_error("divide_exact: degree underflow");
    std::vector<long long> quot(dn - dd + 1, 0);
    for (int k = dn - dd; k >= 0; --k) {
        const long long c = num[k + dd];
        quot[k] = c;
        for (int i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    for (long long c : num)
        if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
    return quot;
}

} // namespace

std::vector<long long> cyclotomic_poly(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: n >= 1 required");
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<long long> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) poly = divide_exact(std::move(poly), cyclotomic_poly(d));
    return poly;
}

CycElem CycElem::monomial(int n, long exponent, long long twice_coeff) {
    CycElem e(n);
    e.add_monomial(exponent, twice_coeff);
    return e;
}

void CycElem::add_monomial(long exponent, long long twice_coeff) {
    long r = exponent % n_;
    if (r < 0) r += n_;
    twice_[static_cast<size_t>(r)] += twice_coeff;
}

CycElem& CycElem::operator+=(const CycElem& o) {
    if (!compatible(o)) throw std::invalid_argument("CycElem: modulus mismatch");
    for (int i = 0; i < n_; ++i) twice_[i] += o.twice_[i];
    return *this;
}

CycElem& CycElem::operator-=(const CycElem& o) {
    if (!compatible(o)) throw std::invalid_argument("CycElem: modulus mismatch");
    for (int i = 0; i < n_; ++i) twice_[i] -= o.twice_[i];
    return *this;
}

CycElem CycElem::shifted_scaled(long exponent, long long scale) const {
    long r = exponent % n_;
    if (r < 0) r += n_;
    CycElem out(n_);
    for (int i = 0; i < n_; ++i)
        out.twice_[(i + r) % n_] = twice_[i] * scale;
    return out;
}

bool CycElem::is_literal_zero() const {
    for (long long c : twice_)
        if (c != 0) return false;
    return true;
}

bool CycElem::is_zero() const {
    // remainder of the stored polynomial modulo Phi_n; Phi_n is monic so
    // the doubled integer coefficients stay integers throughout
    const auto phi = cyclotomic_poly(n_);
    const int dd = static_cast<int>(phi.size()) - 1;
    std::vector<long long> rem = twice_;
    for (int k = n_ - 1; k >= dd; --k) {
        const long long c = rem[k];
        if (c == 0) continue;
        for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= c * phi[i];
    }
    for (int k = 0; k < dd; ++k)
        if (rem[k] != 0) return false;
    return true;
}

cplx CycElem::eval() const {
    cplx acc = 0.0;
    for (int m = 0; m < n_; ++m) {
        if (twice_[m] == 0) continue;
        const double theta = 2.0 * std::numbers::pi * m / n_;
        acc += 0.5 * static_cast<double>(twice_[m]) *
               cplx(std::cos(theta), std::sin(theta));
    }
    return acc;
}

} // namespace hvol
