#pragma once

#include "hvol/genus.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hvol {

// Dense complex matrix, only ever g x g or g x 2g here; row major.
struct CMat {
    int rows = 0, cols = 0;
    std::vector<cplx> a;

    CMat() = default;
    CMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, cplx{}) {}

    cplx& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const cplx& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static CMat identity(int n) {
        CMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }
};

inline CMat mat_mul(const CMat& x, const CMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    CMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const cplx v = x.at(i, k);
            if (v == cplx{}) continue;
            for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

inline double mat_max_abs_diff(const CMat& x, const CMat& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("mat_max_abs_diff: shape mismatch");
    double m = 0.0;
    for (size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
    return m;
}

// Gaussian elimination with partial pivoting; throws on (numerical) singularity.
inline CMat lu_inverse(CMat m) {
    if (m.rows != m.cols) throw std::invalid_argument("lu_inverse: square required");
    const int n = m.rows;
    CMat inv = CMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m.at(r, col)) > std::abs(m.at(piv, col))) piv = r;
        if (std::abs(m.at(piv, col)) < 1e-14)
            throw std::runtime_error("lu_inverse: singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        const cplx d = m.at(col, col);
        for (int j = 0; j < n; ++j) {
            m.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const cplx f = m.at(r, col);
            if (f == cplx{}) continue;
            for (int j = 0; j < n; ++j) {
                m.at(r, j) -= f * m.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

// LDL^T on a real symmetric matrix; positive definite iff every pivot
// clears the threshold.
inline bool real_sym_positive_definite(std::vector<double> m, int n,
                                       double pivot_threshold = 1e-10) {
    for (int col = 0; col < n; ++col) {
        const double d = m[static_cast<size_t>(col) * n + col];
        if (!(d > pivot_threshold)) return false;
        for (int r = col + 1; r < n; ++r) {
            const double f = m[static_cast<size_t>(r) * n + col] / d;
            for (int j = col; j < n; ++j)
                m[static_cast<size_t>(r) * n + j] -= f * m[static_cast<size_t>(col) * n + j];
        }
    }
    return true;
}

} // namespace hvol
