#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hvol {

// bit vector over GF(2)
struct F2Vec {
    int n = 0;
    std::vector<uint64_t> w;

    F2Vec() = default;
    explicit F2Vec(int n_) : n(n_), w((n_ + 63) / 64, 0) {}

    bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        const uint64_t m = uint64_t(1) << (i & 63);
        if (v) w[i >> 6] |= m;
        else w[i >> 6] &= ~m;
    }
    void flip(int i) { w[i >> 6] ^= uint64_t(1) << (i & 63); }

    F2Vec& operator^=(const F2Vec& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
        return *this;
    }
    friend F2Vec operator^(F2Vec a, const F2Vec& b) { return a ^= b; }

    bool any() const {
        for (uint64_t x : w)
            if (x) return true;
        return false;
    }
    bool operator==(const F2Vec& o) const { return n == o.n && w == o.w; }

    // parity of the AND with another vector
    bool dot(const F2Vec& o) const {
        uint64_t acc = 0;
        for (size_t k = 0; k < w.size(); ++k) acc ^= w[k] & o.w[k];
        return __builtin_parityll(acc);
    }
};

// dense bit-packed GF(2) matrix, row major
struct F2Matrix {
    int rows = 0, cols = 0;
    std::vector<F2Vec> r;

    F2Matrix() = default;
    F2Matrix(int rows_, int cols_) : rows(rows_), cols(cols_), r(rows_, F2Vec(cols_)) {}

    static F2Matrix identity(int n) {
        F2Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.r[i].set(i, true);
        return m;
    }

    bool get(int i, int j) const { return r[i].get(j); }
    void set(int i, int j, bool v) { r[i].set(j, v); }

    F2Matrix transpose() const {
        F2Matrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (get(i, j)) t.set(j, i, true);
        return t;
    }

    // matrix * column vector
    F2Vec apply(const F2Vec& v) const {
        if (v.n != cols) throw std::invalid_argument("F2Matrix::apply: size mismatch");
        F2Vec out(rows);
        for (int i = 0; i < rows; ++i) out.set(i, r[i].dot(v));
        return out;
    }

    F2Matrix mul(const F2Matrix& o) const {
        if (cols != o.rows) throw std::invalid_argument("F2Matrix::mul: shape mismatch");
        F2Matrix out(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k)
                if (get(i, k)) out.r[i] ^= o.r[k];
        return out;
    }

    bool operator==(const F2Matrix& o) const {
        return rows == o.rows && cols == o.cols && r == o.r;
    }
};

// Row echelon system with recorded pivots; serves rank, kernel, membership
// and linear solves over GF(2).
class F2Rref {
public:
    explicit F2Rref(F2Matrix m);

    int rank() const { return static_cast<int>(pivots_.size()); }
    const std::vector<int>& pivot_columns() const { return pivots_; }

    // reduce a row vector against the echelon rows
    F2Vec reduce(F2Vec v) const;
    bool in_row_space(const F2Vec& v) const { return !reduce(v).any(); }

    // kernel basis of the original matrix (solutions of M x = 0)
    std::vector<F2Vec> kernel() const;

    // one solution x of M x = b, if consistent (free variables set to 0)
    std::optional<F2Vec> solve(const F2Vec& b) const;

private:
    F2Matrix m_;                    // echelonized rows
    std::vector<int> pivots_;       // pivot column per echelon row
    std::vector<F2Vec> rhs_track_;  // row operations applied to identity
    int orig_rows_;
};

} // namespace hvol
