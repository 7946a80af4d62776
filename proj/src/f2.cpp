#include "hvol/f2.hpp"

namespace hvol {

F2Rref::F2Rref(F2Matrix m) : m_(std::move(m)), orig_rows_(m_.rows) {
    // track row operations so solve() can transform right-hand sides
    rhs_track_.assign(m_.rows, F2Vec(m_.rows));
    for (int i = 0; i < m_.rows; ++i) rhs_track_[i].set(i, true);

    int row = 0;
    for (int col = 0; col < m_.cols && row < m_.rows; ++col) {
        int piv = -1;
        for (int i = row; i < m_.rows; ++i)
            if (m_.get(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m_.r[piv], m_.r[row]);
        std::swap(rhs_track_[piv], rhs_track_[row]);
        for (int i = 0; i < m_.rows; ++i) {
            if (i == row || !m_.get(i, col)) continue;
            m_.r[i] ^= m_.r[row];
            rhs_track_[i] ^= rhs_track_[row];
        }
        pivots_.push_back(col);
        ++row;
    }
}

F2Vec F2Rref::reduce(F2Vec v) const {
    for (size_t k = 0; k < pivots_.size(); ++k)
        if (v.get(pivots_[k])) v ^= m_.r[k];
    return v;
}

std::vector<F2Vec> F2Rref::kernel() const {
    std::vector<bool> is_pivot(m_.cols, false);
    for (int c : pivots_) is_pivot[c] = true;
    std::vector<F2Vec> out;
    for (int free = 0; free < m_.cols; ++free) {
        if (is_pivot[free]) continue;
        F2Vec v(m_.cols);
        v.set(free, true);
        for (size_t k = 0; k < pivots_.size(); ++k)
            if (m_.r[k].get(free)) v.set(pivots_[k], true);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<F2Vec> F2Rref::solve(const F2Vec& b) const {
    if (b.n != orig_rows_) throw std::invalid_argument("F2Rref::solve: size mismatch");
    // transformed right-hand side under the recorded row operations
    F2Vec tb(m_.rows);
    for (int i = 0; i < m_.rows; ++i) tb.set(i, rhs_track_[i].dot(b));
    for (int i = rank(); i < m_.rows; ++i)
        if (tb.get(i)) return std::nullopt;
    F2Vec x(m_.cols);
    for (int k = 0; k < rank(); ++k) x.set(pivots_[k], tb.get(k));
    return x;
}

} // namespace hvol
