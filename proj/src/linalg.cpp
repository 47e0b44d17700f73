#include "conformal/linalg.hpp"

#include <algorithm>

namespace conformal {

int rref(QMat& m) {
    if (m.empty()) return 0;
    const int rows = (int)m.size();
    const int cols = (int)m[0].size();
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        Rational inv = 1 / m[rank][c];
        for (int j = c; j < cols; ++j) m[rank][j] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    m.resize(rank);
    return rank;
}

std::vector<QVec> nullspace(const QMat& a, int ncols) {
    QMat m = a;
    for (auto& row : m) row.resize(ncols, rat(0));
    int rank = rref(m);
    std::vector<int> pivot_col(rank, -1);
    std::vector<bool> is_pivot(ncols, false);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < ncols; ++c)
            if (m[r][c] != 0) {
                pivot_col[r] = c;
                is_pivot[c] = true;
                break;
            }
    std::vector<QVec> basis;
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(ncols, rat(0));
        v[c] = rat(1);
        for (int r = 0; r < rank; ++r)
            if (pivot_col[r] >= 0) v[pivot_col[r]] = -m[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve(const QMat& a, const QVec& b) {
    const int rows = (int)a.size();
    const int cols = rows == 0 ? 0 : (int)a[0].size();
    QMat m(rows, QVec(cols + 1, rat(0)));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) m[r][c] = a[r][c];
        m[r][cols] = b[r];
    }
    int rank = rref(m);
    QVec x(cols, rat(0));
    for (int r = 0; r < rank; ++r) {
        int pc = -1;
        for (int c = 0; c <= cols; ++c)
            if (m[r][c] != 0) {
                pc = c;
                break;
            }
        if (pc == cols) return std::nullopt;   // 0 = nonzero
        if (pc >= 0) x[pc] = m[r][cols];
    }
    return x;
}

void SpanBuilder::reduce(QVec& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (v[pivots_[r]] == 0) continue;
        Rational f = v[pivots_[r]];
        for (int c = 0; c < ncols_; ++c) v[c] -= f * rows_[r][c];
    }
}

bool SpanBuilder::insert(QVec v) {
    v.resize(ncols_, rat(0));
    reduce(v);
    int pc = -1;
    for (int c = 0; c < ncols_; ++c)
        if (v[c] != 0) {
            pc = c;
            break;
        }
    if (pc < 0) return false;
    Rational inv = 1 / v[pc];
    for (int c = 0; c < ncols_; ++c) v[c] *= inv;
    // Back-substitute into the existing rows to stay in RREF.
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][pc] == 0) continue;
        Rational f = rows_[r][pc];
        for (int c = 0; c < ncols_; ++c) rows_[r][c] -= f * v[c];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pc);
    return true;
}

bool SpanBuilder::contains(QVec v) const {
    v.resize(ncols_, rat(0));
    reduce(v);
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

} // namespace conformal
