#pragma once

#include "conformal/rational.hpp"

#include <optional>
#include <vector>

namespace conformal {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

// In-place reduced row echelon form; returns the rank. First-nonzero pivoting
// keeps the result deterministic.
int rref(QMat& m);

// Basis of the right nullspace of A (rows = equations), deterministic order.
std::vector<QVec> nullspace(const QMat& a, int ncols);

// One exact solution of A x = b if consistent (free variables set to zero).
std::optional<QVec> solve(const QMat& a, const QVec& b);

// Incremental Q-span: keeps an RREF basis and reports whether each inserted
// vector enlarged the span.
class SpanBuilder {
public:
    explicit SpanBuilder(int ncols) : ncols_(ncols) {}
    bool insert(QVec v);          // true if independent from the current span
    bool contains(QVec v) const;
    int rank() const { return (int)rows_.size(); }

private:
    void reduce(QVec& v) const;
    int ncols_;
    std::vector<QVec> rows_;      // rref rows
    std::vector<int> pivots_;
};

} // namespace conformal
