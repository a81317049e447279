#pragma once

#include <optional>
#include <vector>

#include "gt/rational.hpp"

namespace gt {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// Reduced row echelon form in place; returns the rank.  `pivots`, when
// non-null, receives the pivot column of each nonzero row.
int rref(Mat& m, std::vector<int>* pivots = nullptr);

int mat_rank(Mat m);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_identity(int n);
Vec mat_apply(const Mat& a, const Vec& x);

// Any solution of A x = b, or nullopt when inconsistent.
std::optional<Vec> solve(Mat a, Vec b);

// Basis of the kernel of A (rows of the result).
Mat nullspace(Mat a, int cols);

// Incrementally maintained row space (rref rows).
class RowSpan {
public:
    explicit RowSpan(int width) : width_(width) {}
    // returns true when the vector enlarged the span
    bool add(Vec v);
    bool contains(Vec v) const;
    int dim() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }
    const Mat& basis() const { return rows_; }

private:
    void eliminate(Vec& v) const;
    int width_;
    Mat rows_;                 // rref form
    std::vector<int> pivot_;   // pivot column per row
};

}  // namespace gt
