#include "gt/linalg.hpp"

#include "gt/errors.hpp"

namespace gt {

int rref(Mat& m, std::vector<int>* pivots) {
    if (pivots) pivots->clear();
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        if (pivots) pivots->push_back(static_cast<int>(c));
        ++r;
    }
    return static_cast<int>(r);
}

int mat_rank(Mat m) { return rref(m); }

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), mcols = b[0].size();
    Mat r(n, Vec(mcols, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t c = 0; c < mcols; ++c) r[i][c] += a[i][j] * b[j][c];
        }
    return r;
}

Mat mat_identity(int n) {
    Mat r(n, Vec(n, Rational(0)));
    for (int i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

Vec mat_apply(const Mat& a, const Vec& x) {
    Vec r(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (a[i][j] != 0) r[i] += a[i][j] * x[j];
    return r;
}

std::optional<Vec> solve(Mat a, Vec b) {
    const std::size_t rows = a.size();
    if (rows == 0) {
        for (auto& q : b)
            if (q != 0) return std::nullopt;
        return Vec{};
    }
    const std::size_t cols = a[0].size();
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<int> pivots;
    int rank = rref(a, &pivots);
    Vec x(cols, Rational(0));
    for (int i = 0; i < rank; ++i) {
        if (pivots[i] == static_cast<int>(cols)) return std::nullopt;  // 0 = 1 row
        x[pivots[i]] = a[i][cols];
    }
    return x;
}

Mat nullspace(Mat a, int cols) {
    std::vector<int> pivots;
    int rank = rref(a, &pivots);
    std::vector<char> isPivot(cols, 0);
    for (int p : pivots) isPivot[p] = 1;
    Mat basis;
    for (int j = 0; j < cols; ++j) {
        if (isPivot[j]) continue;
        Vec v(cols, Rational(0));
        v[j] = 1;
        for (int i = 0; i < rank; ++i) v[pivots[i]] = -a[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

void RowSpan::eliminate(Vec& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const int p = pivot_[i];
        if (v[p] == 0) continue;
        Rational f = v[p];
        for (int j = 0; j < width_; ++j) v[j] -= f * rows_[i][j];
    }
}

bool RowSpan::add(Vec v) {
    if (static_cast<int>(v.size()) != width_) throw InternalError("RowSpan width mismatch");
    eliminate(v);
    int p = -1;
    for (int j = 0; j < width_; ++j)
        if (v[j] != 0) {
            p = j;
            break;
        }
    if (p < 0) return false;
    Rational inv = 1 / v[p];
    for (int j = 0; j < width_; ++j) v[j] *= inv;
    // keep existing rows reduced against the new pivot
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][p] == 0) continue;
        Rational f = rows_[i][p];
        for (int j = 0; j < width_; ++j) rows_[i][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivot_.push_back(p);
    return true;
}

bool RowSpan::contains(Vec v) const {
    eliminate(v);
    for (auto& q : v)
        if (q != 0) return false;
    return true;
}

}  // namespace gt
