#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gt/errors.hpp"

namespace gt {

// Block shape mu = (mu_1, ..., mu_r).  Variables are indexed by pairs
// (k, i) with 1 <= k <= r and 1 <= i <= mu_k, flattened block-major to
// 0-based indices for internal use.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<int> mu) : mu_(std::move(mu)) {
        offset_.reserve(mu_.size() + 1);
        offset_.push_back(0);
        for (std::size_t k = 0; k < mu_.size(); ++k) {
            if (mu_[k] < 1) throw ShapeError("block sizes must be positive");
            offset_.push_back(offset_.back() + mu_[k]);
        }
    }

    int blocks() const { return static_cast<int>(mu_.size()); }
    int size() const { return offset_.empty() ? 0 : offset_.back(); }
    int block_size(int k) const { return mu_.at(k - 1); }
    const std::vector<int>& mu() const { return mu_; }

    bool contains(int k, int i) const {
        return k >= 1 && k <= blocks() && i >= 1 && i <= mu_[k - 1];
    }

    int flat(int k, int i) const {
        if (!contains(k, i))
            throw OutOfShapeError("variable x[" + std::to_string(k) + "," + std::to_string(i) +
                                  "] outside shape");
        return offset_[k - 1] + (i - 1);
    }

    // flat index -> 1-based (k, i)
    std::pair<int, int> var(int flatIndex) const {
        for (int k = 1; k <= blocks(); ++k)
            if (flatIndex < offset_[k]) return {k, flatIndex - offset_[k - 1] + 1};
        throw OutOfShapeError("flat index out of range");
    }

    int block_of(int flatIndex) const { return var(flatIndex).first; }

    // flat range [begin, end) of block k
    std::pair<int, int> block_range(int k) const {
        if (k < 1 || k > blocks()) throw OutOfShapeError("block out of range");
        return {offset_[k - 1], offset_[k]};
    }

    bool operator==(const Shape& o) const { return mu_ == o.mu_; }
    bool operator!=(const Shape& o) const { return !(*this == o); }

    std::string str() const {
        std::string s = "(";
        for (std::size_t k = 0; k < mu_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(mu_[k]);
        }
        return s + ")";
    }

private:
    std::vector<int> mu_;
    std::vector<int> offset_;
};

inline void require_same_shape(const Shape& a, const Shape& b, const char* what) {
    if (a != b) throw ShapeError(std::string(what) + ": shapes " + a.str() + " and " + b.str() + " differ");
}

// A permutation of the flat variable index set; p[i] is the image of i.
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// (a*b)[i] = a[b[i]]  (apply b first)
inline Perm perm_mul(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

inline Perm perm_inv(const Perm& a) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
    return r;
}

inline Perm perm_transposition(int n, int a, int b) {
    Perm p = perm_identity(n);
    std::swap(p[a], p[b]);
    return p;
}

}  // namespace gt
