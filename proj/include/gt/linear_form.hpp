#pragma once

#include <algorithm>
#include <vector>

#include "gt/point.hpp"

namespace gt {

// Affine-linear form sum_a c_a x_a + c0.  Roots of the implemented systems
// are differences x_a - x_b (constant 0); translation moves the constant.
class LinearForm {
public:
    LinearForm() = default;
    LinearForm(Shape s, std::vector<std::pair<int, Rational>> coef, Rational constant)
        : shape_(std::move(s)), coef_(std::move(coef)), const_(std::move(constant)) {
        std::sort(coef_.begin(), coef_.end(),
                  [](auto& x, auto& y) { return x.first < y.first; });
        coef_.erase(std::remove_if(coef_.begin(), coef_.end(),
                                   [](auto& x) { return x.second == 0; }),
                    coef_.end());
    }

    // x_a - x_b
    static LinearForm root(const Shape& s, int flatA, int flatB) {
        return LinearForm(s, {{flatA, Rational(1)}, {flatB, Rational(-1)}}, Rational(0));
    }

    const Shape& shape() const { return shape_; }
    const std::vector<std::pair<int, Rational>>& coeffs() const { return coef_; }
    const Rational& constant() const { return const_; }
    bool is_zero() const { return coef_.empty() && const_ == 0; }
    bool is_constant() const { return coef_.empty(); }

    Rational coeff(int flatVar) const {
        for (auto& [v, c] : coef_)
            if (v == flatVar) return c;
        return Rational(0);
    }

    // smallest flat variable with nonzero coefficient (grlex-leading for linear forms)
    int lead_var() const { return coef_.empty() ? -1 : coef_.front().first; }

    bool is_difference() const {
        return coef_.size() == 2 && coef_[0].second == 1 && coef_[1].second == -1;
    }
    bool is_root() const { return is_difference() && const_ == 0; }

    Rational eval(const Point& v) const {
        require_same_shape(shape_, v.shape(), "linear form evaluation");
        Rational r = const_;
        for (auto& [a, c] : coef_) r += c * v[a];
        return r;
    }

    LinearForm permuted(const Perm& p) const {
        std::vector<std::pair<int, Rational>> out;
        out.reserve(coef_.size());
        for (auto& [v, c] : coef_) out.push_back({p[v], c});
        return LinearForm(shape_, std::move(out), const_);
    }

    // l(x + v)
    LinearForm translated(const Point& v) const {
        Rational c0 = const_;
        for (auto& [a, c] : coef_) c0 += c * v[a];
        return LinearForm(shape_, coef_, c0);
    }

    LinearForm negated() const {
        std::vector<std::pair<int, Rational>> out = coef_;
        for (auto& [v, c] : out) c = -c;
        return LinearForm(shape_, std::move(out), -const_);
    }

    bool operator==(const LinearForm& o) const {
        return shape_ == o.shape_ && coef_ == o.coef_ && const_ == o.const_;
    }

    // total order used to keep denominator multisets sorted
    static int cmp(const LinearForm& x, const LinearForm& y) {
        if (x.coef_ != y.coef_) return x.coef_ < y.coef_ ? -1 : 1;
        if (x.const_ != y.const_) return x.const_ < y.const_ ? -1 : 1;
        return 0;
    }

private:
    Shape shape_;
    std::vector<std::pair<int, Rational>> coef_;
    Rational const_;
};

}  // namespace gt
