#pragma once

#include <vector>

#include "gt/rational.hpp"
#include "gt/shape.hpp"

namespace gt {

// Rational point of the ambient space, dense over the flat variable set.
class Point {
public:
    Point() = default;
    explicit Point(Shape s) : shape_(std::move(s)), c_(shape_.size(), Rational(0)) {}
    Point(Shape s, std::vector<Rational> coords) : shape_(std::move(s)), c_(std::move(coords)) {
        if (static_cast<int>(c_.size()) != shape_.size())
            throw ShapeError("point has wrong number of coordinates");
    }

    const Shape& shape() const { return shape_; }
    const Rational& operator[](int flatVar) const { return c_.at(flatVar); }
    Rational& operator[](int flatVar) { return c_.at(flatVar); }
    const Rational& at(int k, int i) const { return c_.at(shape_.flat(k, i)); }
    const std::vector<Rational>& coords() const { return c_; }
    int size() const { return static_cast<int>(c_.size()); }

    bool is_zero() const {
        for (auto& q : c_)
            if (q != 0) return false;
        return true;
    }

    Point plus(const Point& o) const {
        require_same_shape(shape_, o.shape_, "point addition");
        Point r(shape_);
        for (int i = 0; i < size(); ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }

    // action: the coordinate at position p[i] of the result is c_[i]
    Point permuted(const Perm& p) const {
        Point r(shape_);
        for (int i = 0; i < size(); ++i) r.c_[p[i]] = c_[i];
        return r;
    }

    bool operator==(const Point& o) const { return shape_ == o.shape_ && c_ == o.c_; }
    bool operator!=(const Point& o) const { return !(*this == o); }

private:
    Shape shape_;
    std::vector<Rational> c_;
};

}  // namespace gt
