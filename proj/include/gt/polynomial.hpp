#pragma once

#include <map>
#include <optional>
#include <string>

#include "gt/linear_form.hpp"
#include "gt/monomial.hpp"
#include "gt/point.hpp"

namespace gt {

// Sparse multivariate polynomial with exact rational coefficients.
// Zero coefficients are never stored; the degree of 0 is reported as the
// "minus infinity" sentinel std::nullopt.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonoGrlexGreater>;

    Polynomial() = default;
    explicit Polynomial(Shape s) : shape_(std::move(s)) {}

    static Polynomial constant(const Shape& s, const Rational& c);
    static Polynomial variable(const Shape& s, int k, int i);
    static Polynomial variable_flat(const Shape& s, int flatVar);
    static Polynomial monomial(const Shape& s, Monomial m, Rational c);

    const Shape& shape() const { return shape_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::optional<int> degree() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    Rational constant_term() const;
    Rational coeff(const Monomial& m) const;
    int num_terms() const { return static_cast<int>(terms_.size()); }

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    bool operator==(const Polynomial& o) const { return shape_ == o.shape_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(int n) const;

    Rational eval(const Point& v) const;
    // terms of total degree <= maxDeg
    Polynomial truncated(int maxDeg) const;
    // f(x + v)
    Polynomial translated(const Point& v) const;
    Polynomial permuted(const Perm& p) const;
    Polynomial derivative(int flatVar) const;
    // substitute x_a -> replacement (a polynomial)
    Polynomial substituted(int flatVar, const Polynomial& replacement) const;

private:
    Shape shape_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

Polynomial to_polynomial(const LinearForm& l);

// Theta(f) applied to g: each x_a in f becomes d/dx_a.
Polynomial theta_apply(const Polynomial& f, const Polynomial& g);

// Apolarity pairing (f, g) = Theta(f)(g)(0) = sum_m f_m g_m m!.
Rational theta_pair(const Polynomial& f, const Polynomial& g);

// Quotient p / l when the division is exact, std::nullopt otherwise.
std::optional<Polynomial> exact_divide(const Polynomial& p, const LinearForm& l);

}  // namespace gt
