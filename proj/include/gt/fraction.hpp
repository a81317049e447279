#pragma once

#include <optional>
#include <vector>

#include "gt/polynomial.hpp"

namespace gt {

// Polynomial numerator over a multiset of difference linear forms.  The
// denominator factors of user-facing fractions are roots x_a - x_b; translated
// fractions (internal to the evaluated operators) carry an additive constant.
// Fractions are kept reduced: no denominator factor divides the numerator.
class StructuredFraction {
public:
    StructuredFraction() = default;
    explicit StructuredFraction(Polynomial num) : num_(std::move(num)) {}
    StructuredFraction(Polynomial num, std::vector<LinearForm> den);

    static StructuredFraction zero(const Shape& s) { return StructuredFraction(Polynomial(s)); }
    static StructuredFraction constant(const Shape& s, const Rational& c) {
        return StructuredFraction(Polynomial::constant(s, c));
    }

    const Polynomial& numerator() const { return num_; }
    const std::vector<LinearForm>& denominator() const { return den_; }
    const Shape& shape() const { return num_.shape(); }
    bool is_polynomial() const { return den_.empty(); }
    bool is_zero() const { return num_.is_zero(); }

    StructuredFraction operator-() const;
    StructuredFraction operator+(const StructuredFraction& o) const;
    StructuredFraction operator-(const StructuredFraction& o) const;
    StructuredFraction operator*(const StructuredFraction& o) const;
    StructuredFraction operator*(const Polynomial& p) const;
    StructuredFraction operator*(const Rational& c) const;

    StructuredFraction permuted(const Perm& p) const;
    StructuredFraction translated(const Point& v) const;

    bool regular_at(const Point& v) const;
    // nullopt when a denominator factor vanishes at v (a pole)
    std::optional<Rational> eval(const Point& v) const;

    Polynomial denominator_product() const;
    // exact equality as rational functions
    bool equals(const StructuredFraction& o) const;

    // Taylor polynomial at 0 up to total degree maxDeg (exact geometric
    // expansion of the denominator factors); requires regularity at 0
    Polynomial jet_at_zero(int maxDeg) const;

private:
    void canonicalize_factors();
    void reduce();

    Polynomial num_;
    std::vector<LinearForm> den_;
};

}  // namespace gt
