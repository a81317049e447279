#include "gt/fraction.hpp"

#include <algorithm>

namespace gt {

StructuredFraction::StructuredFraction(Polynomial num, std::vector<LinearForm> den)
    : num_(std::move(num)), den_(std::move(den)) {
    for (auto& l : den_) require_same_shape(num_.shape(), l.shape(), "fraction construction");
    canonicalize_factors();
    for (auto& l : den_)
        if (!l.is_difference()) throw InternalError("denominator factor is not a difference form");
    reduce();
}

// Normalize every factor to leading coefficient +1 (sign goes to the
// numerator) and sort the multiset.
void StructuredFraction::canonicalize_factors() {
    int flips = 0;
    for (auto& l : den_) {
        if (l.coeff(l.lead_var()) < 0) {
            l = l.negated();
            ++flips;
        }
    }
    if (flips % 2) num_ = -num_;
    std::sort(den_.begin(), den_.end(),
              [](const LinearForm& a, const LinearForm& b) { return LinearForm::cmp(a, b) < 0; });
}

void StructuredFraction::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    // fast sound rejection: if the numerator is nonzero at a point where the
    // factor vanishes, the factor cannot divide it
    auto cannot_divide = [&](const LinearForm& l) {
        const int n = num_.shape().size();
        Point p(num_.shape());
        for (int i = 0; i < n; ++i) p[i] = Rational(97 * i + 31);
        int a = l.coeffs()[0].first, b = l.coeffs()[1].first;
        p[a] = p[b] - l.constant();  // l = x_a - x_b + c vanishes
        return num_.eval(p) != 0;
    };
    bool changed = true;
    while (changed && !den_.empty()) {
        changed = false;
        for (std::size_t i = 0; i < den_.size(); ++i) {
            if (cannot_divide(den_[i])) continue;
            if (auto q = exact_divide(num_, den_[i])) {
                num_ = std::move(*q);
                den_.erase(den_.begin() + i);
                changed = true;
                break;
            }
        }
    }
}

StructuredFraction StructuredFraction::operator-() const {
    StructuredFraction r = *this;
    r.num_ = -r.num_;
    return r;
}

StructuredFraction StructuredFraction::operator+(const StructuredFraction& o) const {
    require_same_shape(shape(), o.shape(), "fraction addition");
    // common denominator = multiset max of the two factor lists
    std::vector<LinearForm> common;
    Polynomial numA = num_, numB = o.num_;
    std::size_t i = 0, j = 0;
    auto push_scaled = [](Polynomial& other, const LinearForm& l) { other = other * to_polynomial(l); };
    while (i < den_.size() || j < o.den_.size()) {
        int c;
        if (i == den_.size())
            c = 1;
        else if (j == o.den_.size())
            c = -1;
        else
            c = LinearForm::cmp(den_[i], o.den_[j]);
        if (c < 0) {
            common.push_back(den_[i]);
            push_scaled(numB, den_[i]);
            ++i;
        } else if (c > 0) {
            common.push_back(o.den_[j]);
            push_scaled(numA, o.den_[j]);
            ++j;
        } else {
            common.push_back(den_[i]);
            ++i, ++j;
        }
    }
    return StructuredFraction(numA + numB, std::move(common));
}

StructuredFraction StructuredFraction::operator-(const StructuredFraction& o) const {
    return *this + (-o);
}

StructuredFraction StructuredFraction::operator*(const StructuredFraction& o) const {
    require_same_shape(shape(), o.shape(), "fraction multiplication");
    std::vector<LinearForm> den = den_;
    den.insert(den.end(), o.den_.begin(), o.den_.end());
    return StructuredFraction(num_ * o.num_, std::move(den));
}

StructuredFraction StructuredFraction::operator*(const Polynomial& p) const {
    return StructuredFraction(num_ * p, den_);
}

StructuredFraction StructuredFraction::operator*(const Rational& c) const {
    if (c == 0) return StructuredFraction::zero(shape());
    StructuredFraction r = *this;
    r.num_ = r.num_ * c;
    return r;
}

StructuredFraction StructuredFraction::permuted(const Perm& p) const {
    std::vector<LinearForm> den;
    den.reserve(den_.size());
    for (auto& l : den_) den.push_back(l.permuted(p));
    return StructuredFraction(num_.permuted(p), std::move(den));
}

StructuredFraction StructuredFraction::translated(const Point& v) const {
    std::vector<LinearForm> den;
    den.reserve(den_.size());
    for (auto& l : den_) den.push_back(l.translated(v));
    return StructuredFraction(num_.translated(v), std::move(den));
}

bool StructuredFraction::regular_at(const Point& v) const {
    for (auto& l : den_)
        if (l.eval(v) == 0) return false;
    return true;
}

std::optional<Rational> StructuredFraction::eval(const Point& v) const {
    Rational den = 1;
    for (auto& l : den_) {
        Rational d = l.eval(v);
        if (d == 0) return std::nullopt;
        den *= d;
    }
    return num_.eval(v) / den;
}

Polynomial StructuredFraction::denominator_product() const {
    Polynomial p = Polynomial::constant(shape(), 1);
    for (auto& l : den_) p = p * to_polynomial(l);
    return p;
}

bool StructuredFraction::equals(const StructuredFraction& o) const {
    if (shape() != o.shape()) return false;
    return num_ * o.denominator_product() == o.num_ * denominator_product();
}

Polynomial StructuredFraction::jet_at_zero(int maxDeg) const {
    const Shape& s = shape();
    auto mul_trunc = [&](const Polynomial& a, const Polynomial& b) {
        Polynomial r(s);
        for (auto& [ma, ca] : a.terms()) {
            const int da = ma.degree();
            for (auto& [mb, cb] : b.terms()) {
                if (da + mb.degree() > maxDeg) continue;
                r.add_term(ma.times(mb), ca * cb);
            }
        }
        return r;
    };
    Polynomial jet = num_.truncated(maxDeg);
    Point zero(s);
    for (auto& l : den_) {
        Rational c = l.eval(zero);
        if (c == 0) throw PoleError("jet expansion at a pole");
        // 1/l = (1/c) sum_k (-u)^k with u = l/c - 1 homogeneous linear
        Polynomial u = to_polynomial(l) * (Rational(1) / c);
        u.add_term(Monomial::one(), Rational(-1));
        Polynomial series = Polynomial::constant(s, 1);
        Polynomial upow = Polynomial::constant(s, 1);
        for (int k = 1; k <= maxDeg; ++k) {
            upow = mul_trunc(upow, u);
            if (upow.is_zero()) break;
            series += k % 2 ? -upow : upow;
        }
        jet = mul_trunc(jet, series) * (Rational(1) / c);
    }
    return jet;
}

}  // namespace gt
