#include "gt/polynomial.hpp"

namespace gt {

Polynomial Polynomial::constant(const Shape& s, const Rational& c) {
    Polynomial p(s);
    p.add_term(Monomial::one(), c);
    return p;
}

Polynomial Polynomial::variable(const Shape& s, int k, int i) {
    return variable_flat(s, s.flat(k, i));
}

Polynomial Polynomial::variable_flat(const Shape& s, int flatVar) {
    if (flatVar < 0 || flatVar >= s.size()) throw OutOfShapeError("variable index out of range");
    Polynomial p(s);
    p.add_term(Monomial::var(flatVar), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(const Shape& s, Monomial m, Rational c) {
    Polynomial p(s);
    p.add_term(m, c);
    return p;
}

std::optional<int> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;  // deg 0 = "minus infinity"
    return terms_.begin()->first.degree();    // grlex-descending order
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(shape_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_shape(shape_, o.shape_, "polynomial addition");
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_shape(shape_, o.shape_, "polynomial subtraction");
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_shape(shape_, o.shape_, "polynomial multiplication");
    Polynomial r(shape_);
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(shape_);
    if (c == 0) return r;
    for (auto& [m, q] : terms_) r.terms_.emplace(m, q * c);
    return r;
}

Polynomial Polynomial::pow(int n) const {
    Polynomial r = Polynomial::constant(shape_, 1);
    for (int i = 0; i < n; ++i) r = r * (*this);
    return r;
}

Rational Polynomial::eval(const Point& v) const {
    require_same_shape(shape_, v.shape(), "polynomial evaluation");
    Rational total = 0;
    for (auto& [m, c] : terms_) {
        Rational t = c;
        for (auto& [var, e] : m.exps())
            for (int j = 0; j < e; ++j) t *= v[var];
        total += t;
    }
    return total;
}

Polynomial Polynomial::truncated(int maxDeg) const {
    Polynomial r(shape_);
    for (auto& [m, c] : terms_)
        if (m.degree() <= maxDeg) r.terms_.emplace(m, c);
    return r;
}

Polynomial Polynomial::translated(const Point& v) const {
    require_same_shape(shape_, v.shape(), "polynomial translation");
    // substitute one variable at a time; only variables with nonzero shift matter
    Polynomial r = *this;
    for (int a = 0; a < shape_.size(); ++a) {
        if (v[a] == 0) continue;
        Polynomial next(shape_);
        for (auto& [m, c] : r.terms_) {
            int e = m.exp(a);
            if (e == 0) {
                next.add_term(m, c);
                continue;
            }
            // (x_a + t)^e expanded against the rest of the monomial
            Monomial rest;
            for (auto& [var, ex] : m.exps())
                if (var != a) rest = rest.times(Monomial::var(var, ex));
            Rational binom = 1;  // C(e, j)
            Rational tpow = 1;   // v[a]^j
            for (int j = 0; j <= e; ++j) {
                Monomial mm = rest;
                if (e - j > 0) mm = mm.times(Monomial::var(a, e - j));
                next.add_term(mm, c * binom * tpow);
                binom *= e - j;
                binom /= j + 1;
                tpow *= v[a];
            }
        }
        r = std::move(next);
    }
    return r;
}

Polynomial Polynomial::permuted(const Perm& p) const {
    Polynomial r(shape_);
    for (auto& [m, c] : terms_) r.add_term(m.permuted(p), c);
    return r;
}

Polynomial Polynomial::derivative(int flatVar) const {
    Polynomial r(shape_);
    for (auto& [m, c] : terms_) {
        int e = m.exp(flatVar);
        if (e == 0) continue;
        r.add_term(m.div_var(flatVar), c * e);
    }
    return r;
}

Polynomial Polynomial::substituted(int flatVar, const Polynomial& replacement) const {
    require_same_shape(shape_, replacement.shape(), "substitution");
    Polynomial r(shape_);
    for (auto& [m, c] : terms_) {
        int e = m.exp(flatVar);
        Monomial rest;
        for (auto& [var, ex] : m.exps())
            if (var != flatVar) rest = rest.times(Monomial::var(var, ex));
        Polynomial t = Polynomial::monomial(shape_, rest, c);
        if (e > 0) t = t * replacement.pow(e);
        r += t;
    }
    return r;
}

Polynomial to_polynomial(const LinearForm& l) {
    Polynomial p(l.shape());
    for (auto& [v, c] : l.coeffs()) p.add_term(Monomial::var(v), c);
    p.add_term(Monomial::one(), l.constant());
    return p;
}

Polynomial theta_apply(const Polynomial& f, const Polynomial& g) {
    require_same_shape(f.shape(), g.shape(), "theta application");
    Polynomial r(f.shape());
    for (auto& [m, c] : f.terms()) {
        Polynomial t = g;
        for (auto& [var, e] : m.exps())
            for (int j = 0; j < e && !t.is_zero(); ++j) t = t.derivative(var);
        if (!t.is_zero()) r += t * c;
    }
    return r;
}

Rational theta_pair(const Polynomial& f, const Polynomial& g) {
    require_same_shape(f.shape(), g.shape(), "theta pairing");
    // (f, g) = sum over common monomials of f_m g_m prod_e e!
    const Polynomial::TermMap& small = f.num_terms() <= g.num_terms() ? f.terms() : g.terms();
    const Polynomial& other = f.num_terms() <= g.num_terms() ? g : f;
    Rational total = 0;
    for (auto& [m, c] : small) {
        Rational oc = other.coeff(m);
        if (oc == 0) continue;
        Rational fac = 1;
        for (auto& [var, e] : m.exps()) fac *= rat_factorial(e);
        total += c * oc * fac;
    }
    return total;
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const LinearForm& l) {
    if (l.is_zero()) throw InternalError("division by the zero linear form");
    require_same_shape(p.shape(), l.shape(), "exact division");
    if (l.is_constant()) return p * (Rational(1) / l.constant());
    const int lead = l.lead_var();
    const Rational leadC = l.coeff(lead);
    const Polynomial lp = to_polynomial(l);
    Polynomial rem = p;
    Polynomial q(p.shape());
    // single-divisor reduction: the grlex-leading term of l is leadC * x_lead
    while (!rem.is_zero()) {
        auto& [m, c] = *rem.terms().begin();
        if (m.exp(lead) == 0) return std::nullopt;  // leading term not divisible
        Monomial qm = m.div_var(lead);
        Rational qc = c / leadC;
        q.add_term(qm, qc);
        rem -= Polynomial::monomial(p.shape(), qm, qc) * lp;
    }
    return q;
}

}  // namespace gt
