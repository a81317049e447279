#pragma once

#include <utility>
#include <vector>

#include "gt/shape.hpp"

namespace gt {

// Sparse exponent vector: sorted (flat variable, exponent > 0) pairs.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<int, int>> e) : e_(std::move(e)) {}

    static Monomial one() { return Monomial(); }
    static Monomial var(int flatVar, int exp = 1) {
        Monomial m;
        if (exp > 0) m.e_.push_back({flatVar, exp});
        return m;
    }

    const std::vector<std::pair<int, int>>& exps() const { return e_; }
    bool is_one() const { return e_.empty(); }

    int degree() const {
        int d = 0;
        for (auto& [v, e] : e_) d += e;
        return d;
    }

    int exp(int flatVar) const {
        for (auto& [v, e] : e_)
            if (v == flatVar) return e;
        return 0;
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        auto a = e_.begin(), b = o.e_.begin();
        while (a != e_.end() || b != o.e_.end()) {
            if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
                r.e_.push_back(*a++);
            } else if (a == e_.end() || b->first < a->first) {
                r.e_.push_back(*b++);
            } else {
                r.e_.push_back({a->first, a->second + b->second});
                ++a, ++b;
            }
        }
        return r;
    }

    // exponent decremented at flatVar; exponent must be positive
    Monomial div_var(int flatVar) const {
        Monomial r;
        for (auto& [v, e] : e_) {
            if (v == flatVar) {
                if (e > 1) r.e_.push_back({v, e - 1});
            } else {
                r.e_.push_back({v, e});
            }
        }
        return r;
    }

    Monomial permuted(const Perm& p) const {
        std::vector<std::pair<int, int>> out;
        out.reserve(e_.size());
        for (auto& [v, e] : e_) out.push_back({p[v], e});
        std::sort(out.begin(), out.end());
        return Monomial(std::move(out));
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }

private:
    std::vector<std::pair<int, int>> e_;
};

// Graded lexicographic: higher total degree first; on ties the monomial with
// the larger exponent at the earliest flat variable is greater.
inline int mono_cmp_grlex(const Monomial& x, const Monomial& y) {
    int dx = x.degree(), dy = y.degree();
    if (dx != dy) return dx < dy ? -1 : 1;
    auto a = x.exps().begin(), ae = x.exps().end();
    auto b = y.exps().begin(), be = y.exps().end();
    while (a != ae || b != be) {
        int va = (a == ae) ? INT32_MAX : a->first;
        int vb = (b == be) ? INT32_MAX : b->first;
        if (va < vb) return 1;   // x has positive exponent at an earlier var
        if (vb < va) return -1;
        if (a->second != b->second) return a->second < b->second ? -1 : 1;
        ++a, ++b;
    }
    return 0;
}

struct MonoGrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_cmp_grlex(a, b) > 0; }
};

}  // namespace gt
