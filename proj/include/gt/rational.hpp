#pragma once

#include <gmpxx.h>

#include <string>

#include "gt/errors.hpp"

namespace gt {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rational& q) { return q.get_str(); }

// Accepts "p" or "p/q" with optional leading '-'.
inline Rational rat_parse(const std::string& s) {
    if (s.empty()) throw SyntaxError("empty rational literal", 0);
    std::size_t i = 0;
    if (s[i] == '-') ++i;
    bool digits = false, slash = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else if (s[i] >= '0' && s[i] <= '9') {
            digits = true;
        } else {
            throw SyntaxError("bad rational literal '" + s + "'", i);
        }
    }
    if (!digits) throw SyntaxError("bad rational literal '" + s + "'", s.size());
    Rational q(s);
    if (slash && q.get_den() == 0) throw SyntaxError("zero denominator in '" + s + "'", s.size());
    q.canonicalize();
    return q;
}

inline Rational rat_factorial(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace gt
