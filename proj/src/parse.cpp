#include "gt/parse.hpp"

namespace gt {
namespace {

class Parser {
public:
    Parser(const std::string& src, const Shape& shape) : src_(src), shape_(shape) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != src_.size()) throw SyntaxError("trailing input", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }

    unsigned long parse_uint() {
        skip_ws();
        if (pos_ >= src_.size() || !isdigit(static_cast<unsigned char>(src_[pos_])))
            throw SyntaxError("expected digit", pos_);
        std::size_t start = pos_;
        while (pos_ < src_.size() && isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return std::stoul(src_.substr(start, pos_ - start));
    }

    Polynomial expr() {
        Polynomial p = term();
        while (true) {
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                return p;
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        while (accept('*')) p = p * factor();
        return p;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (accept('^')) {
            unsigned long e = parse_uint();
            if (e > 64) throw SyntaxError("exponent too large", pos_);
            b = b.pow(static_cast<int>(e));
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        if (pos_ >= src_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            expect(')');
            return p;
        }
        if (c == 'x') {
            ++pos_;
            expect('[');
            unsigned long k = parse_uint();
            expect(',');
            unsigned long i = parse_uint();
            expect(']');
            if (!shape_.contains(static_cast<int>(k), static_cast<int>(i)))
                throw OutOfShapeError("x[" + std::to_string(k) + "," + std::to_string(i) +
                                      "] outside shape " + shape_.str());
            return Polynomial::variable(shape_, static_cast<int>(k), static_cast<int>(i));
        }
        if (c == '-' || isdigit(static_cast<unsigned char>(c))) return rational_lit();
        throw SyntaxError("expected rational, variable or '('", pos_);
    }

    Polynomial rational_lit() {
        bool neg = accept('-');
        Rational num(static_cast<long>(parse_uint()));
        if (accept('/')) {
            unsigned long d = parse_uint();
            if (d == 0) throw SyntaxError("zero denominator", pos_);
            num /= Rational(static_cast<long>(d));
        }
        if (neg) num = -num;
        return Polynomial::constant(shape_, num);
    }

    const std::string& src_;
    const Shape& shape_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& src, const Shape& shape) {
    return Parser(src, shape).run();
}

std::string print_monomial(const Shape& shape, const Monomial& m) {
    std::string s;
    for (auto& [v, e] : m.exps()) {
        if (!s.empty()) s += "*";
        auto [k, i] = shape.var(v);
        s += "x[" + std::to_string(k) + "," + std::to_string(i) + "]";
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string print_poly(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        std::string mono = print_monomial(p.shape(), m);
        if (first) {
            // a leading negative sign must stay inside the rational literal
            if (mono.empty())
                out += rat_str(c);
            else if (c == 1)
                out += mono;
            else
                out += rat_str(c) + "*" + mono;
        } else {
            Rational a = c;
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
            if (mono.empty())
                out += rat_str(a);
            else if (a == 1)
                out += mono;
            else
                out += rat_str(a) + "*" + mono;
        }
        first = false;
    }
    return out;
}

}  // namespace gt
