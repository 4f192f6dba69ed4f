#pragma once

// degree-1 polynomials p + q*a over exact rationals. The indeterminate a
// is the Euler characteristic of the hyperbolizing surface, so these are
// the value type of every coefficient table in the library.

#include "hyperchi/numeric.hpp"

#include <string>

namespace hyperchi {

struct LinearPoly {
    Rational p{0};  // constant term
    Rational q{0};  // coefficient of a

    LinearPoly() = default;
    LinearPoly(Rational constant) : p(std::move(constant)) {}
    LinearPoly(Rational constant, Rational slope) : p(std::move(constant)), q(std::move(slope)) {}
    LinearPoly(long long constant) : p(constant) {}

    static LinearPoly var() { return LinearPoly(Rational(0), Rational(1)); }

    bool is_zero() const { return p == 0 && q == 0; }

    Rational operator()(const Rational& a) const { return p + q * a; }

    friend LinearPoly operator+(const LinearPoly& x, const LinearPoly& y) {
        return {x.p + y.p, x.q + y.q};
    }
    friend LinearPoly operator-(const LinearPoly& x, const LinearPoly& y) {
        return {x.p - y.p, x.q - y.q};
    }
    friend LinearPoly operator-(const LinearPoly& x) { return {-x.p, -x.q}; }
    friend LinearPoly operator*(const Rational& c, const LinearPoly& x) {
        return {c * x.p, c * x.q};
    }
    friend LinearPoly operator*(const LinearPoly& x, const Rational& c) { return c * x; }
    LinearPoly& operator+=(const LinearPoly& y) {
        p += y.p;
        q += y.q;
        return *this;
    }
    friend bool operator==(const LinearPoly& x, const LinearPoly& y) {
        return x.p == y.p && x.q == y.q;
    }
    friend bool operator!=(const LinearPoly& x, const LinearPoly& y) { return !(x == y); }

    // "0", "3/4", "-a", "2 - 3*a", "-4 + 6*a", "1/4*a"
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        if (p != 0) out = rational_str(p);
        if (q != 0) {
            std::string qa;
            Rational aq = q < 0 ? Rational(-q) : q;
            qa = (aq == 1) ? "a" : rational_str(aq) + "*a";
            if (out.empty())
                out = (q < 0 ? "-" : "") + qa;
            else
                out += (q < 0 ? " - " : " + ") + qa;
        }
        return out;
    }
};

// certificate that f(a) >= 0 for every a <= a0: a linear function is
// nonnegative on a left half-line iff its slope is <= 0 and its value at
// the right endpoint is >= 0
inline bool nonneg_on_halfline(const LinearPoly& f, const Rational& a0) {
    return f.q <= 0 && f(a0) >= 0;
}

// f <= g on all a <= a0
inline bool le_on_halfline(const LinearPoly& f, const LinearPoly& g, const Rational& a0) {
    return nonneg_on_halfline(g - f, a0);
}

}  // namespace hyperchi
