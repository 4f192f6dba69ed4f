#pragma once

// exact integer and rational arithmetic used everywhere in the library;
// no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperchi {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// binomial coefficient as a bignum, C(n,k) = 0 outside 0 <= k <= n
inline Integer binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact at every step
    }
    return r;
}

// int64 binomial for face-count arithmetic; n is capped so that
// C(n, n/2) stays below 2^62
inline long long binom_ll(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (n > 61) throw std::invalid_argument("binom_ll: n > 61 would overflow, got n=" + std::to_string(n));
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
    }
    return r;
}

inline Integer pow2(long k) {
    if (k < 0) throw std::invalid_argument("pow2: negative exponent");
    return Integer(1) << k;
}

// division that must leave no remainder; a failure means an internal
// consistency bug, not bad user input
inline Integer exact_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::logic_error("exact_div: division by zero");
    Integer q = a / b;
    if (q * b != a)
        throw std::logic_error("exact_div: " + a.str() + " not divisible by " + b.str());
    return q;
}

// parses "n", "-n" or "n/d"; anything else is rejected
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    // cpp_int's string constructor takes "-3" but not "+3"
    auto to_int = [](const std::string& t) { return Integer(t[0] == '+' ? t.substr(1) : t); };
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(s)) throw std::invalid_argument("not an integer");
            return Rational(to_int(s));
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) throw std::invalid_argument("not a fraction");
        Integer n = to_int(num), d = to_int(den);
        if (d == 0) throw std::invalid_argument("zero denominator");
        if (d < 0) {  // cpp_rational insists on a positive denominator
            n = -n;
            d = -d;
        }
        return Rational(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: cannot parse \"" + s + "\"");
    }
}

// canonical "n" or "n/d" with d > 0 and gcd(n,d)=1 (cpp_rational keeps
// that normal form for us)
inline std::string rational_str(const Rational& r) {
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// JSON rendering always carries the denominator
inline std::string rational_str_json(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

}  // namespace hyperchi
