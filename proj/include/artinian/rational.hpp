// Exact rationals (GMP) and the handful of helpers the rest of the library needs.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>

#include "artinian/errors.hpp"

namespace artinian {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

/// Parses `[-]digits[/digits]`. The denominator must be positive.
inline Rational parse_rational(std::string_view text) {
    std::size_t i = 0;
    auto fail = [&](const char* why) { throw ParseError(why, i); };
    while (i < text.size() && text[i] == ' ') ++i;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    auto digits = [&]() {
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (start == i) fail("expected digits");
        return Integer(std::string(text.substr(start, i - start)));
    };
    Integer num = digits();
    Integer den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = digits();
        if (den == 0) fail("zero denominator");
    }
    while (i < text.size() && text[i] == ' ') ++i;
    if (i != text.size()) fail("trailing characters in rational");
    Rational q(negative ? Integer(-num) : num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational b = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return result;
}

inline Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/// Natural log of |q| for q != 0, robust for numbers far outside double range.
inline double log_abs(const Rational& q) {
    long num_exp = 0;
    long den_exp = 0;
    double num = mpz_get_d_2exp(&num_exp, q.get_num_mpz_t());
    double den = mpz_get_d_2exp(&den_exp, q.get_den_mpz_t());
    return std::log(std::fabs(num)) - std::log(den) +
           static_cast<double>(num_exp - den_exp) * std::log(2.0);
}

/// The rational with the smallest denominator in the closed interval [lo, hi] (Stern-Brocot).
inline Rational simplest_between(Rational lo, Rational hi) {
    if (lo > hi) std::swap(lo, hi);
    if (lo <= 0 && hi >= 0) return Rational(0);
    if (hi < 0) return -simplest_between(-hi, -lo);
    // 0 < lo <= hi: continued-fraction descent.
    Integer fl = floor(lo);
    if (Rational(fl) == lo) return lo;
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    Rational frac_lo = lo - fl;
    Rational frac_hi = hi - fl;
    Rational inner = simplest_between(1 / frac_hi, 1 / frac_lo);
    Rational result = Rational(fl) + 1 / inner;
    result.canonicalize();
    return result;
}

}  // namespace artinian
