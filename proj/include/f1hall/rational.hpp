#pragma once

// Exact rational arithmetic used everywhere in the library.
//
// All computations in f1hall are exact: coefficients are arbitrary-precision
// rationals (Boost.Multiprecision, header-only), kept reduced with positive
// denominator by the backend.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace f1hall {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& r) { return numerator(r); }
inline BigInt rational_den(const Rational& r) { return denominator(r); }

// "3", "-7/4"; denominators are always positive, numerators carry the sign.
inline std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    BigInt n(num), d(den);
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(n, d);
}

inline Rational rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    return rational_from_strings(text.substr(0, slash), text.substr(slash + 1));
}

inline BigInt factorial(std::int64_t n) {
    BigInt f = 1;
    for (std::int64_t i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    BigInt b = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

// Exponent arithmetic guard: desk-scale exponents never approach the 64-bit
// bound, so any overflow is a logic error worth a hard stop.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("exponent overflow in exact arithmetic");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("exponent overflow in exact arithmetic");
    return r;
}

}  // namespace f1hall
