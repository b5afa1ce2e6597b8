#ifndef JSOB_RATIONAL_HPP
#define JSOB_RATIONAL_HPP

// Exact rational scalars. GMP's mpq_class keeps every value in canonical
// form (reduced, positive denominator), which is the invariant the rest of
// the library relies on.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "jsob/errors.hpp"

namespace jsob {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    BigRational r{BigInt(num), BigInt(den)};
    r.canonicalize();
    return r;
}

/// Canonical "p/q" form; integers are written without a denominator.
inline std::string to_string(const BigRational& r) {
    return r.get_str(10);
}

/// Accepts "p", "p/q" and "-p/q" with optional surrounding blanks.
inline BigRational parse_rational(const std::string& text) {
    auto first = text.find_first_not_of(" \t");
    auto last = text.find_last_not_of(" \t");
    if (first == std::string::npos) throw InputError("empty rational literal");
    std::string s = text.substr(first, last - first + 1);
    BigRational r;
    if (r.set_str(s, 10) != 0) throw InputError("malformed rational literal '" + text + "'");
    if (r.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

inline BigRational pow(const BigRational& base, long exponent) {
    BigRational acc(1);
    BigRational b = exponent >= 0 ? base : BigRational(1) / base;
    unsigned long e = exponent >= 0 ? static_cast<unsigned long>(exponent)
                                    : static_cast<unsigned long>(-exponent);
    while (e != 0) {
        if (e & 1UL) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline BigRational factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of a negative integer");
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return BigRational(f);
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1) of a scalar.
inline BigRational rising(const BigRational& a, long n) {
    if (n < 0) throw std::domain_error("rising factorial with negative count");
    BigRational acc(1);
    for (long i = 0; i < n; ++i) acc *= a + i;
    return acc;
}

/// Generalized binomial coefficient with arbitrary top and integer bottom:
/// top(top-1)...(top-k+1)/k!, and 0 for k < 0.
inline BigRational binomial(const BigRational& top, long k) {
    if (k < 0) return BigRational(0);
    BigRational acc(1);
    for (long i = 0; i < k; ++i) acc *= top - i;
    return acc / factorial(k);
}

inline BigRational binomial(long top, long k) { return binomial(BigRational(top), k); }

inline int sign_power(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace jsob

#endif  // JSOB_RATIONAL_HPP
