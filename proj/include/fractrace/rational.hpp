#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fractrace {

using Rational = mpq_class;

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Accepts "p/q", integers and decimal literals ("0.25", "-1.5e-2"); decimals convert exactly.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
double to_double(const Rational& q);
long floor_of(const Rational& q);
bool is_integer(const Rational& q);

Rational rational_pow(const Rational& base, long e);
Rational factorial(long n);
// Generalized binomial coefficient; top may be any rational, binom(-1, 0) = 1.
Rational binomial(const Rational& top, long k);
// Double factorial with (-1)!! = 1 and (-3)!! = -1, extended by (n-2)!! = n!!/n.
Rational double_factorial(long n);

// num/den in lowest terms; the two-argument mpq constructor does not reduce.
inline Rational ratio(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational sign_power(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace fractrace
