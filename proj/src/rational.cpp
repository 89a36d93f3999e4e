#include "fractrace/rational.hpp"

#include <cctype>

namespace fractrace {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty number");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational num = parse_rational(s.substr(0, slash));
        Rational den = parse_rational(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        Rational q = num / den;
        q.canonicalize();
        return q;
    }

    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
    std::string digits;
    long scale = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            seen_digit = true;
            if (seen_dot) ++scale;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    if (!seen_digit) throw std::invalid_argument("not a number: '" + text + "'");
    long exponent = 0;
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') throw std::invalid_argument("not a number: '" + text + "'");
        std::string rest = s.substr(i + 1);
        size_t used = 0;
        try {
            exponent = std::stol(rest, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad exponent in '" + text + "'");
        }
        if (used != rest.size()) throw std::invalid_argument("bad exponent in '" + text + "'");
    }
    mpz_class num(digits, 10);
    Rational q(num);
    q *= rational_pow(Rational(10), exponent - scale);
    if (neg) q = -q;
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

long floor_of(const Rational& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f.get_si();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational rational_pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw PoleError("zero to a negative power");
        return rational_pow(Rational(1) / base, -e);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational factorial(long n) {
    if (n < 0) throw PoleError("factorial of a negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational binomial(const Rational& top, long k) {
    if (k < 0) return 0;
    Rational r = 1;
    for (long t = 0; t < k; ++t) r *= (top - t);
    return r / factorial(k);
}

Rational double_factorial(long n) {
    if (n >= 0) {
        Rational r = 1;
        for (long t = n; t > 1; t -= 2) r *= t;
        return r;
    }
    if (n % 2 == 0) throw PoleError("double factorial of a negative even integer");
    // (n)!! = (n+2)!! / (n+2)
    return double_factorial(n + 2) / Rational(n + 2);
}

}  // namespace fractrace
