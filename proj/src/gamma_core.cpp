#include "fractrace/gamma_core.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace fractrace {

GammaParams GammaParams::make(const Rational& gamma, int n) {
    Rational g = gamma;
    g.canonicalize();
    if (g <= 0) throw std::invalid_argument("gamma must be positive, got " + to_string(g));
    if (is_integer(g)) throw std::invalid_argument("gamma must be non-integer, got " + to_string(g));
    if (n < 1) throw std::invalid_argument("dimension n must be positive");
    GammaParams p;
    p.gamma = g;
    p.floor_gamma = floor_of(g);
    p.frac_gamma = g - p.floor_gamma;
    p.k = static_cast<int>(p.floor_gamma) + 1;
    p.m = 1 - 2 * p.frac_gamma;
    p.n = n;
    return p;
}

GammaParams GammaParams::parse(const std::string& text, int n) { return make(parse_rational(text), n); }

long GammaParams::half_floor() const { return floor_of(gamma / 2); }

Rational pochhammer_ratio(const Rational& q, long i) {
    Rational r = 1;
    if (i >= 0) {
        for (long t = 0; t < i; ++t) {
            Rational f = q + t;
            if (f == 0) throw PoleError("pochhammer_ratio(" + to_string(q) + ", " + std::to_string(i) + ") hits a pole");
            r *= f;
        }
        return r;
    }
    for (long t = 1; t <= -i; ++t) {
        Rational f = q - t;
        if (f == 0) throw PoleError("pochhammer_ratio(" + to_string(q) + ", " + std::to_string(i) + ") hits a pole");
        r *= f;
    }
    return 1 / r;
}

double gamma_fn(double x) {
    static constexpr std::array<double, 9> c = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x == std::floor(x) && x <= 0) throw PoleError("gamma_fn pole at " + std::to_string(x));
    if (x < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_fn(1 - x));
    x -= 1;
    double a = c[0];
    double t = x + 7.5;
    for (int i = 1; i < 9; ++i) a += c[i] / (x + i);
    return std::sqrt(2 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

double cs_normalization(const Rational& gamma) {
    if (gamma <= 0 || gamma >= 1) throw std::domain_error("cs_normalization needs 0 < gamma < 1");
    double g = to_double(gamma);
    return std::pow(2.0, 1 - 2 * g) * gamma_fn(1 - g) / gamma_fn(g);
}

double ExactConstant::value(const GammaParams& p) const {
    double f = to_double(p.frac_gamma);
    double ratio = gamma_fn(1 - f) / gamma_fn(f);
    return to_double(rational_part) * std::pow(ratio, static_cast<double>(gamma_ratio_power)) *
           std::pow(2.0, to_double(two_power));
}

ExactConstant ExactConstant::operator*(const ExactConstant& o) const {
    return {rational_part * o.rational_part, gamma_ratio_power + o.gamma_ratio_power, two_power + o.two_power};
}

namespace {

// Gamma(arg) = Gamma(base) * returned rational, base being [gamma], 1 - [gamma] or 1.
Rational shift_to_base(const GammaParams& p, const GammaArg& a) {
    if (a.s == 1) return pochhammer_ratio(p.frac_gamma, a.int_part);
    if (a.s == -1) return pochhammer_ratio(1 - p.frac_gamma, a.int_part - 1);
    if (a.int_part <= 0) throw PoleError("Gamma at non-positive integer " + std::to_string(a.int_part));
    return factorial(a.int_part - 1);
}

}  // namespace

ExactConstant gamma_quotient(const GammaParams& p, std::initializer_list<GammaArg> num,
                             std::initializer_list<GammaArg> den) {
    ExactConstant c;
    c.rational_part = 1;
    long plus = 0, minus = 0;
    for (const auto& a : num) {
        c.rational_part *= shift_to_base(p, a);
        if (a.s == 1) ++plus;
        if (a.s == -1) ++minus;
    }
    for (const auto& a : den) {
        c.rational_part /= shift_to_base(p, a);
        if (a.s == 1) --plus;
        if (a.s == -1) --minus;
    }
    if (plus != -minus) throw std::logic_error("Gamma quotient is not of the form rational * R^p");
    c.gamma_ratio_power = minus;
    return c;
}

ExactConstant dtn_constant_even(const GammaParams& p, long j) {
    if (j < 0 || j > p.half_floor()) throw std::out_of_range("dtn_constant_even: index out of range");
    const long F = p.floor_gamma;
    ExactConstant c = gamma_quotient(p, {{1, -1}, {1 - j + F, 1}, {2 * j - F, -1}},
                                     {{0, 1}, {1 + j, -1}, {F - 2 * j, 1}});
    c.rational_part *= sign_power(1 + F) * factorial(F - j) / factorial(j);
    c.two_power = 1 - 2 * p.frac_gamma;
    return c;
}

ExactConstant dtn_constant_odd(const GammaParams& p, long j) {
    if (j < 0 || j > p.floor_gamma - p.half_floor() - 1)
        throw std::out_of_range("dtn_constant_odd: index out of range");
    const long F = p.floor_gamma;
    ExactConstant c = gamma_quotient(p, {{0, 1}, {1 + F - j, -1}, {2 * j - F, 1}},
                                     {{1, -1}, {1 + j, 1}, {F - 2 * j, -1}});
    c.rational_part *= sign_power(F) * factorial(F - j) / factorial(j);
    c.two_power = 2 * p.frac_gamma - 1;
    return c;
}

ExactConstant symmetry_constant(const GammaParams& p, long j, long l) {
    const long F = p.floor_gamma, h = p.half_floor();
    if (j < 0 || j > h || l < 0 || l > F - h - 1)
        throw std::out_of_range("symmetry_constant: index out of range");
    ExactConstant c = gamma_quotient(p, {{1 - F + 2 * l, 1}, {F - h - j, 1}}, {{F - 2 * j, 1}, {l - h, 1}});
    Rational lead = p.frac_gamma - j + l;
    c.rational_part *= sign_power(h + j) * factorial(F - l) / factorial(j) * binomial(Rational(F - j), l) *
                       binomial(Rational(F - j - l - 1), h - j) / lead;
    return c;
}

ExactConstant yang_constant(const GammaParams& p) {
    const long F = p.floor_gamma;
    ExactConstant c = gamma_quotient(p, {{-F, -1}}, {{0, 1}});
    c.rational_part *= sign_power(1 + F) * factorial(F) * p.gamma;
    c.two_power = 1 - 2 * p.frac_gamma;
    return c;
}

IndexSet2Gamma index_set(const GammaParams& p) {
    IndexSet2Gamma s;
    for (long j = 0; j <= p.half_floor(); ++j) s.even_indices.push_back(p.gamma - 2 * j);
    for (long j = 0; j <= p.floor_gamma - p.half_floor() - 1; ++j)
        s.odd_indices.push_back(Rational(p.floor_gamma) - p.frac_gamma - 2 * j);
    return s;
}

Rational brute_force_F(long j, long l, const GammaParams& p) {
    Rational sum = 0;
    for (long s = 0; s <= l; ++s) {
        // Gamma(1+j+s-[g]) / Gamma(1+j-l+s-g), arguments differ by l + floor(g)
        Rational lower = Rational(1 + j - l + s) - p.gamma;
        sum += sign_power(s) * binomial(Rational(l), s) * pochhammer_ratio(lower, l + p.floor_gamma);
    }
    return sum;
}

Rational closed_form_F(long j, long l, const GammaParams& p) {
    return sign_power(l) * factorial(p.floor_gamma + l) / factorial(p.floor_gamma) *
           pochhammer_ratio(Rational(1 + j) - p.gamma, p.floor_gamma);
}

Rational brute_force_H(long nn, long d, const Rational& g) {
    Rational sum = 0;
    for (long l = 0; l <= nn; ++l)
        sum += sign_power(l) * binomial(Rational(d), l) * pochhammer_ratio(1 + g - d - l, d - 1);
    return sum;
}

Rational closed_form_H(long nn, long d, const Rational& g) {
    if (g == d) throw PoleError("closed_form_H: g - d vanishes");
    return sign_power(nn) * binomial(Rational(d - 1), nn) * pochhammer_ratio(g - nn - d, d) / (g - d);
}

Rational brute_force_K(const Rational& a, const Rational& b, long j) {
    Rational sum = 0;
    for (long t = 0; t <= j; ++t)
        sum += binomial(Rational(j), t) * pochhammer_ratio(a + t, j - t) * pochhammer_ratio(b - t, t);
    return sum;
}

Rational closed_form_K(const Rational& a, const Rational& b, long j) { return pochhammer_ratio(a + b - 1, j); }

}  // namespace fractrace
