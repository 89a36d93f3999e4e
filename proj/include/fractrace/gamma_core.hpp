#pragma once

#include "fractrace/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace fractrace {

struct GammaParams {
    Rational gamma;
    long floor_gamma = 0;
    Rational frac_gamma;
    int k = 1;
    Rational m;
    int n = 1;

    // Rejects integers and non-positive values.
    static GammaParams make(const Rational& gamma, int n = 1);
    static GammaParams parse(const std::string& text, int n = 1);

    long half_floor() const;  // floor(gamma / 2)
    int even_count() const { return static_cast<int>(half_floor()) + 1; }
    int odd_count() const { return static_cast<int>(floor_gamma - half_floor()); }
    std::string label() const { return to_string(gamma); }
};

// Gamma(q + i) / Gamma(q) for integer i.
Rational pochhammer_ratio(const Rational& q, long i);

// Lanczos approximation with reflection below 1/2.
double gamma_fn(double x);

double cs_normalization(const Rational& gamma);

// rational_part * (Gamma(1 - [gamma]) / Gamma([gamma]))^gamma_ratio_power * 2^two_power
struct ExactConstant {
    Rational rational_part = 0;
    long gamma_ratio_power = 0;
    Rational two_power = 0;

    double value(const GammaParams& p) const;
    ExactConstant operator*(const ExactConstant& o) const;
    bool is_rational() const { return gamma_ratio_power == 0 && two_power == 0; }
};

// Gamma argument of the form int_part + s * [gamma], s in {-1, 0, 1}.
struct GammaArg {
    long int_part;
    int s;
};

// Product of Gamma(num) / product of Gamma(den) reduced through Pochhammer shifts.
ExactConstant gamma_quotient(const GammaParams& p, std::initializer_list<GammaArg> num,
                             std::initializer_list<GammaArg> den);

ExactConstant dtn_constant_even(const GammaParams& p, long j);
ExactConstant dtn_constant_odd(const GammaParams& p, long j);
ExactConstant symmetry_constant(const GammaParams& p, long j, long l);
ExactConstant yang_constant(const GammaParams& p);

struct IndexSet2Gamma {
    std::vector<Rational> even_indices;
    std::vector<Rational> odd_indices;
};
IndexSet2Gamma index_set(const GammaParams& p);

Rational brute_force_F(long j, long l, const GammaParams& p);
Rational closed_form_F(long j, long l, const GammaParams& p);
Rational brute_force_H(long nn, long d, const Rational& g);
Rational closed_form_H(long nn, long d, const Rational& g);
Rational brute_force_K(const Rational& a, const Rational& b, long j);
Rational closed_form_K(const Rational& a, const Rational& b, long j);

}  // namespace fractrace
