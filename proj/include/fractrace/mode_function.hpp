#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

namespace fractrace {

// Exponents live on the lattice 2c[gamma] + d.
struct LatticeExp {
    int c = 0;
    int d = 0;
    auto operator<=>(const LatticeExp&) const = default;
};

// y^p K_mu(kappa y) with p - mu = minus and p + mu = plus.
struct BesselKey {
    LatticeExp minus, plus;
    auto operator<=>(const BesselKey&) const = default;
};

// y^e exp(-a y^2)
struct GaussKey {
    LatticeExp e;
    double a = 1.0;
    auto operator<=>(const GaussKey&) const = default;
};

using NearSeries = std::map<LatticeExp, double>;

// Real function of y > 0 for one Fourier mode of wave number kappa.
class ModeFunction {
public:
    double frac = 0.5;  // [gamma]; the weight is y^m with m = 1 - 2[gamma]
    double kappa = 0.0;
    std::map<BesselKey, double> bessel;
    std::map<GaussKey, double> gauss;

    ModeFunction() = default;
    ModeFunction(double frac_gamma, double wave) : frac(frac_gamma), kappa(wave) {}

    double m() const { return 1.0 - 2.0 * frac; }
    double exponent(LatticeExp e) const { return 2.0 * e.c * frac + e.d; }

    ModeFunction& add_bessel(BesselKey k, double c);
    ModeFunction& add_gauss(GaussKey k, double c);
    ModeFunction& add(const ModeFunction& o, double c = 1.0);
    ModeFunction scaled(double c) const;
    bool empty() const { return bessel.empty() && gauss.empty(); }

    double eval(double y) const;
    // T - kappa^2 with T = d_y^2 + m y^{-1} d_y
    ModeFunction apply_D() const;
    ModeFunction apply_D(int times) const;
    ModeFunction derivative() const;

    // Expansion at y = 0 keyed by lattice exponent, `terms` orders per Bessel or Gauss term.
    NearSeries near_series(int terms = 40) const;
    // a[i] multiplies y^{2i}, b[i] multiplies y^{2[gamma]+2i}; throws if the expansion leaves that class.
    void branch_coefficients(int J, std::vector<double>& a, std::vector<double>& b) const;
};

ModeFunction operator+(const ModeFunction& a, const ModeFunction& b);
ModeFunction operator-(const ModeFunction& a, const ModeFunction& b);

// Integral of f g y^m over (0, infinity): termwise near y = 0, adaptive Gauss-Kronrod panels beyond.
double weighted_inner(const ModeFunction& f, const ModeFunction& g);

}  // namespace fractrace
