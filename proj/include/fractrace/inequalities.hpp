#pragma once

#include "fractrace/grid_field.hpp"
#include "fractrace/report.hpp"

#include <functional>
#include <vector>

namespace fractrace {

// a (epsilon + |x - xi|^2)^{-(n - 2 gamma_tilde)/2}
struct Bubble {
    int n = 2;
    double gamma_tilde = 0.5;
    double a = 1.0;
    double epsilon = 1.0;
    std::vector<double> xi;  // empty means the origin

    void validate() const;
    double operator()(const std::vector<double>& x) const;
};

// Gamma((n+2g)/2) / Gamma((n-2g)/2) Vol(S^n)^{2g/n}
double sobolev_constant(int n, double gamma_tilde);
double sphere_volume(int n);

using Profile = std::function<double(const std::vector<double>&)>;

// <f, (-Lap)^g f> / (S ||f||_p^2) on boxes of side L and 2L at fixed spacing, with the
// windowing error removed by Richardson extrapolation in 1/L.
struct SobolevRatio {
    double coarse = 0, fine = 0, extrapolated = 0;
    double tail_fraction = 0;  // analytic L^p mass outside the fine box over the total
};
SobolevRatio sobolev_ratio(const Profile& f, const Bubble& decay, double h, double L);

// Bubble plus amplitude * exp(-|x - c|^2 / w^2).
struct Bump {
    double amplitude = 0.3;
    double width = 1.0;
    std::vector<double> center;
};

// Equality for the bubble, its dilation by 2 and translation by (3, -2); strict excess for each bump.
VerificationReport sharp_sobolev_check(const Bubble& bubble, const std::vector<Bump>& perturbations, double h = 0.25,
                                       double L = 128.0);
std::vector<Bump> default_bumps(int n);

// a - ln((epsilon + (x - xi)^2) / (1 + x^2))
double log_extremal(double x, double epsilon, double xi, double a = 0.0);

// Two sides of the one-dimensional Lebedev-Milin inequality for samples of f on a box
// centered at the origin; far_value is the limit of f at infinity.
struct LebedevMilinSides {
    double energy = 0;  // <f, (-Lap)^{1/2} f>
    double log_side = 0;  // 4 pi ln of the normalized exponential integral against the Cauchy measure
};
LebedevMilinSides lebedev_milin_sides(const GridField& f, double far_value);
VerificationReport lebedev_milin_check(int N = 65536, double h = 0.05);

}  // namespace fractrace
