#pragma once

#include <vector>

namespace fractrace {

// Reflection series below this argument, Steed's continued fraction plus upward recurrence above.
inline constexpr double kBesselSwitchover = 2.0;

// Modified Bessel function of the second kind for non-integer |nu| <= 10 and t > 0.
// err_estimate, when given, receives the estimated relative rounding error.
double bessel_k(double nu, double t, double* err_estimate = nullptr);
// Modified Bessel function of the first kind by its power series (any real nu not a negative integer).
double bessel_i(double nu, double t);

// Count of bessel_k calls whose estimated error exceeded 1e-10 (accuracy-loss warnings).
long bessel_warning_count();

// K_nu(t) = sum_l lower[l] (t/2)^{2l-nu} + upper[l] (t/2)^{2l+nu}
struct FrobeniusK {
    double nu = 0;
    std::vector<double> lower, upper;
};
FrobeniusK frobenius_k(double nu, int terms);

}  // namespace fractrace
