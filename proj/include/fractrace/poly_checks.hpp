#pragma once

#include "fractrace/report.hpp"
#include "fractrace/weighted_poly.hpp"

#include <vector>

namespace fractrace {

// Fixed sample suite: 1, y^2, x1^2, x1 y^2, r^2 y^2, y^{2[g]}, x1^2 y^{2[g]}, r^{-1} x1, r^2 y^{2[g]+2}, y^4 x1^2, x1 x2.
std::vector<WeightedPoly> standard_samples(int n, const Rational& frac);
// Seeded random monomials with r-powers in {-2, -3/2, ..., 2}, exponents up to 3 and both branches.
std::vector<WeightedPoly> random_samples(int n, const Rational& frac, int count, unsigned seed);
std::vector<YPowerField> standard_y_samples(const GammaParams& p);

// Gamma(A) / Gamma(A - d) as the falling product (A-1)...(A-d); PoleError when Gamma(A) is a pole.
Rational gamma_shift_ratio(const Rational& A, long d);

VerificationReport verify_commutator(const Rational& m, int k, const std::vector<WeightedPoly>& samples);
VerificationReport verify_product_factorization(const GammaParams& p, const std::vector<WeightedPoly>& samples);
VerificationReport verify_r2s_commutation(const GammaParams& p, int k, const Rational& s,
                                          const std::vector<WeightedPoly>& samples);
VerificationReport verify_flat_hyperbolic_correspondence(const GammaParams& p, const std::vector<YPowerField>& samples);
VerificationReport verify_conformal_covariance(const GammaParams& p, BIndex idx, const std::vector<WeightedPoly>& samples);
VerificationReport verify_laplacian_covariance(const GammaParams& p, int k, const std::vector<WeightedPoly>& samples);

// Every poly check on the standard and seeded samples for one (gamma, n).
VerificationReport verify_poly_suite(const GammaParams& p, int random_count = 12, unsigned seed = 7);

}  // namespace fractrace
