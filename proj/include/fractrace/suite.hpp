#pragma once

#include "fractrace/gamma_core.hpp"
#include "fractrace/report.hpp"

#include <vector>

namespace fractrace {

std::vector<Rational> default_gamma_sweep();

// Brute-force sums against closed forms for F, H, K with every index up to 8.
VerificationReport verify_closed_forms(const GammaParams& p);
// Exact-form constants against direct floating evaluation of the Gamma formulas; Yang constant and
// the extension normalization on (0,1).
VerificationReport verify_dtn_constants(const GammaParams& p);
// gamma = k + 1/2: constants as exact rationals against the double-factorial formulas.
VerificationReport verify_half_integer_constants(int k);

std::vector<VerificationReport> identity_suite(const GammaParams& p);
std::vector<VerificationReport> numeric_suite(const GammaParams& p);
// Bubble and logarithmic inequalities; independent of gamma.
std::vector<VerificationReport> inequality_suite();

struct SuiteOptions {
    bool identities = true;
    bool numeric = true;
    int n = 1;
};
std::vector<VerificationReport> run_suite(const std::vector<Rational>& gammas, const SuiteOptions& opt);

}  // namespace fractrace
