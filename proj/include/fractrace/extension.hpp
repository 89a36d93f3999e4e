#pragma once

#include "fractrace/grid_field.hpp"
#include "fractrace/jet.hpp"
#include "fractrace/mode_function.hpp"
#include "fractrace/report.hpp"

#include <vector>

namespace fractrace {

// Boundary operators as sums coef * (-kappa^2)^lap * (a_i or b_i) over two-branch coefficients.
class BoundaryOperatorTable {
public:
    explicit BoundaryOperatorTable(const GammaParams& p);
    double apply(BIndex idx, const std::vector<double>& a, const std::vector<double>& b, double kappa) const;
    double apply(BIndex idx, const ModeFunction& f) const;
    int jet_length() const { return J_; }

private:
    struct Entry {
        bool neumann;
        int i;
        int lap;
        double coef;
    };
    GammaParams params_;
    int J_;
    std::map<BIndex, std::vector<Entry>> table_;
};

// Normalized decaying mode P(t) = t^gamma K_nu(t) / (2^{nu-1} Gamma(nu)) for one element of the index set.
struct ModeProfile {
    GammaParams params;
    int j = 0;
    ScatterKind kind = ScatterKind::Even;
    Rational nu;
    LatticeExp lead, hat;         // exponents gamma - nu and gamma + nu
    int lead_index = 0, hat_index = 0;  // branch slots of the two leading terms
    double normalization = 1.0;
    std::vector<double> lead_series, hat_series;  // coefficients on t^{lead + 2l}, t^{hat + 2l}

    double hat_coefficient() const { return hat_series.front(); }
    double eval(double t) const;
    // kappa^{-lead} P(kappa y) as a mode function of y
    ModeFunction at(double kappa) const;
    // Two-branch coefficients of at(kappa), up to index J.
    void branch_values(double kappa, int J, std::vector<double>& a, std::vector<double>& b) const;
};

ModeProfile build_mode_profile(const GammaParams& p, int j, ScatterKind kind, int series_terms = 40);
// Profiles in Dirichlet order: even kinds 0..floor(gamma/2), then odd kinds.
std::vector<ModeProfile> build_profiles(const GammaParams& p);

// Residual of the mode equation (T_t - 1)^k P = 0: the last factor by eighth-order finite differences.
double profile_residual(const ModeProfile& prof);

struct ExtensionOptions {
    bool parallel = true;
};

class ExtensionSolution {
public:
    GammaParams params;
    GridField grid;
    std::vector<GridField> data;
    std::vector<ModeProfile> profiles;
    std::vector<double> kappa;
    std::vector<std::vector<Complex>> coeffs;  // [profile][mode]
    std::vector<std::string> warnings;
    bool parallel = true;

    GridField evaluate(double y) const;
    GridField boundary(BIndex idx) const;
    // Spectrum of B_idx(U) per mode.
    std::vector<Complex> boundary_spectrum(BIndex idx) const;
    // Two-branch coefficients of the solution in one mode, real and imaginary parts.
    void mode_branches(std::size_t mode, int J, std::vector<Complex>& a, std::vector<Complex>& b) const;
};

ExtensionSolution solve_extension(const GammaParams& p, const std::vector<GridField>& data,
                                  const ExtensionOptions& opt = {});
// Neumann-family output of the solution: B_{2gamma-2j} or B_{2 floor(gamma) - 2j}.
GridField dtn_apply(const ExtensionSolution& sol, BIndex idx);

// Diagonal of the Dirichlet-to-Neumann matrix at |xi| = 1 from the Bessel branch coefficients alone.
struct DtnExtraction {
    std::vector<double> c, d;
    double max_offdiag = 0.0;
};
DtnExtraction extract_dtn_constants(const GammaParams& p);

VerificationReport verify_dtn_independence(const GammaParams& p);
VerificationReport verify_profiles(const GammaParams& p);
VerificationReport verify_classical_extension(const GridField& f);
VerificationReport verify_self_consistency(const GammaParams& p, const std::vector<GridField>& data);
VerificationReport yang_extension_check(const GammaParams& p, const GridField& f);

// Gaussian data family used by checks: amp * exp(-|x - c|^2 / w^2).
GridField gaussian_field(int n, int N, double L, double amp, double width, double center = 0.0);

}  // namespace fractrace
