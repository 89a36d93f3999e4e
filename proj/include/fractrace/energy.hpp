#pragma once

#include "fractrace/extension.hpp"

#include <map>

namespace fractrace {

struct EnergyBreakdown {
    double interior = 0.0;             // gradient form of the weighted Laplacian powers
    double boundary_correction = 0.0;  // double sum over Dirichlet data with the symmetry constants
    double q_form = 0.0;               // (-1)^k <U, Delta_m^k V> plus boundary pairings
    double dtn_rhs = 0.0;              // c/d-weighted fractional pairings of the data
    bool has_dtn = false;
};

// Bilinear forms for single Fourier modes of wave number f.kappa.
class ModeForms {
public:
    explicit ModeForms(const GammaParams& p);
    double q(const ModeFunction& u, const ModeFunction& v) const;
    double interior(const ModeFunction& u, const ModeFunction& v) const;
    double correction(const ModeFunction& u, const ModeFunction& v) const;
    EnergyBreakdown breakdown(const ModeFunction& u, const ModeFunction& v) const;
    // Dirichlet data of u in data order.
    std::vector<double> dirichlet_data(const ModeFunction& u) const;
    const BoundaryOperatorTable& table() const { return table_; }

private:
    GammaParams p_;
    BoundaryOperatorTable table_;
    std::vector<std::vector<double>> sym_;  // [j][l]
};

// Energy of the extension solution by Plancherel; each mode reuses the |xi| = 1 forms through homogeneity.
EnergyBreakdown energy(const ExtensionSolution& sol);
// sum_j c_j <f_j, (-Lap)^{gamma-2j} f_j> + sum_j d_j <phi_j, (-Lap)^{floor-[gamma]-2j} phi_j>
double dtn_energy(const GammaParams& p, const std::vector<GridField>& data);

// U(x, y) = sum_q cos(2 pi q x / period) u_q(y) on a one-dimensional period, q >= 1.
struct ModalField {
    double period = 2.0 * 3.14159265358979323846;
    std::map<int, ModeFunction> modes;
    double kappa(int q) const;
};

enum class BranchChoice { Both, EvenOnly, OddOnly };
// Gaussian-class components y^{2i} e^{-a y^2} and y^{2[gamma]+2i} e^{-a y^2} with seeded coefficients.
ModalField random_modal_field(const GammaParams& p, unsigned seed, BranchChoice branches = BranchChoice::Both);
EnergyBreakdown energy_form(const GammaParams& p, const ModalField& u, const ModalField& v);

VerificationReport verify_q_symmetry(const GammaParams& p, const ModalField& u, const ModalField& v);
// Adds a perturbation with zero Dirichlet data, scaled by amplitude, on the lowest nonzero modes.
VerificationReport dirichlet_principle_check(const GammaParams& p, const std::vector<GridField>& data,
                                             double amplitude = 1.0);
VerificationReport energy_trace_check(const GammaParams& p, const std::vector<GridField>& data);
// gamma = 1/2: energy of the extension equals the half-Laplacian pairing of f.
VerificationReport classical_energy_check(const GridField& f);

}  // namespace fractrace
