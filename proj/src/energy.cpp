#include "fractrace/energy.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <stdexcept>

namespace fractrace {

namespace {

double ipow(double x, int e) {
    double r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

double plancherel_weight(const GridField& g) {
    const double total = static_cast<double>(g.size());
    return std::pow(g.box_length, g.n) / (total * total);
}

}  // namespace

ModeForms::ModeForms(const GammaParams& p) : p_(p), table_(p) {
    const int F = static_cast<int>(p.floor_gamma), h = static_cast<int>(p.half_floor());
    for (int j = 0; j <= h; ++j) {
        sym_.emplace_back();
        for (int l = 0; l <= F - h - 1; ++l) sym_.back().push_back(symmetry_constant(p, j, l).value(p));
    }
}

std::vector<double> ModeForms::dirichlet_data(const ModeFunction& u) const {
    std::vector<double> out;
    for (BIndex idx : dirichlet_indices(p_)) out.push_back(table_.apply(idx, u));
    return out;
}

double ModeForms::q(const ModeFunction& u, const ModeFunction& v) const {
    const int F = static_cast<int>(p_.floor_gamma), h = static_cast<int>(p_.half_floor());
    double s = (p_.k % 2 ? -1.0 : 1.0) * weighted_inner(u, v.apply_D(p_.k));
    for (int j = 0; j <= h; ++j)
        s += table_.apply({Family::Even, j}, u) * table_.apply({Family::Odd, F - j}, v);
    for (int j = 0; j <= F - h - 1; ++j)
        s -= table_.apply({Family::Odd, j}, u) * table_.apply({Family::Even, F - j}, v);
    return s;
}

double ModeForms::interior(const ModeFunction& u, const ModeFunction& v) const {
    if (p_.k % 2 == 0) return weighted_inner(u.apply_D(p_.k / 2), v.apply_D(p_.k / 2));
    ModeFunction gu = u.apply_D((p_.k - 1) / 2), gv = v.apply_D((p_.k - 1) / 2);
    return u.kappa * u.kappa * weighted_inner(gu, gv) + weighted_inner(gu.derivative(), gv.derivative());
}

double ModeForms::correction(const ModeFunction& u, const ModeFunction& v) const {
    const int F = static_cast<int>(p_.floor_gamma), h = static_cast<int>(p_.half_floor());
    if (F - h - 1 < 0) return 0.0;
    const double lap = -u.kappa * u.kappa;
    std::vector<double> du = dirichlet_data(u), dv = dirichlet_data(v);
    double s = 0;
    for (int j = 0; j <= h; ++j)
        for (int l = 0; l <= F - h - 1; ++l)
            s += sym_[j][l] * ipow(lap, F - j - l) * (du[j] * dv[h + 1 + l] + dv[j] * du[h + 1 + l]);
    return s;
}

EnergyBreakdown ModeForms::breakdown(const ModeFunction& u, const ModeFunction& v) const {
    if (u.kappa != v.kappa) throw std::invalid_argument("mode forms need a common wave number");
    EnergyBreakdown e;
    e.interior = interior(u, v);
    e.boundary_correction = correction(u, v);
    e.q_form = q(u, v);
    return e;
}

double dtn_energy(const GammaParams& p, const std::vector<GridField>& data) {
    const int F = static_cast<int>(p.floor_gamma), h = static_cast<int>(p.half_floor());
    if (data.size() != dirichlet_indices(p).size()) throw std::invalid_argument("dtn_energy: wrong number of data fields");
    double s = 0;
    for (int j = 0; j <= h; ++j)
        s += dtn_constant_even(p, j).value(p) * fractional_pairing(data[j], data[j], to_double(p.gamma - 2 * j));
    for (int j = 0; j <= F - h - 1; ++j)
        s += dtn_constant_odd(p, j).value(p) *
             fractional_pairing(data[h + 1 + j], data[h + 1 + j], to_double(Rational(F) - p.frac_gamma - 2 * j));
    return s;
}

EnergyBreakdown energy(const ExtensionSolution& sol) {
    const GammaParams& p = sol.params;
    ModeForms forms(p);
    const std::size_t K = sol.profiles.size();
    std::vector<ModeFunction> unit;
    std::vector<double> lead;
    for (const auto& prof : sol.profiles) {
        unit.push_back(prof.at(1.0));
        lead.push_back(to_double(p.gamma - prof.nu));
    }
    std::vector<std::vector<EnergyBreakdown>> mat(K, std::vector<EnergyBreakdown>(K));
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t l = 0; l < K; ++l) mat[k][l] = forms.breakdown(unit[k], unit[l]);
    const double g2 = 2.0 * to_double(p.gamma);
    double interior = 0, corr = 0, q = 0;
    const long count = static_cast<long>(sol.kappa.size());
#pragma omp parallel for if (sol.parallel) reduction(+ : interior, corr, q) schedule(static)
    for (long mode = 0; mode < count; ++mode) {
        const double kap = sol.kappa[mode];
        if (kap == 0.0) continue;
        for (std::size_t k = 0; k < K; ++k)
            for (std::size_t l = 0; l < K; ++l) {
                double w = std::real(std::conj(sol.coeffs[k][mode]) * sol.coeffs[l][mode]);
                if (w == 0.0) continue;
                w *= std::pow(kap, g2 - lead[k] - lead[l]);
                interior += w * mat[k][l].interior;
                corr += w * mat[k][l].boundary_correction;
                q += w * mat[k][l].q_form;
            }
    }
    const double weight = plancherel_weight(sol.grid);
    EnergyBreakdown e;
    e.interior = weight * interior;
    e.boundary_correction = weight * corr;
    e.q_form = weight * q;
    e.dtn_rhs = dtn_energy(p, sol.data);
    e.has_dtn = true;
    return e;
}

double ModalField::kappa(int q) const { return 2.0 * 3.14159265358979323846 * q / period; }

ModalField random_modal_field(const GammaParams& p, unsigned seed, BranchChoice branches) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    ModalField f;
    const double frac = to_double(p.frac_gamma);
    for (int q = 1; q <= 3; ++q) {
        ModeFunction u(frac, f.kappa(q));
        for (int i = 0; i <= 2; ++i) {
            double a = (i % 2) ? 1.5 : 1.0;
            if (branches != BranchChoice::OddOnly) u.add_gauss({{0, 2 * i}, a}, coef(rng));
            if (branches != BranchChoice::EvenOnly) u.add_gauss({{1, 2 * i}, a}, coef(rng));
        }
        f.modes.emplace(q, u);
    }
    return f;
}

EnergyBreakdown energy_form(const GammaParams& p, const ModalField& u, const ModalField& v) {
    if (u.period != v.period) throw std::invalid_argument("energy_form: fields on different periods");
    ModeForms forms(p);
    EnergyBreakdown e;
    for (const auto& [q, uq] : u.modes) {
        auto it = v.modes.find(q);
        if (it == v.modes.end() || q < 1) continue;
        EnergyBreakdown b = forms.breakdown(uq, it->second);
        const double w = 0.5 * u.period;
        e.interior += w * b.interior;
        e.boundary_correction += w * b.boundary_correction;
        e.q_form += w * b.q_form;
    }
    return e;
}

VerificationReport verify_q_symmetry(const GammaParams& p, const ModalField& u, const ModalField& v) {
    VerificationReport rep("q_symmetry", p.label(), 1);
    EnergyBreakdown uv = energy_form(p, u, v), vu = energy_form(p, v, u);
    rep.measure("Q(U,V) = Q(V,U)", std::fabs(uv.q_form - vu.q_form) / (std::fabs(uv.q_form) + 1.0), 1e-8);
    for (const auto& [tag, e] : {std::pair{"(U,V)", uv}, std::pair{"(V,U)", vu}}) {
        double scale = std::max({std::fabs(e.q_form), std::fabs(e.interior), 1e-300});
        rep.measure(std::string("Q = interior - correction on ") + tag,
                    std::fabs(e.q_form - (e.interior - e.boundary_correction)) / scale, 1e-7);
    }
    rep.note("Q(U,V)=" + format_double(uv.q_form) + " interior=" + format_double(uv.interior) +
             " correction=" + format_double(uv.boundary_correction));
    return rep;
}

namespace {

struct PerturbedEnergies {
    double base = 0;                 // direct Q(U_D, U_D) on the perturbed modes
    double homogeneous = 0;          // the same modes through the |xi| = 1 forms
    double w = 0;                    // Q(W, W)
    std::vector<double> shifted;     // Q(U_D + t W, U_D + t W) on the perturbed modes
    double data_residual = 0;        // largest Dirichlet datum of W relative to the removed part
};

// Perturbation supported on the first four nonzero spectral indices: per mode,
// W = amplitude (w0 - sum_k beta_k y^{lead_k} e^{-2 y^2}) with beta fixed by zero Dirichlet data.
PerturbedEnergies perturbed_energies(const ExtensionSolution& sol, const ModeForms& forms, double amplitude,
                                     const std::vector<double>& ts) {
    const GammaParams& p = sol.params;
    const double frac = to_double(p.frac_gamma), weight = plancherel_weight(sol.grid);
    const std::size_t K = sol.profiles.size();
    PerturbedEnergies out;
    out.shifted.assign(ts.size(), 0.0);
    int used = 0;
    for (std::size_t mode = 0; mode < sol.kappa.size() && used < 4; ++mode) {
        const double kap = sol.kappa[mode];
        if (kap == 0.0) continue;
        ++used;
        ModeFunction ure(frac, kap), uim(frac, kap);
        for (std::size_t k = 0; k < K; ++k) {
            ModeFunction v = sol.profiles[k].at(kap);
            ure.add(v, sol.coeffs[k][mode].real());
            uim.add(v, sol.coeffs[k][mode].imag());
        }
        ModeFunction w0(frac, kap);
        w0.add_gauss({{0, 0}, 1.0}, 1.0).add_gauss({{0, 2}, 1.0}, 0.5).add_gauss({{1, 0}, 1.0}, -0.7);
        w0.add_gauss({{1, 2}, 1.0}, 0.3).add_gauss({{0, 4}, 1.0}, 0.2);
        Eigen::MatrixXd G(K, K);
        std::vector<ModeFunction> basis;
        for (std::size_t k = 0; k < K; ++k) {
            ModeFunction b(frac, kap);
            b.add_gauss({sol.profiles[k].lead, 2.0}, 1.0);
            auto d = forms.dirichlet_data(b);
            for (std::size_t i = 0; i < K; ++i) G(i, k) = d[i];
            basis.push_back(b);
        }
        auto rhs_data = forms.dirichlet_data(w0);
        Eigen::VectorXd rhs(K);
        for (std::size_t i = 0; i < K; ++i) rhs(i) = rhs_data[i];
        Eigen::VectorXd beta = G.fullPivLu().solve(rhs);
        ModeFunction W = w0;
        for (std::size_t k = 0; k < K; ++k) W.add(basis[k], -beta(k));
        W = W.scaled(amplitude);
        double removed = rhs.cwiseAbs().maxCoeff() * std::fabs(amplitude);
        for (double d : forms.dirichlet_data(W))
            if (removed > 0) out.data_residual = std::max(out.data_residual, std::fabs(d) / removed);

        const double qim = forms.q(uim, uim);
        out.base += weight * (forms.q(ure, ure) + qim);
        out.w += weight * forms.q(W, W);
        for (std::size_t t = 0; t < ts.size(); ++t) {
            ModeFunction s = ure;
            s.add(W, ts[t]);
            out.shifted[t] += weight * (forms.q(s, s) + qim);
        }
        double hom = 0;
        for (std::size_t k = 0; k < K; ++k)
            for (std::size_t l = 0; l < K; ++l)
                hom += std::real(std::conj(sol.coeffs[k][mode]) * sol.coeffs[l][mode]) *
                       forms.q(sol.profiles[k].at(kap), sol.profiles[l].at(kap));
        out.homogeneous += weight * hom;
    }
    return out;
}

}  // namespace

VerificationReport dirichlet_principle_check(const GammaParams& p, const std::vector<GridField>& data, double amplitude) {
    VerificationReport rep("dirichlet_principle", p.label(), data.empty() ? 0 : data.front().n);
    ExtensionSolution sol = solve_extension(p, data);
    for (const auto& w : sol.warnings) rep.note(w);
    ModeForms forms(p);
    const std::vector<double> ts{-1.0, 0.5, 1.0, 2.0};
    PerturbedEnergies pe = perturbed_energies(sol, forms, amplitude, ts);
    rep.measure("perturbation has zero Dirichlet data", pe.data_residual, 1e-10);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double expect = ts[i] * ts[i] * pe.w, got = pe.shifted[i] - pe.base;
        const std::string what = "E(U+tW) - E(U) = t^2 E(W) at t=" + format_double(ts[i]);
        if (amplitude == 0.0)
            rep.measure(what, std::fabs(got) / std::max(std::fabs(pe.base), 1e-300), 1e-12);
        else
            rep.measure(what, std::fabs(got - expect) / std::fabs(expect), 1e-7);
    }
    if (amplitude != 0.0) {
        if (pe.w > 0)
            rep.note("E(W)=" + format_double(pe.w));
        else
            rep.fail("E(W)=" + format_double(pe.w) + " is not positive");
    } else {
        rep.note("zero perturbation: positivity of E(W) not applicable");
    }
    return rep;
}

VerificationReport energy_trace_check(const GammaParams& p, const std::vector<GridField>& data) {
    VerificationReport rep("energy_trace", p.label(), data.empty() ? 0 : data.front().n);
    ExtensionSolution sol = solve_extension(p, data);
    for (const auto& w : sol.warnings) rep.note(w);
    EnergyBreakdown e = energy(sol);
    rep.measure("E(U) equals the DtN pairing sum", std::fabs(e.q_form - e.dtn_rhs) / std::fabs(e.dtn_rhs), 1e-6);
    rep.measure("Q = interior - correction",
                std::fabs(e.q_form - (e.interior - e.boundary_correction)) /
                    std::max(std::fabs(e.q_form), std::fabs(e.interior)),
                1e-7);
    ModeForms forms(p);
    PerturbedEnergies pe = perturbed_energies(sol, forms, 1.0, {1.0});
    rep.measure("homogeneity scaling of the mode forms", std::fabs(pe.homogeneous - pe.base) / std::fabs(pe.base), 1e-8);
    const double gap = e.q_form - e.dtn_rhs + pe.shifted[0] - pe.base;
    rep.measure("perturbation gap equals E(W)", std::fabs(gap - pe.w) / pe.w, 1e-6);
    if (!(gap > 0)) rep.fail("perturbed energy does not exceed the DtN pairing sum, gap=" + format_double(gap));
    rep.note("E(U)=" + format_double(e.q_form) + " rhs=" + format_double(e.dtn_rhs) + " gap=" + format_double(gap));
    return rep;
}

VerificationReport classical_energy_check(const GridField& f) {
    const GammaParams p = GammaParams::make(Rational(1, 2), f.n);
    VerificationReport rep("classical_energy", p.label(), f.n);
    ExtensionSolution sol = solve_extension(p, {f});
    EnergyBreakdown e = energy(sol);
    const double pairing = fractional_pairing(f, f, 0.5);
    rep.measure("weighted Dirichlet energy vs half-Laplacian pairing", std::fabs(e.interior - pairing) / pairing, 1e-6);
    rep.measure("Q form vs half-Laplacian pairing", std::fabs(e.q_form - pairing) / pairing, 1e-6);
    return rep;
}

}  // namespace fractrace
