// One PASS/FAIL line per acceptance criterion; an argument c1..c8 restricts the run to one of them.
#include "fractrace/energy.hpp"
#include "fractrace/extension.hpp"
#include "fractrace/inequalities.hpp"
#include "fractrace/suite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

using namespace fractrace;

namespace {

struct Outcome {
    bool pass = true;
    std::string summary;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Folds reports into one outcome and prints the failing lines.
void absorb(Outcome& o, const VerificationReport& r, double& worst) {
    worst = std::max(worst, r.max_rel_err);
    if (r.pass) return;
    o.pass = false;
    for (const auto& d : r.details)
        if (d.rfind("FAIL", 0) == 0) std::cerr << "  [" << r.check << " gamma=" << r.gamma << "] " << d << "\n";
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::vector<GridField> gaussian_data(const GammaParams& p) {
    std::vector<GridField> data;
    for (std::size_t i = 0; i < dirichlet_indices(p).size(); ++i)
        data.push_back(gaussian_field(1, 256, 40.0, 1.0 / (1.0 + i), 1.5 + 0.5 * i, 0.3 * i));
    return data;
}

Outcome exact_identities() {
    Outcome o;
    auto t0 = Clock::now();
    double worst = 0;
    int reports = 0;
    for (const auto& g : default_gamma_sweep())
        for (const auto& r : identity_suite(GammaParams::make(g))) {
            absorb(o, r, worst);
            ++reports;
        }
    double t = seconds_since(t0);
    if (t >= 60) o.pass = false;
    o.summary = std::to_string(reports) + " exact suites over 10 gamma values, runtime " + fmt("%.1f", t) + " s (limit 60 s)";
    return o;
}

Outcome constant_cross_checks() {
    Outcome o;
    double worst = 0;
    int k_fail = 0;
    for (int q = 1; q < 40; ++q) {
        Rational g(q, 40);
        if (is_integer(g)) continue;
        GammaParams p = GammaParams::make(g);
        double c0 = dtn_constant_even(p, 0).value(p), cs = cs_normalization(g);
        double e = std::fabs(c0 - cs) / std::fabs(cs);
        worst = std::max(worst, e);
        if (!(e <= 1e-12)) o.pass = false;
    }
    for (const auto& g : default_gamma_sweep()) absorb(o, verify_dtn_constants(GammaParams::make(g)), worst);
    for (int k = 0; k <= 6; ++k) {
        VerificationReport r = verify_half_integer_constants(k);
        if (!r.pass) ++k_fail;
        absorb(o, r, worst);
    }
    o.summary = "c_0 vs extension normalization and Yang constant vs c_0, max rel err " + fmt("%.2e", worst) +
                " (tol 1e-12); half-integer double-factorial formulas: " + std::to_string(7 - k_fail) + "/7 values of k exact";
    return o;
}

Outcome independent_dtn() {
    Outcome o;
    auto t0 = Clock::now();
    double worst = 0;
    auto gammas = default_gamma_sweep();
    gammas.pop_back();
    for (const auto& g : gammas) absorb(o, verify_dtn_independence(GammaParams::make(g)), worst);
    double t = seconds_since(t0);
    if (t >= 300) o.pass = false;
    o.summary = "Bessel-branch extraction over " + std::to_string(gammas.size()) + " gamma values, max rel err " +
                fmt("%.2e", worst) + " (tol 1e-8), runtime " + fmt("%.1f", t) + " s";
    return o;
}

Outcome classical_case() {
    Outcome o;
    double worst = 0;
    GridField f = gaussian_field(1, 256, 40.0, 1.0, 1.5);
    absorb(o, verify_classical_extension(f), worst);
    absorb(o, classical_energy_check(f), worst);
    o.summary = "gamma = 1/2: DtN vs |xi| symbol and energy vs half-Laplacian pairing, max rel err " + fmt("%.2e", worst) +
                " (tol 1e-6)";
    return o;
}

Outcome symmetry_consistency() {
    Outcome o;
    double worst = 0;
    int pairs = 0;
    for (Rational g : {Rational(3, 2), Rational(7, 3), Rational(5, 2), Rational(7, 2)}) {
        GammaParams p = GammaParams::make(g);
        for (unsigned s = 0; s < 5; ++s, ++pairs)
            absorb(o, verify_q_symmetry(p, random_modal_field(p, 2 * s), random_modal_field(p, 2 * s + 1)), worst);
    }
    o.summary = std::to_string(pairs) + " seeded pairs, max scaled err " + fmt("%.2e", worst) +
                " (symmetry tol 1e-8, consistency tol 1e-7)";
    return o;
}

Outcome dirichlet_principle() {
    Outcome o;
    double worst = 0;
    for (const auto& g : default_gamma_sweep()) {
        GammaParams p = GammaParams::make(g);
        absorb(o, dirichlet_principle_check(p, gaussian_data(p)), worst);
    }
    o.summary = "quadraticity at t in {-1, 1/2, 1, 2} over 10 gamma values, max rel err " + fmt("%.2e", worst) +
                " (tol 1e-7), E(W) > 0";
    return o;
}

Outcome sharp_sobolev() {
    Outcome o;
    double worst = 0;
    Bubble b;
    b.n = 2;
    b.gamma_tilde = 0.5;
    VerificationReport r = sharp_sobolev_check(b, default_bumps(2));
    absorb(o, r, worst);
    std::ostringstream ss;
    ss << "n = 2, gamma = 1/2, S = sqrt(pi) = " << fmt("%.12f", sobolev_constant(2, 0.5)) << "; max |R - 1| "
       << fmt("%.2e", worst) << " (tol 1e-2)";
    for (const auto& d : r.details)
        if (d.find("margin") != std::string::npos) ss << "; " << d;
    o.summary = ss.str();
    return o;
}

Outcome lebedev_milin() {
    Outcome o;
    double worst = 0;
    VerificationReport r = lebedev_milin_check();
    absorb(o, r, worst);
    o.summary = "extremals at 3 (epsilon, xi), max |ratio - 1| " + fmt("%.2e", worst) + " (tol 1e-3); 3 strict perturbations";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::map<std::string, std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"c1", {"exact identity suite", exact_identities}},
        {"c2", {"constant cross-checks", constant_cross_checks}},
        {"c3", {"independent DtN verification", independent_dtn}},
        {"c4", {"classical case", classical_case}},
        {"c5", {"symmetry and consistency of Q", symmetry_consistency}},
        {"c6", {"Dirichlet principle", dirichlet_principle}},
        {"c7", {"sharp Sobolev", sharp_sobolev}},
        {"c8", {"Lebedev-Milin", lebedev_milin}},
    };
    std::vector<std::string> selected;
    for (int i = 1; i < argc; ++i) {
        if (!criteria.count(argv[i])) {
            std::cerr << "unknown criterion " << argv[i] << "\n";
            return 2;
        }
        selected.push_back(argv[i]);
    }
    if (selected.empty())
        for (const auto& [k, v] : criteria) selected.push_back(k);

    bool all = true;
    for (const auto& key : selected) {
        const auto& [title, fn] = criteria.at(key);
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << key << " " << title << ": " << o.summary << std::endl;
    }
    return all ? 0 : 1;
}
