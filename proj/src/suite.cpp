#include "fractrace/suite.hpp"

#include "fractrace/energy.hpp"
#include "fractrace/extension.hpp"
#include "fractrace/inequalities.hpp"
#include "fractrace/jet.hpp"
#include "fractrace/poly_checks.hpp"

#include <cmath>
#include <functional>

namespace fractrace {

std::vector<Rational> default_gamma_sweep() {
    return {Rational(1, 3), Rational(1, 2), Rational(4, 5),  Rational(4, 3), Rational(3, 2),
            Rational(9, 4), Rational(5, 2), Rational(10, 3), Rational(7, 2), Rational(9, 2)};
}

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

template <class F>
void compare_exact(VerificationReport& rep, const std::string& what, F&& brute, F&& closed, int& checked, int& poles) {
    try {
        Rational a = brute(), b = closed();
        ++checked;
        if (a != b) rep.fail(what + ": brute force " + to_string(a) + " != closed form " + to_string(b));
    } catch (const PoleError&) {
        ++poles;
    }
}

double direct_even(const GammaParams& p, int j) {
    const double g = to_double(p.gamma), fr = to_double(p.frac_gamma);
    const int F = static_cast<int>(p.floor_gamma);
    return ((1 + F) % 2 ? -1.0 : 1.0) * std::pow(2.0, 1 - 2 * fr) * std::tgamma(F - j + 1.0) * std::tgamma(1 - fr) *
           std::tgamma(1 - j + g) * std::tgamma(2 * j - g) /
           (std::tgamma(j + 1.0) * std::tgamma(fr) * std::tgamma(1 + j - fr) * std::tgamma(g - 2 * j));
}

double direct_odd(const GammaParams& p, int j) {
    const double fr = to_double(p.frac_gamma);
    const int F = static_cast<int>(p.floor_gamma);
    return (F % 2 ? -1.0 : 1.0) * std::pow(2.0, 2 * fr - 1) * std::tgamma(F - j + 1.0) * std::tgamma(fr) *
           std::tgamma(1 + F - j - fr) * std::tgamma(2 * j - F + fr) /
           (std::tgamma(j + 1.0) * std::tgamma(1 - fr) * std::tgamma(1 + j + fr) * std::tgamma(F - fr - 2 * j));
}

// value of an exact constant when [gamma] = 1/2, where the Gamma ratio is 1 and the power of two is an integer
Rational half_integer_value(const ExactConstant& c) {
    if (!is_integer(c.two_power)) throw std::logic_error("non-integer power of two at a half-integer");
    long e = floor_of(c.two_power);
    return e >= 0 ? Rational(c.rational_part * rational_pow(2, e)) : Rational(c.rational_part / rational_pow(2, -e));
}

}  // namespace

VerificationReport verify_closed_forms(const GammaParams& p) {
    VerificationReport rep("closed_forms", p.label(), p.n);
    int checked = 0, poles = 0;
    using Fn = std::function<Rational()>;
    for (long j = 0; j <= 8; ++j)
        for (long l = 0; l <= 8; ++l)
            compare_exact(rep, "F(" + std::to_string(j) + "," + std::to_string(l) + ")",
                          Fn([&] { return brute_force_F(j, l, p); }), Fn([&] { return closed_form_F(j, l, p); }), checked,
                          poles);
    for (const Rational& g : {p.gamma, p.frac_gamma, Rational(p.gamma - p.half_floor())})
        for (long nn = 0; nn <= 8; ++nn)
            for (long d = 0; d <= 8; ++d)
                compare_exact(rep, "H(" + std::to_string(nn) + "," + std::to_string(d) + "," + to_string(g) + ")",
                              Fn([&] { return brute_force_H(nn, d, g); }), Fn([&] { return closed_form_H(nn, d, g); }),
                              checked, poles);
    const std::pair<Rational, Rational> ab[] = {{p.gamma, p.frac_gamma}, {p.gamma / 2, 1 - p.frac_gamma}, {Rational(7, 2), p.gamma}};
    for (const auto& [a, b] : ab)
        for (long j = 0; j <= 8; ++j)
            compare_exact(rep, "K(" + to_string(a) + "," + to_string(b) + "," + std::to_string(j) + ")",
                          Fn([&] { return brute_force_K(a, b, j); }), Fn([&] { return closed_form_K(a, b, j); }), checked,
                          poles);
    rep.note(std::to_string(checked) + " exact equalities checked, " + std::to_string(poles) + " index choices skipped at poles");
    return rep;
}

VerificationReport verify_dtn_constants(const GammaParams& p) {
    VerificationReport rep("dtn_constants", p.label(), p.n);
    for (int j = 0; j <= p.half_floor(); ++j)
        rep.measure("c_" + std::to_string(j) + " exact form vs direct Gamma formula",
                    rel(dtn_constant_even(p, j).value(p), direct_even(p, j)), 1e-12);
    for (int j = 0; j < p.odd_count(); ++j)
        rep.measure("d_" + std::to_string(j) + " exact form vs direct Gamma formula",
                    rel(dtn_constant_odd(p, j).value(p), direct_odd(p, j)), 1e-12);
    const double c0 = dtn_constant_even(p, 0).value(p);
    const double g = to_double(p.gamma), fr = to_double(p.frac_gamma);
    const int F = static_cast<int>(p.floor_gamma);
    const double yang_direct = ((1 + F) % 2 ? -1.0 : 1.0) * std::pow(2.0, 1 - 2 * fr) * std::tgamma(F + 1.0) * g *
                               std::tgamma(-g) / std::tgamma(fr);
    rep.measure("Yang constant equals c_0", rel(yang_constant(p).value(p), c0), 1e-12);
    rep.measure("Yang constant direct Gamma formula equals c_0", rel(yang_direct, c0), 1e-12);
    if (p.floor_gamma == 0) rep.measure("c_0 equals the extension normalization", rel(c0, cs_normalization(p.gamma)), 1e-12);
    return rep;
}

VerificationReport verify_half_integer_constants(int k) {
    const GammaParams p = GammaParams::make(Rational(2 * k + 1, 2));
    VerificationReport rep("half_integer_constants", p.label(), p.n);
    auto df = [](long n) { return double_factorial(n); };
    for (int j = 0; j <= p.half_floor(); ++j) {
        Rational ref = rational_pow(2, k - 2 * j) * factorial(k - j) * df(2 * k - 2 * j + 1) /
                       (factorial(j) * df(2 * j - 1) * df(2 * k - 4 * j - 1) * df(2 * k - 4 * j + 1));
        Rational got = half_integer_value(dtn_constant_even(p, j));
        if (got == ref)
            rep.note("c_" + std::to_string(j) + " = " + to_string(got) + " exactly");
        else
            rep.fail("c_" + std::to_string(j) + " = " + to_string(got) + " but the double-factorial formula gives " + to_string(ref));
    }
    for (int j = 0; j < p.odd_count(); ++j) {
        const long e = k - 2 * j - 1;
        Rational pw = e >= 0 ? rational_pow(2, e) : Rational(1) / rational_pow(2, -e);
        Rational ref = pw * factorial(k - j) * df(2 * k - 2 * j - 1) /
                       (factorial(j) * df(2 * j + 1) * df(2 * k - 4 * j - 1) * df(2 * k - 4 * j - 3));
        Rational got = half_integer_value(dtn_constant_odd(p, j));
        if (got == ref)
            rep.note("d_" + std::to_string(j) + " = " + to_string(got) + " exactly");
        else
            rep.fail("d_" + std::to_string(j) + " = " + to_string(got) + " but the double-factorial formula gives " + to_string(ref));
    }
    return rep;
}

std::vector<VerificationReport> identity_suite(const GammaParams& p) {
    std::vector<VerificationReport> out;
    out.push_back(verify_closed_forms(p));
    out.push_back(verify_dtn_constants(p));
    out.push_back(verify_scattering_relations(p));
    out.push_back(verify_operators_via_laplacian(p));
    out.push_back(verify_poly_suite(p));
    return out;
}

namespace {

std::vector<GridField> gaussian_data(const GammaParams& p) {
    const int N = p.n == 1 ? 256 : 128;
    const double L = p.n == 1 ? 40.0 : 24.0;
    std::vector<GridField> data;
    for (std::size_t i = 0; i < dirichlet_indices(p).size(); ++i)
        data.push_back(gaussian_field(p.n, N, L, 1.0 / (1.0 + i), 1.5 + 0.5 * i, 0.3 * i));
    return data;
}

}  // namespace

std::vector<VerificationReport> numeric_suite(const GammaParams& p) {
    std::vector<VerificationReport> out;
    out.push_back(verify_dtn_independence(p));
    out.push_back(verify_profiles(p));
    const auto data = gaussian_data(p);
    out.push_back(verify_self_consistency(p, data));
    out.push_back(yang_extension_check(p, data.front()));
    if (p.gamma == Rational(1, 2)) {
        out.push_back(verify_classical_extension(data.front()));
        out.push_back(classical_energy_check(data.front()));
    }
    out.push_back(energy_trace_check(p, data));
    out.push_back(dirichlet_principle_check(p, data));
    if (p.floor_gamma >= 1) {
        VerificationReport sym("q_symmetry_pairs", p.label(), 1);
        for (unsigned s = 0; s < 5; ++s)
            sym.merge(verify_q_symmetry(p, random_modal_field(p, 2 * s), random_modal_field(p, 2 * s + 1)));
        out.push_back(sym);
    }
    return out;
}

std::vector<VerificationReport> inequality_suite() {
    return {sharp_sobolev_check(Bubble{}, default_bumps(2)), lebedev_milin_check()};
}

std::vector<VerificationReport> run_suite(const std::vector<Rational>& gammas, const SuiteOptions& opt) {
    std::vector<std::vector<VerificationReport>> per(gammas.size());
    const long count = static_cast<long>(gammas.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
        const GammaParams p = GammaParams::make(gammas[i], opt.n);
        if (opt.identities)
            for (auto& r : identity_suite(p)) per[i].push_back(std::move(r));
        if (opt.numeric)
            for (auto& r : numeric_suite(p)) per[i].push_back(std::move(r));
    }
    std::vector<VerificationReport> out;
    for (auto& v : per)
        for (auto& r : v) out.push_back(std::move(r));
    if (opt.numeric)
        for (auto& r : inequality_suite()) out.push_back(std::move(r));
    return out;
}

}  // namespace fractrace
