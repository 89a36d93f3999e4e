#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fractrace/gamma_core.hpp"

#include <cmath>

using namespace fractrace;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

// Gamma-function formulas for the DtN constants, evaluated directly with std::tgamma.
double c_direct(double g, int j) {
    int F = static_cast<int>(std::floor(g));
    double fr = g - F;
    return ((1 + F) % 2 ? -1.0 : 1.0) * std::pow(2.0, 1 - 2 * fr) * std::tgamma(F - j + 1.0) * std::tgamma(1 - fr) *
           std::tgamma(1 - j + g) * std::tgamma(2 * j - g) /
           (std::tgamma(j + 1.0) * std::tgamma(fr) * std::tgamma(1 + j - fr) * std::tgamma(g - 2 * j));
}

double d_direct(double g, int j) {
    int F = static_cast<int>(std::floor(g));
    double fr = g - F;
    return (F % 2 ? -1.0 : 1.0) * std::pow(2.0, 2 * fr - 1) * std::tgamma(F - j + 1.0) * std::tgamma(fr) *
           std::tgamma(1 + F - j - fr) * std::tgamma(2 * j - F + fr) /
           (std::tgamma(j + 1.0) * std::tgamma(1 - fr) * std::tgamma(1 + j + fr) * std::tgamma(F - fr - 2 * j));
}

std::vector<Rational> fifty_gammas() {
    std::vector<Rational> out;
    for (int q : {3, 5, 7, 11})
        for (int p = 1; p < 5 * q && out.size() < 52; p += 2)
            if (p % q != 0) out.emplace_back(p, q);
    return out;
}

}  // namespace

TEST_CASE("parsing and validation of gamma") {
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-1.5e-2") == Rational(-3, 200));
    CHECK(parse_rational("7/3") == Rational(7, 3));
    CHECK_THROWS_AS(GammaParams::parse("2"), std::invalid_argument);
    CHECK_THROWS_AS(GammaParams::parse("-1/2"), std::invalid_argument);
    CHECK_THROWS(parse_rational("abc"));
    GammaParams p = GammaParams::parse("7/3");
    CHECK(p.floor_gamma == 2);
    CHECK(p.frac_gamma == Rational(1, 3));
    CHECK(p.k == 3);
    CHECK(p.m == Rational(1, 3));
    CHECK(p.half_floor() == 1);
    CHECK(p.even_count() == 2);
    CHECK(p.odd_count() == 1);
}

TEST_CASE("pochhammer ratios and poles") {
    CHECK(pochhammer_ratio(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(pochhammer_ratio(Rational(5, 2), -2) == Rational(4, 3));
    CHECK(pochhammer_ratio(Rational(-2), 1) == Rational(-2));
    CHECK_THROWS_AS(pochhammer_ratio(Rational(-2), 3), PoleError);
}

TEST_CASE("double factorial and binomial conventions") {
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(-3) == -1);
    CHECK(double_factorial(7) == 105);
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
}

TEST_CASE("floating Gamma against the standard library") {
    for (double x = -4.75; x < 30; x += 0.37) CHECK(rel(gamma_fn(x), std::tgamma(x)) < 1e-13);
}

TEST_CASE("extension normalization on (0,1)") {
    CHECK(cs_normalization(Rational(1, 2)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel(cs_normalization(Rational(1, 4)), std::sqrt(2.0) * std::tgamma(0.75) / std::tgamma(0.25)) < 1e-13);
    CHECK(rel(cs_normalization(Rational(1, 100)), std::pow(2.0, 0.98) * std::tgamma(0.99) / std::tgamma(0.01)) < 1e-12);
    CHECK_THROWS(cs_normalization(Rational(3, 2)));
}

TEST_CASE("DtN constants match the Gamma formulas for fifty gamma values") {
    auto gs = fifty_gammas();
    REQUIRE(gs.size() >= 50);
    for (const auto& g : gs) {
        GammaParams p = GammaParams::make(g);
        const double gd = to_double(g);
        for (int j = 0; j <= p.half_floor(); ++j) CHECK(rel(dtn_constant_even(p, j).value(p), c_direct(gd, j)) < 1e-12);
        for (int j = 0; j < p.odd_count(); ++j) CHECK(rel(dtn_constant_odd(p, j).value(p), d_direct(gd, j)) < 1e-12);
        CHECK(rel(yang_constant(p).value(p), dtn_constant_even(p, 0).value(p)) < 1e-12);
        if (p.floor_gamma == 0) CHECK(rel(dtn_constant_even(p, 0).value(p), cs_normalization(g)) < 1e-12);
    }
}

TEST_CASE("DtN constants at half-integers") {
    GammaParams half = GammaParams::make(Rational(1, 2));
    CHECK(dtn_constant_even(half, 0).value(half) == doctest::Approx(1.0).epsilon(1e-14));
    // Closed forms of the odd family: 2 at 3/2 and 8 at 5/2, confirmed by the extension solver.
    GammaParams p32 = GammaParams::make(Rational(3, 2)), p52 = GammaParams::make(Rational(5, 2));
    CHECK(dtn_constant_odd(p32, 0).value(p32) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(dtn_constant_odd(p52, 0).value(p52) == doctest::Approx(8.0).epsilon(1e-14));
}

TEST_CASE("index ranges are enforced") {
    GammaParams small = GammaParams::make(Rational(1, 3));
    CHECK_THROWS(dtn_constant_odd(small, 0));
    CHECK_THROWS(symmetry_constant(small, 0, 0));
    GammaParams p = GammaParams::make(Rational(7, 2));
    CHECK_THROWS(dtn_constant_even(p, 2));
    CHECK_THROWS(dtn_constant_odd(p, 2));
    CHECK_NOTHROW(dtn_constant_odd(p, 1));
}

TEST_CASE("symmetry constant for gamma in (1,2)") {
    for (Rational g : {Rational(4, 3), Rational(3, 2), Rational(7, 4)}) {
        GammaParams p = GammaParams::make(g);
        CHECK(rel(symmetry_constant(p, 0, 0).value(p), to_double(1 / p.frac_gamma)) < 1e-13);
    }
}

TEST_CASE("F, H, K sums equal their closed forms") {
    GammaParams p32 = GammaParams::make(Rational(3, 2)), p73 = GammaParams::make(Rational(7, 3));
    CHECK(brute_force_F(0, 1, p32) == closed_form_F(0, 1, p32));
    CHECK(brute_force_F(2, 3, p73) == closed_form_F(2, 3, p73));
    CHECK(brute_force_H(1, 1, Rational(5, 3)) == closed_form_H(1, 1, Rational(5, 3)));
    CHECK(brute_force_H(3, 5, Rational(9, 4)) == closed_form_H(3, 5, Rational(9, 4)));
    CHECK(brute_force_K(Rational(7, 2), Rational(4, 3), 4) == closed_form_K(Rational(7, 2), Rational(4, 3), 4));
    CHECK(brute_force_K(Rational(2, 7), Rational(1, 5), 0) == 1);
    CHECK(brute_force_K(Rational(2, 7), Rational(1, 5), 1) == Rational(2, 7) + Rational(1, 5) - 1);

    int checked = 0;
    for (int q = 1; q <= 20; ++q) {
        Rational g(2 * q + 1, 7);
        g.canonicalize();
        if (is_integer(g)) continue;
        for (long nn = 0; nn <= 8; ++nn)
            for (long d = 0; d <= 8; ++d) {
                try {
                    Rational a = brute_force_H(nn, d, g), b = closed_form_H(nn, d, g);
                    CHECK(a == b);
                    ++checked;
                } catch (const PoleError&) {
                }
            }
    }
    CHECK(checked > 1000);
}

TEST_CASE("a perturbed closed form is detected") {
    GammaParams p = GammaParams::make(Rational(7, 3));
    int differ = 0;
    for (long j = 0; j <= 4; ++j)
        for (long l = 1; l <= 4; ++l)
            if (brute_force_F(j, l, p) != closed_form_F(j, l - 1, p)) ++differ;
    CHECK(differ == 20);
}
