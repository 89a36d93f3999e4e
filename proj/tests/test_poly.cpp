#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fractrace/poly_checks.hpp"
#include "fractrace/suite.hpp"
#include "fractrace/weighted_poly.hpp"

using namespace fractrace;

TEST_CASE("Laplacian of simple monomials") {
    // Delta |x|^2 = 2n on the boundary
    for (int n : {1, 2, 3}) {
        WeightedPoly r2 = WeightedPoly::monomial(n, Rational(1, 2), 1, 1, std::vector<int>(n, 0));
        r2.has_y = false;
        WeightedPoly lap = apply_laplacian(r2);
        WeightedPoly expect(n, Rational(1, 2), false);
        expect.add_term({Rational(0), std::vector<int>(n, 0), 0, 0}, 2 * n);
        CHECK(lap.same_function(expect));
    }
    // weighted Laplacian kills both branch roots
    GammaParams p = GammaParams::make(Rational(4, 3), 1);
    WeightedPoly one = WeightedPoly::monomial(1, p.frac_gamma, 1, 0, {0}, 0, 0);
    WeightedPoly yb = WeightedPoly::monomial(1, p.frac_gamma, 1, 0, {0}, 0, 1);
    CHECK(apply_weighted_laplacian(one, p.m).canonical().is_zero());
    CHECK(apply_weighted_laplacian(yb, p.m).canonical().is_zero());
}

TEST_CASE("shifted Gamma quotients") {
    CHECK(gamma_shift_ratio(Rational(7, 2), 2) == Rational(5, 2) * Rational(3, 2));
    CHECK(gamma_shift_ratio(Rational(5), 0) == 1);
    CHECK_THROWS_AS(gamma_shift_ratio(Rational(-1), 1), PoleError);
}

TEST_CASE("the full polynomial suite holds exactly across the sweep") {
    for (const auto& g : default_gamma_sweep())
        for (int n : {1, 2}) {
            auto rep = verify_poly_suite(GammaParams::make(g, n), 6, 11);
            CHECK_MESSAGE(rep.pass, g.get_str() << " n=" << n);
        }
}

TEST_CASE("commutator identity holds for any weight and detects a wrong shift") {
    auto samples = standard_samples(2, Rational(1, 3));
    for (Rational m : {Rational(1, 3), Rational(-5, 7), Rational(2)}) CHECK(verify_commutator(m, 2, samples).pass);
    const Rational m(1, 3);
    bool differs = false;
    for (const auto& U : samples) {
        WeightedPoly lhs = apply_weighted_laplacian(U, m - 4);
        lhs = apply_weighted_laplacian(lhs, m);
        lhs = apply_weighted_laplacian(lhs, m + 3);
        if (!lhs.same_function(apply_weighted_laplacian_power(U, m, 3))) differs = true;
    }
    CHECK(differs);
}

TEST_CASE("suite at n = 2 with integer half-dimension") {
    for (Rational g : {Rational(1, 3), Rational(4, 5), Rational(7, 3)}) {
        auto rep = verify_poly_suite(GammaParams::make(g, 2));
        CHECK_MESSAGE(rep.pass, g.get_str());
    }
}

TEST_CASE("trace coefficients need a y variable") {
    WeightedPoly b(1, Rational(1, 2), false);
    b.add_term({Rational(0), {0}, 0, 0}, 1);
    CHECK_THROWS(trace_coefficient(b, 0, 0));
}
