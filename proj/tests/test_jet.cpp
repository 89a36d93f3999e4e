#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fractrace/jet.hpp"
#include "fractrace/suite.hpp"

using namespace fractrace;

TEST_CASE("index sets") {
    GammaParams p = GammaParams::make(Rational(7, 2));
    auto dir = dirichlet_indices(p), neu = neumann_indices(p);
    REQUIRE(dir.size() == 4);
    REQUIRE(neu.size() == 4);
    CHECK(dir[0].name(p) == "B_0");
    CHECK(dir[1].name(p) == "B_2");
    CHECK(dir[2].name(p) == "B_1");
    CHECK(dir[3].name(p) == "B_3");
    CHECK(neu[0].name(p) == "B_7");
    CHECK(neu[1].name(p) == "B_5");
    CHECK(neu[2].name(p) == "B_6");
    CHECK(neu[3].name(p) == "B_4");
    CHECK(all_indices(p).size() == 8);
    CHECK(BIndex::from_order(p, Rational(5)).name(p) == "B_5");
    CHECK_THROWS(BIndex::from_order(p, Rational(9)));
}

TEST_CASE("boundary expressions are canonical") {
    BoundaryExpr a = BoundaryExpr::symbol("f", false, 1, Rational(2, 3));
    BoundaryExpr b = BoundaryExpr::symbol("f", false, 1, Rational(-2, 3));
    CHECK((a + b).is_zero());
    CHECK(a.tangential(2).max_lap() == 3);
    CHECK(a.scaled(3).coefficient({"f", 1, false}) == 2);
}

TEST_CASE("lowest boundary operators are plain traces") {
    GammaParams p = GammaParams::make(Rational(5, 2));
    Jet jet = make_generic_jet(p, default_truncation(p));
    CHECK(boundary_operator(p, BIndex{Family::Even, 0}, jet) == restrict(jet));
    // B_{2[gamma]} is minus the weighted normal derivative
    CHECK(boundary_operator(p, BIndex{Family::Odd, 0}, jet) == restrict_weighted_neumann(jet).scaled(-1));
}

TEST_CASE("trace factors") {
    GammaParams p = GammaParams::make(Rational(7, 3));
    CHECK(trace_factor(p, false, 0) == 1);
    CHECK(trace_factor(p, false, 2) == 4 * (1 - Rational(1, 3)) * 8 * (2 - Rational(1, 3)));
    CHECK(trace_factor(p, true, 0) == Rational(2, 3));
    CHECK(trace_factor(p, true, 1) == Rational(2, 3) * 4 * (1 + Rational(1, 3)));
}

TEST_CASE("scattering relations and Laplacian expansions hold exactly") {
    for (const auto& g : default_gamma_sweep()) {
        GammaParams p = GammaParams::make(g);
        auto s = verify_scattering_relations(p);
        auto o = verify_operators_via_laplacian(p);
        CHECK_MESSAGE(s.pass, g.get_str());
        CHECK_MESSAGE(o.pass, g.get_str());
    }
    GammaParams p = GammaParams::make(Rational(7, 3));
    CHECK(verify_scattering_relations(p).pass);
    CHECK(verify_operators_via_laplacian(p).pass);
}

TEST_CASE("expansion applied to a generic jet reproduces the recursive operator") {
    GammaParams p = GammaParams::make(Rational(9, 2));
    Jet jet = make_generic_jet(p, default_truncation(p));
    for (BIndex idx : all_indices(p))
        CHECK(apply_expansion(p, boundary_operator_expansion(p, idx), jet) == boundary_operator(p, idx, jet));
}

TEST_CASE("a wrong recursion coefficient breaks the expansion identity") {
    GammaParams p = GammaParams::make(Rational(5, 2));
    Jet jet = make_generic_jet(p, default_truncation(p));
    BIndex idx{Family::Even, 2};
    OperatorPoly op = boundary_operator_expansion(p, idx);
    REQUIRE(!op.empty());
    op.begin()->second += Rational(1, 1000);
    CHECK_FALSE(apply_expansion(p, op, jet) == boundary_operator(p, idx, jet));
}
