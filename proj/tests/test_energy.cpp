#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fractrace/energy.hpp"
#include "fractrace/inequalities.hpp"

#include <cmath>
#include <numbers>

using namespace fractrace;

namespace {

std::vector<GridField> gauss_data(const GammaParams& p, int N = 128, double L = 30.0) {
    std::vector<GridField> data;
    for (std::size_t i = 0; i < dirichlet_indices(p).size(); ++i)
        data.push_back(gaussian_field(1, N, L, 1.0 / (1 + i), 1.5 + 0.5 * i, 0.3 * i));
    return data;
}

}  // namespace

TEST_CASE("zero data has zero energy") {
    GammaParams p = GammaParams::make(Rational(7, 3));
    std::vector<GridField> data(dirichlet_indices(p).size(), GridField::uniform(1, 64, 20.0));
    EnergyBreakdown e = energy(solve_extension(p, data));
    CHECK(e.interior == 0.0);
    CHECK(e.q_form == 0.0);
    CHECK(dtn_energy(p, data) == 0.0);
}

TEST_CASE("no boundary correction below gamma = 1") {
    GammaParams p = GammaParams::make(Rational(1, 3));
    ModalField u = random_modal_field(p, 3), v = random_modal_field(p, 4);
    EnergyBreakdown e = energy_form(p, u, v);
    CHECK(e.boundary_correction == 0.0);
    CHECK(std::fabs(e.q_form - e.interior) <= 1e-9 * (std::fabs(e.q_form) + 1));
}

TEST_CASE("Q is symmetric for random pairs") {
    for (Rational g : {Rational(3, 2), Rational(7, 3), Rational(5, 2), Rational(7, 2)}) {
        GammaParams p = GammaParams::make(g);
        for (unsigned s = 0; s < 3; ++s)
            CHECK_MESSAGE(verify_q_symmetry(p, random_modal_field(p, 10 + s), random_modal_field(p, 20 + s)).pass, g.get_str());
    }
}

TEST_CASE("pure-branch fields") {
    GammaParams p = GammaParams::make(Rational(7, 3));
    for (BranchChoice b : {BranchChoice::EvenOnly, BranchChoice::OddOnly}) {
        ModalField u = random_modal_field(p, 5, b), v = random_modal_field(p, 6, b);
        CHECK(verify_q_symmetry(p, u, v).pass);
    }
    ModalField u = random_modal_field(p, 5, BranchChoice::EvenOnly), v = random_modal_field(p, 6, BranchChoice::OddOnly);
    CHECK(verify_q_symmetry(p, u, v).pass);
}

TEST_CASE("energy of the extension matches the DtN pairing") {
    for (Rational g : {Rational(1, 2), Rational(4, 3), Rational(7, 3), Rational(7, 2)}) {
        GammaParams p = GammaParams::make(g);
        auto data = gauss_data(p);
        EnergyBreakdown e = energy(solve_extension(p, data));
        double rhs = dtn_energy(p, data);
        CHECK_MESSAGE(std::fabs(e.q_form - rhs) <= 1e-6 * std::fabs(rhs), g.get_str());
        CHECK(std::fabs(e.q_form - (e.interior - e.boundary_correction)) <= 1e-7 * std::fabs(rhs));
    }
}

TEST_CASE("a mis-scaled boundary correction is detected") {
    GammaParams p = GammaParams::make(Rational(5, 2));
    auto data = gauss_data(p);
    EnergyBreakdown e = energy(solve_extension(p, data));
    REQUIRE(std::fabs(e.boundary_correction) > 0);
    double wrong = e.interior - 1.01 * e.boundary_correction;
    CHECK(std::fabs(wrong - e.dtn_rhs) > 1e-6 * std::fabs(e.dtn_rhs));
}

TEST_CASE("Dirichlet principle") {
    GammaParams p = GammaParams::make(Rational(7, 3));
    auto data = gauss_data(p);
    CHECK(dirichlet_principle_check(p, data).pass);
    CHECK(dirichlet_principle_check(p, data, 0.0).pass);
}

TEST_CASE("sharp constants") {
    CHECK(sobolev_constant(2, 0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
    CHECK(sphere_volume(1) == doctest::Approx(2 * std::numbers::pi));
    CHECK(sphere_volume(2) == doctest::Approx(4 * std::numbers::pi));
    Bubble bad{2, 1.5, 1.0, 1.0, {}};
    CHECK_THROWS(bad.validate());
    Bubble neg{2, 0.5, 1.0, -1.0, {}};
    CHECK_THROWS(neg.validate());
}

TEST_CASE("logarithmic extremal has vanishing deficit") {
    const int N = 16384;
    const double h = 0.05;
    GridField f = GridField::uniform(1, N, N * h);
    f.fill([](const std::vector<double>& x) { return log_extremal(x[0], 1.0, 0.5); });
    LebedevMilinSides s = lebedev_milin_sides(f, 0.0);
    CHECK(std::fabs(s.energy - s.log_side) < 1e-2 * s.energy);
}
