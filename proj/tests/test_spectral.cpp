#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fractrace/bessel.hpp"
#include "fractrace/extension.hpp"
#include "fractrace/gamma_core.hpp"
#include "fractrace/grid_field.hpp"
#include "fractrace/mode_function.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

using namespace fractrace;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("fractrace_test_" + name)).string();
}

}  // namespace

TEST_CASE("bessel_k agrees with the standard library") {
    for (double nu : {0.1, 0.25, 0.5, 1.3, 2.75, 4.6, 7.2})
        for (double t : {0.05, 0.5, 1.0, 1.99, 2.01, 5.0, 20.0, 60.0})
            CHECK_MESSAGE(rel(bessel_k(nu, t), std::cyl_bessel_k(nu, t)) < 1e-12, "nu=" << nu << " t=" << t);
    CHECK(rel(bessel_k(-1.3, 0.7), bessel_k(1.3, 0.7)) < 1e-15);
    CHECK(rel(bessel_i(0.3, 1.5), std::cyl_bessel_i(0.3, 1.5)) < 1e-13);
}

TEST_CASE("Frobenius coefficients reproduce K near zero") {
    FrobeniusK fk = frobenius_k(0.4, 30);
    double t = 0.8, s = 0;
    for (std::size_t l = 0; l < fk.lower.size(); ++l)
        s += fk.lower[l] * std::pow(t / 2, 2.0 * l - 0.4) + fk.upper[l] * std::pow(t / 2, 2.0 * l + 0.4);
    CHECK(rel(s, std::cyl_bessel_k(0.4, t)) < 1e-13);
}

TEST_CASE("integral of t K_nu(t)^2 against its closed form") {
    // int_0^inf t K_nu^2 dt = pi nu / (2 sin(pi nu)) for |nu| < 1
    const double nu = 0.25;
    double s = 0;
    const double a = -30, b = 4.5, h = (b - a) / 20000;
    for (int i = 0; i <= 20000; ++i) {
        double u = a + i * h, t = std::exp(u);
        double w = (i == 0 || i == 20000) ? 1 : (i % 2 ? 4 : 2);
        double k = bessel_k(nu, t);
        s += w * t * t * k * k;
    }
    s *= h / 3;
    CHECK(rel(s, std::numbers::pi * nu / (2 * std::sin(std::numbers::pi * nu))) < 1e-9);

    // same integral through weighted_inner: frac 1/8 gives weight y^{3/4}, f = K_nu, g = y^{1/4} K_nu
    ModeFunction f(0.125, 1.0), g(0.125, 1.0);
    f.add_bessel({{-1, 0}, {1, 0}}, 1.0);
    g.add_bessel({{0, 0}, {2, 0}}, 1.0);
    CHECK(rel(weighted_inner(f, g), std::numbers::pi * nu / (2 * std::sin(std::numbers::pi * nu))) < 1e-9);
}

TEST_CASE("grid construction and file round trip") {
    GridField g = GridField::uniform(2, 8, 4.0);
    CHECK(g.size() == 64);
    CHECK(g.coordinate(0, 0) == doctest::Approx(-2.0));
    g.fill([](const std::vector<double>& x) { return x[0] + 10 * x[1]; });
    std::string path = tmp_path("grid.bin");
    save_grid(g, path);
    GridField back = load_grid(path);
    CHECK(back.same_grid(g));
    CHECK(back.values == g.values);
    std::filesystem::remove(path);
    std::filesystem::remove(path + ".json");
}

TEST_CASE("grid I/O errors") {
    CHECK_THROWS_AS(load_grid(tmp_path("missing.bin")), GridError);
    std::string path = tmp_path("short.bin");
    GridField g = GridField::uniform(1, 16, 2.0);
    save_grid(g, path);
    {
        std::ofstream trunc(path, std::ios::binary | std::ios::trunc);
        trunc.write("abc", 3);
    }
    CHECK_THROWS_AS(load_grid(path), GridError);
    std::filesystem::remove(path);
    std::filesystem::remove(path + ".json");

    std::string csv = tmp_path("empty.csv");
    {
        std::ofstream out(csv);
        out << "value\n";
    }
    CHECK_THROWS_AS(load_csv(csv, 1.0), GridError);
    std::filesystem::remove(csv);
}

TEST_CASE("FFT round trip and fractional Laplacian of a cosine") {
    const double L = 2 * std::numbers::pi;
    GridField f = GridField::uniform(1, 64, L);
    f.fill([](const std::vector<double>& x) { return std::cos(3 * x[0]); });
    GridField back = fft_inverse_real(f, fft_forward(f));
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(back.values[i] == doctest::Approx(f.values[i]).epsilon(1e-13));
    for (double s : {0.25, 0.5, 1.3}) {
        GridField lap = fractional_laplacian_fft(f, s);
        for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::fabs(lap.values[i] - std::pow(3.0, 2 * s) * f.values[i]) < 1e-11);
    }
    CHECK(fractional_pairing(f, f, 0.5) == doctest::Approx(3 * std::numbers::pi).epsilon(1e-12));

    GridField f2 = GridField::uniform(2, 32, L);
    f2.fill([](const std::vector<double>& x) { return std::cos(x[0] + 2 * x[1]); });
    GridField lap2 = fractional_laplacian_fft(f2, 0.5);
    for (std::size_t i = 0; i < f2.size(); ++i) CHECK(std::fabs(lap2.values[i] - std::sqrt(5.0) * f2.values[i]) < 1e-11);
}

TEST_CASE("serial and parallel extension solves are identical") {
    for (Rational g : {Rational(1, 3), Rational(7, 3), Rational(7, 2)}) {
        GammaParams p = GammaParams::make(g);
        std::vector<GridField> data;
        for (std::size_t i = 0; i < dirichlet_indices(p).size(); ++i)
            data.push_back(gaussian_field(1, 128, 30.0, 1.0 / (1 + i), 1.5 + 0.5 * i, 0.3 * i));
        ExtensionSolution par = solve_extension(p, data, {true});
        ExtensionSolution ser = solve_extension(p, data, {false});
        REQUIRE(par.coeffs.size() == ser.coeffs.size());
        for (std::size_t k = 0; k < par.coeffs.size(); ++k) CHECK(par.coeffs[k] == ser.coeffs[k]);
        GridField a = par.evaluate(0.7), b = ser.evaluate(0.7);
        CHECK(a.values == b.values);
    }
}

TEST_CASE("DtN output equals the scaled fractional Laplacian for gamma below one") {
    for (Rational g : {Rational(1, 3), Rational(1, 2), Rational(4, 5)}) {
        GammaParams p = GammaParams::make(g);
        GridField f = gaussian_field(1, 256, 40.0, 1.0, 2.0);
        ExtensionSolution sol = solve_extension(p, {f});
        GridField dtn = dtn_apply(sol, neumann_indices(p).front());
        GridField ref = fractional_laplacian_fft(f, to_double(g));
        const double c0 = cs_normalization(g);
        double err = 0, scale = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            err = std::max(err, std::fabs(dtn.values[i] - c0 * ref.values[i]));
            scale = std::max(scale, std::fabs(c0 * ref.values[i]));
        }
        CHECK(err / scale < 1e-9);
    }
}

TEST_CASE("extension at y = 0 returns the data") {
    GammaParams p = GammaParams::make(Rational(5, 2));
    std::vector<GridField> data;
    for (int i = 0; i < 3; ++i) data.push_back(gaussian_field(1, 128, 30.0, 1.0 / (1 + i), 1.5 + 0.5 * i, 0.3 * i));
    ExtensionSolution sol = solve_extension(p, data);
    auto dir = dirichlet_indices(p);
    for (std::size_t i = 0; i < dir.size(); ++i) {
        GridField b = sol.boundary(dir[i]);
        for (std::size_t x = 0; x < b.size(); ++x) CHECK(std::fabs(b.values[x] - data[i].values[x]) < 1e-9);
    }
}

TEST_CASE("solver rejects malformed data") {
    GammaParams p = GammaParams::make(Rational(7, 3));
    GridField f = gaussian_field(1, 64, 20.0, 1.0, 1.5);
    CHECK_THROWS(solve_extension(p, {f}));
    GridField other = gaussian_field(1, 32, 20.0, 1.0, 1.5);
    CHECK_THROWS(solve_extension(p, {f, other}));
}

TEST_CASE("profiles solve the mode equation") {
    for (Rational g : {Rational(1, 2), Rational(7, 3), Rational(9, 2)}) {
        GammaParams p = GammaParams::make(g);
        for (const auto& prof : build_profiles(p)) CHECK(profile_residual(prof) < 1e-6);
    }
}
