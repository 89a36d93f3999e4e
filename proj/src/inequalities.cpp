#include "fractrace/inequalities.hpp"

#include "fractrace/rational.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fractrace {

void Bubble::validate() const {
    if (n != 1 && n != 2) throw std::invalid_argument("bubble dimension must be 1 or 2");
    if (!(epsilon > 0)) throw std::invalid_argument("bubble needs epsilon > 0");
    if (!(n > 2 * gamma_tilde) || !(gamma_tilde > 0)) throw std::invalid_argument("bubble needs 0 < 2 gamma < n");
    if (!xi.empty() && static_cast<int>(xi.size()) != n) throw std::invalid_argument("bubble center has wrong dimension");
}

double Bubble::operator()(const std::vector<double>& x) const {
    double r2 = 0;
    for (int i = 0; i < n; ++i) {
        double d = x[i] - (xi.empty() ? 0.0 : xi[i]);
        r2 += d * d;
    }
    return a * std::pow(epsilon + r2, -0.5 * (n - 2 * gamma_tilde));
}

double sphere_volume(int n) { return 2.0 * std::pow(std::numbers::pi, 0.5 * (n + 1)) / std::tgamma(0.5 * (n + 1)); }

double sobolev_constant(int n, double g) {
    return std::tgamma(0.5 * (n + 2 * g)) / std::tgamma(0.5 * (n - 2 * g)) * std::pow(sphere_volume(n), 2 * g / n);
}

namespace {

struct BoxRatio {
    double ratio, lp_box, lp_tail;
};

// f^p decays like a^p r^{-2n}; its mass outside the cube of half side s
double lp_tail(const Bubble& b, double s) {
    const double p = 2.0 * b.n / (b.n - 2 * b.gamma_tilde);
    const double ap = std::pow(b.a, p);
    if (b.n == 1) return ap * 2.0 / s;
    return ap * (std::numbers::pi + 2.0) / (2.0 * s * s);
}

BoxRatio box_ratio(const Profile& f, const Bubble& decay, double h, double L) {
    const int N = static_cast<int>(std::lround(L / h));
    GridField g = GridField::uniform(decay.n, N, L);
    g.fill(f);
    const double p = 2.0 * decay.n / (decay.n - 2 * decay.gamma_tilde);
    double lp = 0;
    for (double v : g.values) lp += std::pow(std::fabs(v), p);
    lp *= std::pow(g.spacing(), decay.n);
    const double tail = lp_tail(decay, 0.5 * L);
    const double energy = fractional_pairing(g, g, decay.gamma_tilde);
    const double norm2 = std::pow(lp + tail, 2.0 / p);
    return {energy / (sobolev_constant(decay.n, decay.gamma_tilde) * norm2), lp, tail};
}

}  // namespace

SobolevRatio sobolev_ratio(const Profile& f, const Bubble& decay, double h, double L) {
    decay.validate();
    BoxRatio c = box_ratio(f, decay, h, L), fn = box_ratio(f, decay, h, 2 * L);
    SobolevRatio r;
    r.coarse = c.ratio;
    r.fine = fn.ratio;
    r.extrapolated = 2 * fn.ratio - c.ratio;
    r.tail_fraction = fn.lp_tail / (fn.lp_box + fn.lp_tail);
    return r;
}

std::vector<Bump> default_bumps(int n) {
    std::vector<Bump> out;
    const double centers[5][2] = {{0, 0}, {1, 0}, {0.5, -0.5}, {2, 1}, {-1, 1.5}};
    const double widths[5] = {1.0, 0.7, 1.5, 1.0, 0.5};
    for (int i = 0; i < 5; ++i) {
        Bump b;
        b.amplitude = 0.3;
        b.width = widths[i];
        b.center.assign(centers[i], centers[i] + n);
        out.push_back(b);
    }
    return out;
}

VerificationReport sharp_sobolev_check(const Bubble& bubble, const std::vector<Bump>& perturbations, double h, double L) {
    bubble.validate();
    std::string label = to_string(Rational(bubble.gamma_tilde));
    VerificationReport rep("sharp_sobolev", label, bubble.n);
    rep.note("S=" + format_double(sobolev_constant(bubble.n, bubble.gamma_tilde)) + " h=" + format_double(h) +
             " L=" + format_double(L) + "," + format_double(2 * L));
    auto record = [&](const std::string& tag, const SobolevRatio& r) {
        rep.note(tag + " R(L)=" + format_double(r.coarse) + " R(2L)=" + format_double(r.fine) +
                 " extrapolated=" + format_double(r.extrapolated) + " tail=" + format_double(r.tail_fraction));
        if (r.tail_fraction > 1e-3) rep.fail(tag + " under-resolved: L^p tail fraction " + format_double(r.tail_fraction));
    };
    const SobolevRatio base = sobolev_ratio(bubble, bubble, h, L);
    record("bubble", base);
    rep.measure("bubble ratio equals 1", std::fabs(base.extrapolated - 1.0), 1e-2);

    Bubble dilated = bubble;
    dilated.epsilon *= 2.0;
    Bubble moved = bubble;
    moved.xi = bubble.n == 2 ? std::vector<double>{3.0, -2.0} : std::vector<double>{3.0};
    for (const auto& [tag, b] : {std::pair{"dilated", dilated}, std::pair{"translated", moved}}) {
        SobolevRatio r = sobolev_ratio(b, b, h, L);
        record(tag, r);
        rep.measure(std::string(tag) + " bubble ratio matches", std::fabs(r.extrapolated - base.extrapolated), 1e-2);
    }
    int idx = 0;
    for (const auto& bump : perturbations) {
        Profile f = [&](const std::vector<double>& x) {
            double r2 = 0;
            for (int i = 0; i < bubble.n; ++i) r2 += (x[i] - bump.center[i]) * (x[i] - bump.center[i]);
            return bubble(x) + bump.amplitude * std::exp(-r2 / (bump.width * bump.width));
        };
        SobolevRatio r = sobolev_ratio(f, bubble, h, L);
        const std::string tag = "perturbation " + std::to_string(idx++);
        record(tag, r);
        const double margin = r.extrapolated - base.extrapolated;
        if (margin > 0 && r.extrapolated > 1.0)
            rep.note(tag + " margin R-1=" + format_double(r.extrapolated - 1.0) + " over bubble=" + format_double(margin));
        else
            rep.fail(tag + " does not exceed the bubble ratio: margin=" + format_double(margin));
    }
    return rep;
}

double log_extremal(double x, double epsilon, double xi, double a) {
    return a - std::log((epsilon + (x - xi) * (x - xi)) / (1.0 + x * x));
}

LebedevMilinSides lebedev_milin_sides(const GridField& f, double far_value) {
    if (f.n != 1) throw std::invalid_argument("Lebedev-Milin check is one-dimensional");
    const double h = f.spacing();
    // Cauchy probability measure dx / (pi (1 + x^2)); the mass the box quadrature misses sits at far_value
    std::vector<double> w(f.size());
    double inside = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        double x = f.coordinate(0, static_cast<int>(i));
        w[i] = h / (std::numbers::pi * (1.0 + x * x));
        inside += w[i];
    }
    const double tail = 1.0 - inside;
    double mean = tail * far_value;
    for (std::size_t i = 0; i < f.size(); ++i) mean += w[i] * f.values[i];
    double integral = tail * std::exp(far_value - mean);
    for (std::size_t i = 0; i < f.size(); ++i) integral += w[i] * std::exp(f.values[i] - mean);
    LebedevMilinSides s;
    s.energy = fractional_pairing(f, f, 0.5);
    s.log_side = 2.0 * sphere_volume(1) * std::log(integral);
    return s;
}

VerificationReport lebedev_milin_check(int N, double h) {
    VerificationReport rep("lebedev_milin", "1/2", 1);
    const double L = N * h;
    rep.note("N=" + std::to_string(N) + " h=" + format_double(h) + " constant 4 pi");
    struct Case {
        double eps, xi;
    };
    const Case cases[] = {{2.0, 0.0}, {0.5, 0.3}, {1.0, 0.5}};
    for (const auto& c : cases) {
        GridField f = GridField::uniform(1, N, L);
        f.fill([&](const std::vector<double>& x) { return log_extremal(x[0], c.eps, c.xi); });
        LebedevMilinSides s = lebedev_milin_sides(f, 0.0);
        const std::string tag = "extremal eps=" + format_double(c.eps) + " xi=" + format_double(c.xi);
        rep.measure(tag + " ratio equals 1", std::fabs(s.energy / s.log_side - 1.0), 1e-3);
    }
    const double bumps[3][2] = {{0.3, 1.0}, {-1.0, 0.5}, {2.0, 2.0}};
    for (int i = 0; i < 3; ++i) {
        GridField f = GridField::uniform(1, N, L);
        f.fill([&](const std::vector<double>& x) {
            double d = (x[0] - bumps[i][0]) / bumps[i][1];
            return log_extremal(x[0], 1.0 + 0.5 * i, 0.2 * i) + 0.5 * std::exp(-d * d);
        });
        LebedevMilinSides s = lebedev_milin_sides(f, 0.0);
        const std::string tag = "perturbation " + std::to_string(i);
        if (s.energy - s.log_side > 0)
            rep.note(tag + " excess=" + format_double(s.energy - s.log_side) + " ratio=" + format_double(s.energy / s.log_side));
        else
            rep.fail(tag + " violates strictness: excess=" + format_double(s.energy - s.log_side));
    }
    GridField c = GridField::uniform(1, 1024, 51.2);
    std::fill(c.values.begin(), c.values.end(), 1.5);
    LebedevMilinSides s = lebedev_milin_sides(c, 1.5);
    rep.measure("constant function: both sides vanish", std::max(std::fabs(s.energy), std::fabs(s.log_side)), 1e-12);
    return rep;
}

}  // namespace fractrace
