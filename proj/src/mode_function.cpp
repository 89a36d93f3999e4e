#include "fractrace/mode_function.hpp"

#include "fractrace/bessel.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fractrace {

namespace {

template <class Map, class Key>
void accumulate(Map& m, const Key& k, double c) {
    if (c == 0.0) return;
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, c);
    } else {
        const double before = it->second;
        it->second += c;
        // cancellation down to rounding level is an exact zero of the symbolic calculus
        if (std::fabs(it->second) <= 64 * std::numeric_limits<double>::epsilon() * std::max(std::fabs(before), std::fabs(c)))
            m.erase(it);
    }
}

LatticeExp shift(LatticeExp e, int dd) { return {e.c, e.d + dd}; }

bool is_branch_root(LatticeExp e) { return e.d == 0 && (e.c == 0 || e.c == 1); }

// Factors are small combinations of lattice exponents; a zero must come out as an exact zero.
double lattice_factor(double x) { return std::fabs(x) < 1e-12 ? 0.0 : x; }

}  // namespace

ModeFunction& ModeFunction::add_bessel(BesselKey k, double c) {
    accumulate(bessel, k, c);
    return *this;
}

ModeFunction& ModeFunction::add_gauss(GaussKey k, double c) {
    accumulate(gauss, k, c);
    return *this;
}

ModeFunction& ModeFunction::add(const ModeFunction& o, double c) {
    for (const auto& [k, v] : o.bessel) add_bessel(k, v * c);
    for (const auto& [k, v] : o.gauss) add_gauss(k, v * c);
    return *this;
}

ModeFunction ModeFunction::scaled(double c) const {
    ModeFunction out(frac, kappa);
    out.add(*this, c);
    return out;
}

ModeFunction operator+(const ModeFunction& a, const ModeFunction& b) {
    ModeFunction out = a;
    out.add(b);
    return out;
}

ModeFunction operator-(const ModeFunction& a, const ModeFunction& b) {
    ModeFunction out = a;
    out.add(b, -1.0);
    return out;
}

double ModeFunction::eval(double y) const {
    double s = 0;
    const double t = kappa * y;
    std::vector<std::pair<double, double>> seen;  // orders already evaluated at t
    for (const auto& [k, v] : bessel) {
        if (t > 700.0) break;
        double em = exponent(k.minus), ep = exponent(k.plus);
        double p = 0.5 * (em + ep), mu = std::fabs(0.5 * (ep - em));
        auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& e) { return std::fabs(e.first - mu) < 1e-12; });
        if (it == seen.end()) it = seen.insert(seen.end(), {mu, bessel_k(mu, t)});
        s += v * std::pow(y, p) * it->second;
    }
    for (const auto& [k, v] : gauss) s += v * std::pow(y, exponent(k.e)) * std::exp(-k.a * y * y);
    return s;
}

ModeFunction ModeFunction::apply_D() const {
    ModeFunction out(frac, kappa);
    const double mm = m();
    for (const auto& [k, v] : bessel) {
        double em = exponent(k.minus), ep = exponent(k.plus);
        double p = 0.5 * (em + ep);
        // y^{p-2} K_mu term vanishes exactly on the two branch roots
        if (!is_branch_root(k.minus))
            out.add_bessel({shift(k.minus, -2), shift(k.plus, -2)}, v * lattice_factor(em * (em - 1.0 + mm)));
        out.add_bessel({k.minus, shift(k.plus, -2)}, -v * kappa * lattice_factor(2.0 * p + mm - 1.0));
    }
    for (const auto& [k, v] : gauss) {
        double e = exponent(k.e);
        if (!is_branch_root(k.e)) out.add_gauss({shift(k.e, -2), k.a}, v * e * (e - 1.0 + mm));
        out.add_gauss(k, v * (-2.0 * k.a * (2.0 * e + 1.0 + mm) - kappa * kappa));
        out.add_gauss({shift(k.e, 2), k.a}, v * 4.0 * k.a * k.a);
    }
    return out;
}

ModeFunction ModeFunction::apply_D(int times) const {
    ModeFunction cur = *this;
    for (int i = 0; i < times; ++i) cur = cur.apply_D();
    return cur;
}

ModeFunction ModeFunction::derivative() const {
    ModeFunction out(frac, kappa);
    for (const auto& [k, v] : bessel) {
        double em = exponent(k.minus);
        if (!(k.minus.c == 0 && k.minus.d == 0)) out.add_bessel({shift(k.minus, -1), shift(k.plus, -1)}, v * em);
        out.add_bessel({shift(k.minus, 1), shift(k.plus, -1)}, -v * kappa);
    }
    for (const auto& [k, v] : gauss) {
        double e = exponent(k.e);
        if (!(k.e.c == 0 && k.e.d == 0)) out.add_gauss({shift(k.e, -1), k.a}, v * e);
        out.add_gauss({shift(k.e, 1), k.a}, -2.0 * k.a * v);
    }
    return out;
}

NearSeries ModeFunction::near_series(int terms) const {
    NearSeries out;
    for (const auto& [k, v] : bessel) {
        double em = exponent(k.minus), ep = exponent(k.plus);
        double mu = 0.5 * (ep - em);
        FrobeniusK fk = frobenius_k(mu, terms);
        const double h = 0.5 * kappa;
        for (int l = 0; l < terms; ++l) {
            accumulate(out, shift(k.minus, 2 * l), v * fk.lower[l] * std::pow(h, 2 * l - mu));
            accumulate(out, shift(k.plus, 2 * l), v * fk.upper[l] * std::pow(h, 2 * l + mu));
        }
    }
    for (const auto& [k, v] : gauss) {
        double c = v;
        for (int s = 0; s < terms; ++s) {
            accumulate(out, shift(k.e, 2 * s), c);
            c *= -k.a / (s + 1.0);
        }
    }
    return out;
}

void ModeFunction::branch_coefficients(int J, std::vector<double>& a, std::vector<double>& b) const {
    a.assign(J + 1, 0.0);
    b.assign(J + 1, 0.0);
    NearSeries s = near_series();
    double scale = 0;
    for (const auto& [e, v] : s) scale = std::max(scale, std::fabs(v));
    for (const auto& [e, v] : s) {
        bool in_class = (e.c == 0 || e.c == 1) && e.d >= 0 && e.d % 2 == 0;
        if (!in_class) {
            if (std::fabs(v) > 1e-9 * scale)
                throw std::domain_error("mode function leaves the two-branch class at y = 0");
            continue;
        }
        int i = e.d / 2;
        if (i > J) continue;
        (e.c == 0 ? a : b)[i] += v;
    }
}

namespace {

// Gaussian-class products in closed form: int_0^inf y^q e^{-A y^2} dy = Gamma((q+1)/2) / (2 A^{(q+1)/2}).
double gauss_moments(const ModeFunction& f, const ModeFunction& g) {
    const double m = f.m();
    double s = 0;
    for (const auto& [kf, vf] : f.gauss)
        for (const auto& [kg, vg] : g.gauss) {
            double q = f.exponent(kf.e) + g.exponent(kg.e) + m, A = kf.a + kg.a;
            if (!(q > -1.0 + 1e-12)) throw std::domain_error("weighted_inner: divergent moment at y = 0");
            s += vf * vg * std::exp(std::lgamma(0.5 * (q + 1)) - 0.5 * (q + 1) * std::log(A)) * 0.5;
        }
    return s;
}

ModeFunction bessel_part(const ModeFunction& f) {
    ModeFunction out(f.frac, f.kappa);
    out.bessel = f.bessel;
    return out;
}

ModeFunction gauss_part(const ModeFunction& f) {
    ModeFunction out(f.frac, f.kappa);
    out.gauss = f.gauss;
    return out;
}

}  // namespace

double weighted_inner(const ModeFunction& f, const ModeFunction& g) {
    if (f.empty() || g.empty()) return 0.0;
    const double exact = gauss_moments(f, g);
    if (f.bessel.empty() && g.bessel.empty()) return exact;
    // what is left pairs a Bessel part with the whole other function
    const ModeFunction fb = bessel_part(f), fg = gauss_part(f), gb = bessel_part(g);
    const double frac = f.frac, m = f.m();
    double y0 = 1e300;
    auto scan = [&](const ModeFunction& h) {
        if (!h.bessel.empty()) {
            if (!(h.kappa > 0)) throw std::domain_error("Bessel terms need a positive wave number");
            y0 = std::min(y0, 1.0 / h.kappa);
        }
        for (const auto& [k, v] : h.gauss) {
            if (!(k.a > 0)) throw std::domain_error("Gaussian terms need a positive rate");
            y0 = std::min(y0, 1.0 / std::sqrt(k.a));
        }
    };
    scan(f);
    scan(g);

    // termwise integral of the two expansions over (0, y0)
    double near = 0, biggest = 0, log_part = 0;
    auto pair_near = [&](const ModeFunction& a, const ModeFunction& b) {
        if (a.empty() || b.empty()) return;
        NearSeries sa = a.near_series(), sb = b.near_series();
        for (const auto& [ea, va] : sa)
            for (const auto& [eb, vb] : sb) {
                double q = 2.0 * (ea.c + eb.c) * frac + ea.d + eb.d + m + 1.0;
                double prod = va * vb;
                if (std::fabs(q) < 1e-12) {
                    log_part += std::fabs(prod);
                    continue;
                }
                double term = prod * std::pow(y0, q) / q;
                biggest = std::max(biggest, std::fabs(term));
                near += term;
            }
    };
    pair_near(fb, g);
    pair_near(fg, gb);
    if (log_part > 1e-9 * std::max(biggest, 1e-300)) throw std::domain_error("weighted_inner: logarithmic divergence at y = 0");

    using boost::math::quadrature::gauss_kronrod;
    auto integrand = [&](double y) {
        double v = fb.eval(y) * g.eval(y);
        if (!fg.empty() && !gb.empty()) v += fg.eval(y) * gb.eval(y);
        return v * std::pow(y, m);
    };
    double scale = 0;
    for (const auto& h : {&f, &g}) {
        if (!h->bessel.empty()) scale = std::max(scale, 1.0 / h->kappa);
        for (const auto& [k, v] : h->gauss) scale = std::max(scale, 1.0 / std::sqrt(k.a));
    }
    double far = 0, a = y0;
    int quiet = 0;
    for (int panel = 0; panel < 400; ++panel) {
        double b = a * 1.5;
        double part = gauss_kronrod<double, 31>::integrate(integrand, a, b, 5, 1e-14);
        far += part;
        bool small = std::fabs(part) <= 1e-18 * (std::fabs(far) + std::fabs(near) + std::fabs(exact) + 1e-300);
        quiet = small ? quiet + 1 : 0;
        if (a > 4.0 * scale && quiet >= 2) break;
        a = b;
    }
    return exact + near + far;
}

}  // namespace fractrace
