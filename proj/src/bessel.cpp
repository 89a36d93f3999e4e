#include "fractrace/bessel.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fractrace {

namespace {

std::atomic<long> g_warnings{0};

constexpr double kPi = std::numbers::pi;

void check_order(double nu) {
    if (!std::isfinite(nu) || std::fabs(nu) > 10.0 + 1e-12)
        throw std::domain_error("bessel: order outside |nu| <= 10");
}

// sum_l (t/2)^{2l+nu} / (l! Gamma(l+1+nu)), together with the sum of absolute terms
double i_series(double nu, double t, double* abs_sum) {
    const double half = 0.5 * t, q = half * half;
    double rg = 1.0 / std::tgamma(1.0 + nu);
    if (!std::isfinite(rg)) rg = 0.0;
    double term = std::pow(half, nu) * rg;
    // 1/Gamma(1+nu) vanishes at negative integers; restart from the first nonzero term
    int l0 = 0;
    if (term == 0.0 && nu < 0) {
        l0 = static_cast<int>(std::ceil(-nu - 1.0 - 1e-12));
        double g = std::tgamma(l0 + 1.0 + nu);
        term = std::pow(half, 2.0 * l0 + nu) / (std::tgamma(l0 + 1.0) * g);
    }
    double sum = 0, asum = 0;
    for (int l = l0; l < 500; ++l) {
        sum += term;
        asum += std::fabs(term);
        double next = term * q / ((l + 1.0) * (l + 1.0 + nu));
        if (std::fabs(next) < 1e-18 * std::fabs(sum) && l > 2) break;
        term = next;
    }
    if (abs_sum) *abs_sum = asum;
    return sum;
}

double k_large(double nu, double x) {
    const double a_nu = std::fabs(nu);
    const int nl = static_cast<int>(std::floor(a_nu + 0.5));
    const double mu = a_nu - nl, mu2 = mu * mu;
    double b = 2.0 * (1.0 + x), d = 1.0 / b, h = d, delh = d;
    double q1 = 0.0, q2 = 1.0, a1 = 0.25 - mu2, q = a1, c = a1, a = -a1, s = 1.0 + q * delh;
    for (int i = 1; i < 100000; ++i) {
        a -= 2 * i;
        c = -a * c / (i + 1.0);
        double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        double dels = q * delh;
        s += dels;
        if (std::fabs(dels / s) < 1e-17) break;
    }
    h = a1 * h;
    double kmu = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
    double k1 = kmu * (mu + x + 0.5 - h) / x;
    for (int i = 1; i <= nl; ++i) {
        double next = (mu + i) * (2.0 / x) * k1 + kmu;
        kmu = k1;
        k1 = next;
    }
    return kmu;
}

}  // namespace

double bessel_i(double nu, double t) {
    if (!(t >= 0)) throw std::domain_error("bessel_i: negative argument");
    return i_series(nu, t, nullptr);
}

double bessel_k(double nu, double t, double* err_estimate) {
    if (!(t > 0) || !std::isfinite(t)) throw std::domain_error("bessel_k: argument must be positive");
    check_order(nu);
    const double a_nu = std::fabs(nu);
    if (std::fabs(a_nu - std::round(a_nu)) < 1e-12) throw std::domain_error("bessel_k: integer order not supported");
    double value, err;
    if (t < kBesselSwitchover) {
        double am, ap;
        double im = i_series(-a_nu, t, &am), ip = i_series(a_nu, t, &ap);
        value = kPi * (im - ip) / (2.0 * std::sin(kPi * a_nu));
        err = 4e-16 * (am + ap) / std::fabs(im - ip) * (1.0 + a_nu);
    } else {
        value = k_large(a_nu, t);
        err = 1e-15 * (1.0 + a_nu);
    }
    if (err > 1e-10) g_warnings.fetch_add(1, std::memory_order_relaxed);
    if (err_estimate) *err_estimate = err;
    return value;
}

long bessel_warning_count() { return g_warnings.load(); }

FrobeniusK frobenius_k(double nu, int terms) {
    check_order(nu);
    FrobeniusK out;
    out.nu = nu;
    const double pref = kPi / (2.0 * std::sin(kPi * nu));
    double rl = 1.0 / std::tgamma(1.0 - nu), ru = 1.0 / std::tgamma(1.0 + nu);
    double fact = 1.0;
    for (int l = 0; l < terms; ++l) {
        if (l > 0) {
            fact *= l;
            rl /= (l - nu);
            ru /= (l + nu);
        }
        out.lower.push_back(pref * rl / fact);
        out.upper.push_back(-pref * ru / fact);
    }
    return out;
}

}  // namespace fractrace
