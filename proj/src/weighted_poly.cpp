#include "fractrace/weighted_poly.hpp"

#include <sstream>

namespace fractrace {

bool PolyKeyLess::operator()(const PolyKey& a, const PolyKey& b) const {
    int c = cmp(a.s, b.s);
    if (c != 0) return c < 0;
    if (a.x != b.x) return a.x < b.x;
    if (a.beta != b.beta) return a.beta < b.beta;
    return a.branch < b.branch;
}

WeightedPoly WeightedPoly::monomial(int dim, const Rational& frac_gamma, const Rational& coeff, const Rational& s,
                                    std::vector<int> x, int beta, int branch) {
    WeightedPoly p(dim, frac_gamma);
    x.resize(dim, 0);
    p.add_term({s, std::move(x), beta, branch}, coeff);
    return p;
}

WeightedPoly& WeightedPoly::add_term(const PolyKey& key, const Rational& c) {
    if (c == 0) return *this;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
    return *this;
}

WeightedPoly& WeightedPoly::add(const WeightedPoly& o, const Rational& c) {
    for (const auto& [k, v] : o.terms) add_term(k, v * c);
    return *this;
}

WeightedPoly WeightedPoly::scaled(const Rational& c) const {
    WeightedPoly out(n, frac, has_y);
    out.add(*this, c);
    return out;
}

WeightedPoly WeightedPoly::times_r2s(const Rational& s) const {
    WeightedPoly out(n, frac, has_y);
    for (const auto& [k, v] : terms) out.add_term({k.s + s, k.x, k.beta, k.branch}, v);
    return out;
}

WeightedPoly WeightedPoly::times(const WeightedPoly& o) const {
    WeightedPoly out(n, frac, has_y);
    for (const auto& [ka, va] : terms)
        for (const auto& [kb, vb] : o.terms) {
            std::vector<int> x(n);
            for (int i = 0; i < n; ++i) x[i] = ka.x[i] + kb.x[i];
            int branch = ka.branch + kb.branch;
            int beta = ka.beta + kb.beta;
            if (branch > 1) throw std::domain_error("product leaves the two-branch class");
            out.add_term({ka.s + kb.s, std::move(x), beta, branch}, va * vb);
        }
    return out;
}

Rational WeightedPoly::degree(const PolyKey& k) const {
    int ax = 0;
    for (int e : k.x) ax += e;
    return 2 * k.s + ax + (has_y ? y_exponent(k) : Rational(0));
}

namespace {

struct MonoKey {
    std::vector<int> x;
    int beta;
    bool operator<(const MonoKey& o) const { return x != o.x ? x < o.x : beta < o.beta; }
};
using Mono = std::map<MonoKey, Rational>;

Mono r2_power(int n, bool has_y, long t) {
    Mono cur;
    cur[{std::vector<int>(n, 0), 0}] = 1;
    for (long step = 0; step < t; ++step) {
        Mono next;
        for (const auto& [k, v] : cur) {
            for (int i = 0; i < n; ++i) {
                MonoKey nk = k;
                nk.x[i] += 2;
                next[nk] += v;
            }
            if (has_y) {
                MonoKey nk = k;
                nk.beta += 1;
                next[nk] += v;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

WeightedPoly WeightedPoly::canonical() const {
    // residue class of s mod 1 and branch -> smallest s present
    std::map<std::pair<int, Rational>, Rational, bool (*)(const std::pair<int, Rational>&, const std::pair<int, Rational>&)>
        base([](const std::pair<int, Rational>& a, const std::pair<int, Rational>& b) {
            if (a.first != b.first) return a.first < b.first;
            return cmp(a.second, b.second) < 0;
        });
    auto cls = [](const PolyKey& k) { return std::make_pair(k.branch, Rational(k.s - floor_of(k.s))); };
    for (const auto& [k, v] : terms) {
        auto c = cls(k);
        auto it = base.find(c);
        if (it == base.end() || k.s < it->second) base[c] = k.s;
    }
    std::map<long, Mono> cache;
    WeightedPoly out(n, frac, has_y);
    for (const auto& [k, v] : terms) {
        Rational s0 = base[cls(k)];
        long t = floor_of(k.s - s0);
        auto it = cache.find(t);
        if (it == cache.end()) it = cache.emplace(t, r2_power(n, has_y, t)).first;
        for (const auto& [mk, mv] : it->second) {
            std::vector<int> x = k.x;
            for (int i = 0; i < n; ++i) x[i] += mk.x[i];
            out.add_term({s0, std::move(x), k.beta + mk.beta, k.branch}, v * mv);
        }
    }
    return out;
}

bool WeightedPoly::same_function(const WeightedPoly& o) const {
    WeightedPoly d = *this;
    d.add(o, -1);
    return d.canonical().is_zero();
}

std::string WeightedPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(v) << ")";
        if (k.s != 0) os << "*r^(" << to_string(2 * k.s) << ")";
        for (int i = 0; i < n; ++i)
            if (k.x[i]) os << "*x" << i + 1 << "^" << k.x[i];
        if (has_y && (k.beta != 0 || k.branch != 0)) os << "*y^(" << to_string(y_exponent(k)) << ")";
    }
    return os.str();
}

WeightedPoly operator+(const WeightedPoly& a, const WeightedPoly& b) {
    WeightedPoly out = a;
    out.add(b);
    return out;
}

WeightedPoly operator-(const WeightedPoly& a, const WeightedPoly& b) {
    WeightedPoly out = a;
    out.add(b, -1);
    return out;
}

namespace {

WeightedPoly laplacian_core(const WeightedPoly& p, const Rational& m0) {
    WeightedPoly out(p.n, p.frac, p.has_y);
    const int N = p.n + (p.has_y ? 1 : 0);
    for (const auto& [k, c] : p.terms) {
        int ax = 0;
        for (int e : k.x) ax += e;
        Rational ye = p.has_y ? p.y_exponent(k) : Rational(0);
        Rational A = 2 * k.s * (2 * k.s + N - 2) + 4 * k.s * (ax + ye);
        if (p.has_y) A += 2 * k.s * m0;
        out.add_term({k.s - 1, k.x, k.beta, k.branch}, A * c);
        for (int i = 0; i < p.n; ++i) {
            if (k.x[i] < 2) continue;
            std::vector<int> x = k.x;
            x[i] -= 2;
            out.add_term({k.s, std::move(x), k.beta, k.branch}, Rational(k.x[i] * (k.x[i] - 1)) * c);
        }
        if (p.has_y) out.add_term({k.s, k.x, k.beta - 1, k.branch}, ye * (ye - 1 + m0) * c);
    }
    return out;
}

}  // namespace

WeightedPoly apply_laplacian(const WeightedPoly& p) { return laplacian_core(p, 0); }

WeightedPoly apply_weighted_laplacian(const WeightedPoly& p, const Rational& m0) { return laplacian_core(p, m0); }

WeightedPoly apply_weighted_laplacian_power(const WeightedPoly& p, const Rational& m0, int k) {
    WeightedPoly cur = p;
    for (int i = 0; i < k; ++i) cur = laplacian_core(cur, m0);
    return cur;
}

WeightedPoly apply_radial(const WeightedPoly& p, int l) {
    WeightedPoly out(p.n, p.frac, p.has_y);
    for (const auto& [k, c] : p.terms) {
        Rational d = p.degree(k);
        Rational f = 1;
        for (int t = 0; t < l; ++t) f *= 2 * (d - t);
        out.add_term(k, f * c);
    }
    return out;
}

WeightedPoly kelvin_pullback(const WeightedPoly& p, const Rational& w) {
    WeightedPoly out(p.n, p.frac, p.has_y);
    for (const auto& [k, c] : p.terms) {
        int ax = 0;
        for (int e : k.x) ax += e;
        Rational ye = p.has_y ? p.y_exponent(k) : Rational(0);
        out.add_term({w - k.s - ax - ye, k.x, k.beta, k.branch}, c);
    }
    return out;
}

WeightedPoly trace_coefficient(const WeightedPoly& p, int branch, int i) {
    if (!p.has_y) throw std::invalid_argument("trace_coefficient needs a field with a y variable");
    WeightedPoly out(p.n, p.frac, false);
    for (const auto& [k, c] : p.terms) {
        if (k.branch != branch) continue;
        if (k.beta < 0) throw std::domain_error("negative y power has no trace: " + p.str());
        long t = i - k.beta;
        if (t < 0) continue;
        out.add_term({k.s - t, k.x, 0, 0}, c * binomial(k.s, t));
    }
    return out;
}

WeightedPoly boundary_operator_poly(const GammaParams& params, BIndex idx, const WeightedPoly& U) {
    WeightedPoly out(U.n, U.frac, false);
    for (const auto& [t, v] : boundary_operator_expansion(params, idx)) {
        WeightedPoly c = trace_coefficient(U, t.neumann ? 1 : 0, t.i);
        for (int l = 0; l < t.lap; ++l) c = apply_laplacian(c);
        out.add(c, v * trace_factor(params, t.neumann, t.i));
    }
    return out;
}

bool YKeyLess::operator()(const YKey& a, const YKey& b) const {
    int c = cmp(a.p, b.p);
    if (c != 0) return c < 0;
    return a.x < b.x;
}

YPowerField YPowerField::monomial(int dim, const Rational& coeff, const Rational& p, std::vector<int> x) {
    YPowerField f(dim);
    x.resize(dim, 0);
    f.add_term({p, std::move(x)}, coeff);
    return f;
}

YPowerField& YPowerField::add_term(const YKey& key, const Rational& c) {
    if (c == 0) return *this;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
    return *this;
}

YPowerField& YPowerField::add(const YPowerField& o, const Rational& c) {
    for (const auto& [k, v] : o.terms) add_term(k, v * c);
    return *this;
}

YPowerField YPowerField::times_y(const Rational& q) const {
    YPowerField out(n);
    for (const auto& [k, v] : terms) out.add_term({k.p + q, k.x}, v);
    return out;
}

bool YPowerField::operator==(const YPowerField& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (auto a = terms.begin(), b = o.terms.begin(); a != terms.end(); ++a, ++b)
        if (a->first.p != b->first.p || a->first.x != b->first.x || a->second != b->second) return false;
    return true;
}

std::string YPowerField::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(v) << ")*y^(" << to_string(k.p) << ")";
        for (int i = 0; i < n; ++i)
            if (k.x[i]) os << "*x" << i + 1 << "^" << k.x[i];
    }
    return os.str();
}

YPowerField hyperbolic_laplacian(const YPowerField& f) {
    YPowerField out(f.n);
    for (const auto& [k, c] : f.terms) {
        out.add_term(k, (k.p * (k.p - 1) - (f.n - 1) * k.p) * c);
        for (int i = 0; i < f.n; ++i) {
            if (k.x[i] < 2) continue;
            std::vector<int> x = k.x;
            x[i] -= 2;
            out.add_term({k.p + 2, std::move(x)}, Rational(k.x[i] * (k.x[i] - 1)) * c);
        }
    }
    return out;
}

YPowerField apply_weighted_laplacian(const YPowerField& f, const Rational& m0) {
    YPowerField out(f.n);
    for (const auto& [k, c] : f.terms) {
        out.add_term({k.p - 2, k.x}, k.p * (k.p - 1 + m0) * c);
        for (int i = 0; i < f.n; ++i) {
            if (k.x[i] < 2) continue;
            std::vector<int> x = k.x;
            x[i] -= 2;
            out.add_term({k.p, std::move(x)}, Rational(k.x[i] * (k.x[i] - 1)) * c);
        }
    }
    return out;
}

}  // namespace fractrace
