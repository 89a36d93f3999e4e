#include "fractrace/jet.hpp"

#include <sstream>

namespace fractrace {

BoundaryExpr BoundaryExpr::symbol(const std::string& name, bool hat, int lap, const Rational& coeff) {
    BoundaryExpr e;
    e.add_term({name, lap, hat}, coeff);
    return e;
}

BoundaryExpr& BoundaryExpr::add_term(const SymbolKey& key, const Rational& c) {
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

BoundaryExpr& BoundaryExpr::add(const BoundaryExpr& o, const Rational& c) {
    if (c == 0) return *this;
    for (const auto& [k, v] : o.terms) add_term(k, v * c);
    return *this;
}

BoundaryExpr BoundaryExpr::scaled(const Rational& c) const {
    BoundaryExpr e;
    e.add(*this, c);
    return e;
}

BoundaryExpr BoundaryExpr::tangential(int times) const {
    BoundaryExpr e;
    for (const auto& [k, v] : terms) e.terms.emplace(SymbolKey{k.name, k.lap + times, k.hat}, v);
    return e;
}

Rational BoundaryExpr::coefficient(const SymbolKey& key) const {
    auto it = terms.find(key);
    return it == terms.end() ? Rational(0) : it->second;
}

bool BoundaryExpr::has_hat() const {
    for (const auto& [k, v] : terms)
        if (k.hat) return true;
    return false;
}

int BoundaryExpr::max_lap() const {
    int m = -1;
    for (const auto& [k, v] : terms) m = std::max(m, k.lap);
    return m;
}

std::string BoundaryExpr::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(v) << ")";
        if (k.lap > 0) os << "*Lap^" << k.lap;
        os << "*" << (k.hat ? "hat(" + k.name + ")" : k.name);
    }
    return os.str();
}

BoundaryExpr operator+(const BoundaryExpr& a, const BoundaryExpr& b) {
    BoundaryExpr e = a;
    e.add(b);
    return e;
}

BoundaryExpr operator-(const BoundaryExpr& a, const BoundaryExpr& b) {
    BoundaryExpr e = a;
    e.add(b, -1);
    return e;
}

Rational BIndex::order(const GammaParams& p) const {
    return family == Family::Even ? Rational(2 * j) : 2 * p.frac_gamma + 2 * j;
}

std::string BIndex::name(const GammaParams& p) const { return "B_" + to_string(order(p)); }

BIndex BIndex::from_order(const GammaParams& p, const Rational& alpha2) {
    for (const auto& idx : all_indices(p))
        if (idx.order(p) == alpha2) return idx;
    throw std::out_of_range("no boundary operator of order " + to_string(alpha2) + " for gamma " + p.label());
}

std::vector<BIndex> all_indices(const GammaParams& p) {
    std::vector<BIndex> v;
    for (int j = 0; j <= p.floor_gamma; ++j) v.push_back({Family::Even, j});
    for (int j = 0; j <= p.floor_gamma; ++j) v.push_back({Family::Odd, j});
    return v;
}

std::vector<BIndex> dirichlet_indices(const GammaParams& p) {
    std::vector<BIndex> v;
    for (int j = 0; j < p.even_count(); ++j) v.push_back({Family::Even, j});
    for (int j = 0; j < p.odd_count(); ++j) v.push_back({Family::Odd, j});
    return v;
}

std::vector<BIndex> neumann_indices(const GammaParams& p) {
    std::vector<BIndex> v;
    const int F = static_cast<int>(p.floor_gamma);
    for (int j = 0; j < p.even_count(); ++j) v.push_back({Family::Odd, F - j});
    for (int j = 0; j < p.odd_count(); ++j) v.push_back({Family::Even, F - j});
    return v;
}

Jet::Jet(const GammaParams& p, int J) : params(p), truncation(J), a(J + 1), b(J + 1) {
    if (J < 0) throw std::invalid_argument("jet truncation must be non-negative");
}

int default_truncation(const GammaParams& p) { return static_cast<int>(p.floor_gamma) + 4; }

Jet apply_T(const Jet& jet) {
    if (jet.truncation < 1) throw std::out_of_range("apply_T: jet truncation exhausted");
    const Rational& f = jet.params.frac_gamma;
    Jet out(jet.params, jet.truncation - 1);
    for (int j = 1; j <= jet.truncation; ++j) {
        out.a[j - 1].add(jet.a[j], 4 * j * (j - f));
        out.b[j - 1].add(jet.b[j], 4 * j * (j + f));
    }
    return out;
}

Jet apply_tangential(const Jet& jet) {
    Jet out(jet.params, jet.truncation);
    for (int j = 0; j <= jet.truncation; ++j) {
        out.a[j] = jet.a[j].tangential();
        out.b[j] = jet.b[j].tangential();
    }
    return out;
}

Jet apply_weighted_laplacian(const Jet& jet) {
    Jet out = apply_T(jet);
    for (int j = 0; j <= out.truncation; ++j) {
        out.a[j].add(jet.a[j].tangential());
        out.b[j].add(jet.b[j].tangential());
    }
    return out;
}

BoundaryExpr restrict(const Jet& jet) { return jet.a[0]; }

BoundaryExpr restrict_weighted_neumann(const Jet& jet) { return jet.b[0].scaled(2 * jet.params.frac_gamma); }

Rational recursion_coefficient(const GammaParams& p, Family f, int j, int l) {
    const Rational& g = p.frac_gamma;
    if (f == Family::Even)
        return binomial(Rational(j), l) * pochhammer_ratio(1 + j - l - g, l) /
               pochhammer_ratio(Rational(1 + 2 * j - 2 * l) - p.gamma, l);
    return binomial(Rational(j), l) * pochhammer_ratio(1 + j - l + g, l) /
           pochhammer_ratio(Rational(1 + 2 * j - 2 * l - p.floor_gamma) + g, l);
}

BoundaryExpr boundary_operator(const GammaParams& p, BIndex idx, const Jet& jet) {
    if (idx.j < 0 || idx.j > p.floor_gamma) throw std::out_of_range("boundary operator index out of range");
    if (jet.truncation < idx.j) throw std::out_of_range("boundary operator: insufficient jet truncation");
    // values[l] = B of the same family at index l
    std::vector<BoundaryExpr> values;
    Jet cur = jet;
    for (int j = 0; j <= idx.j; ++j) {
        if (j > 0) cur = apply_T(cur);
        BoundaryExpr v;
        if (idx.family == Family::Even)
            v = restrict(cur).scaled(sign_power(j));
        else
            v = restrict_weighted_neumann(cur).scaled(sign_power(j + 1));
        for (int l = 1; l <= j; ++l) v.add(values[j - l].tangential(l), -recursion_coefficient(p, idx.family, j, l));
        values.push_back(std::move(v));
    }
    return values.back();
}

BoundaryExpr boundary_operator(const GammaParams& p, const Rational& alpha2, const Jet& jet) {
    return boundary_operator(p, BIndex::from_order(p, alpha2), jet);
}

OperatorPoly boundary_operator_expansion(const GammaParams& p, BIndex idx) {
    bool neumann = idx.family == Family::Odd;
    std::vector<OperatorPoly> values;
    for (int j = 0; j <= idx.j; ++j) {
        OperatorPoly e;
        e[{neumann, j, 0}] = neumann ? sign_power(j + 1) : sign_power(j);
        for (int l = 1; l <= j; ++l) {
            Rational c = recursion_coefficient(p, idx.family, j, l);
            for (const auto& [t, v] : values[j - l]) {
                OperatorTerm s{t.neumann, t.i, t.lap + l};
                e[s] -= c * v;
                if (e[s] == 0) e.erase(s);
            }
        }
        values.push_back(std::move(e));
    }
    return values.back();
}

Rational trace_factor(const GammaParams& p, bool neumann, int i) {
    Rational r = neumann ? 2 * p.frac_gamma : Rational(1);
    for (int t = 1; t <= i; ++t) r *= 4 * t * (neumann ? Rational(t + p.frac_gamma) : Rational(t - p.frac_gamma));
    return r;
}

BoundaryExpr apply_expansion(const GammaParams& p, const OperatorPoly& op, const Jet& jet) {
    BoundaryExpr out;
    for (const auto& [t, v] : op) {
        if (t.i > jet.truncation) throw std::out_of_range("apply_expansion: insufficient jet truncation");
        const BoundaryExpr& c = t.neumann ? jet.b[t.i] : jet.a[t.i];
        out.add(c.tangential(t.lap), v * trace_factor(p, t.neumann, t.i));
    }
    return out;
}

std::string scattering_symbol(ScatterKind kind, int j) {
    return (kind == ScatterKind::Even ? "f" : "phi") + std::to_string(2 * j);
}

Jet make_scattering_jet(const GammaParams& p, int j, ScatterKind kind, int truncation) {
    const long F = p.floor_gamma;
    if (kind == ScatterKind::Even && (j < 0 || j > p.half_floor()))
        throw std::out_of_range("scattering jet: even index out of range");
    if (kind == ScatterKind::Odd && (j < 0 || j > F - p.half_floor() - 1))
        throw std::out_of_range("scattering jet: odd index out of range");
    Rational gt = kind == ScatterKind::Even ? Rational(p.gamma - 2 * j) : Rational(F - p.frac_gamma - 2 * j);
    std::string name = scattering_symbol(kind, j);
    Jet jet(p, truncation);
    auto& base_branch = kind == ScatterKind::Even ? jet.a : jet.b;
    auto& hat_branch = kind == ScatterKind::Even ? jet.b : jet.a;
    for (int l = 0; j + l <= truncation; ++l) {
        Rational c = sign_power(l) / (rational_pow(Rational(4), l) * factorial(l) * pochhammer_ratio(1 - gt, l));
        base_branch[j + l].add_term({name, l, false}, c);
    }
    for (int l = 0; F - j + l <= truncation; ++l) {
        Rational c = sign_power(l) / (rational_pow(Rational(4), l) * factorial(l) * pochhammer_ratio(1 + gt, l));
        hat_branch[F - j + l].add_term({name, l, true}, c);
    }
    return jet;
}

Jet make_generic_jet(const GammaParams& p, int truncation) {
    Jet jet(p, truncation);
    for (int i = 0; i <= truncation; ++i) {
        jet.a[i] = BoundaryExpr::symbol("a" + std::to_string(i));
        jet.b[i] = BoundaryExpr::symbol("b" + std::to_string(i));
    }
    return jet;
}

VerificationReport verify_scattering_relations(const GammaParams& p) {
    VerificationReport rep("scattering_relations", p.label(), 0);
    const int F = static_cast<int>(p.floor_gamma);
    const Rational& g = p.frac_gamma;
    int J = default_truncation(p);
    long checked = 0;
    for (int kind_i = 0; kind_i < 2; ++kind_i) {
        ScatterKind kind = kind_i == 0 ? ScatterKind::Even : ScatterKind::Odd;
        int count = kind == ScatterKind::Even ? p.even_count() : p.odd_count();
        for (int j = 0; j < count; ++j) {
            Jet V = make_scattering_jet(p, j, kind, J);
            std::string s = scattering_symbol(kind, j);
            BIndex own, partner;
            BoundaryExpr own_val, partner_val;
            if (kind == ScatterKind::Even) {
                own = {Family::Even, j};
                partner = {Family::Odd, F - j};
                own_val = BoundaryExpr::symbol(s, false, 0,
                                               sign_power(j) * rational_pow(Rational(4), j) * factorial(j) *
                                                   pochhammer_ratio(1 - g, j));
                partner_val = BoundaryExpr::symbol(s, true, 0,
                                                   sign_power(F - j + 1) * rational_pow(Rational(2), 2 * F - 2 * j + 1) *
                                                       factorial(F - j) * pochhammer_ratio(g, 1 - j + F));
            } else {
                own = {Family::Odd, j};
                partner = {Family::Even, F - j};
                own_val = BoundaryExpr::symbol(s, false, 0,
                                               sign_power(j + 1) * rational_pow(Rational(2), 2 * j + 1) * factorial(j) *
                                                   pochhammer_ratio(g, 1 + j));
                partner_val = BoundaryExpr::symbol(s, true, 0,
                                                   sign_power(F - j) * rational_pow(Rational(2), 2 * F - 2 * j) *
                                                       factorial(F - j) * pochhammer_ratio(1 - g, F - j));
            }
            for (const auto& idx : all_indices(p)) {
                BoundaryExpr got = boundary_operator(p, idx, V);
                BoundaryExpr want = idx == own ? own_val : (idx == partner ? partner_val : BoundaryExpr{});
                ++checked;
                if (!(got == want))
                    rep.fail(idx.name(p) + " on jet of " + s + ": got " + got.str() + ", expected " + want.str());
            }
        }
    }
    rep.note("exact comparisons: " + std::to_string(checked));
    return rep;
}

VerificationReport verify_operators_via_laplacian(const GammaParams& p) {
    VerificationReport rep("operators_via_laplacian", p.label(), 0);
    const int F = static_cast<int>(p.floor_gamma);
    const Rational& g = p.frac_gamma;
    Jet U = make_generic_jet(p, default_truncation(p));
    std::vector<BoundaryExpr> even, odd;
    for (int l = 0; l <= F; ++l) {
        even.push_back(boundary_operator(p, BIndex{Family::Even, l}, U));
        odd.push_back(boundary_operator(p, BIndex{Family::Odd, l}, U));
    }
    Jet cur = U;
    for (int j = 0; j <= F; ++j) {
        if (j > 0) cur = apply_weighted_laplacian(cur);
        BoundaryExpr lhs_even = restrict(cur), rhs_even;
        BoundaryExpr lhs_odd = restrict_weighted_neumann(cur), rhs_odd;
        for (int l = 0; l <= j; ++l) {
            Rational base = binomial(Rational(j), l) * factorial(F - l) / factorial(F - j);
            rhs_even.add(even[l].tangential(j - l),
                         sign_power(l) * base * pochhammer_ratio(p.gamma - 2 * l, l - j));
            rhs_odd.add(odd[l].tangential(j - l),
                        sign_power(j + 1) * base / pochhammer_ratio(Rational(1 + 2 * l - F) + g, j - l));
        }
        if (!(lhs_even == rhs_even))
            rep.fail("iota* Lap_m^" + std::to_string(j) + ": " + lhs_even.str() + " vs " + rhs_even.str());
        if (!(lhs_odd == rhs_odd))
            rep.fail("iota* y^m d_y Lap_m^" + std::to_string(j) + ": " + lhs_odd.str() + " vs " + rhs_odd.str());
    }
    rep.note("identities checked for 0 <= j <= " + std::to_string(F));
    return rep;
}

}  // namespace fractrace
