#pragma once

#include "fractrace/gamma_core.hpp"
#include "fractrace/jet.hpp"

#include <map>
#include <string>
#include <vector>

namespace fractrace {

// r^{2s} x^alpha y^{2 beta + 2 [gamma] branch}
struct PolyKey {
    Rational s;
    std::vector<int> x;
    int beta = 0;
    int branch = 0;
};

struct PolyKeyLess {
    bool operator()(const PolyKey& a, const PolyKey& b) const;
};

// Exact sums of PolyKey monomials. With has_y = false the class lives on the boundary R^n
// and r stands for |x|.
class WeightedPoly {
public:
    int n = 1;
    Rational frac;
    bool has_y = true;
    std::map<PolyKey, Rational, PolyKeyLess> terms;

    WeightedPoly() = default;
    WeightedPoly(int dim, const Rational& frac_gamma, bool with_y = true) : n(dim), frac(frac_gamma), has_y(with_y) {}

    static WeightedPoly monomial(int dim, const Rational& frac_gamma, const Rational& coeff, const Rational& s,
                                 std::vector<int> x, int beta = 0, int branch = 0);

    WeightedPoly& add_term(const PolyKey& key, const Rational& c);
    WeightedPoly& add(const WeightedPoly& o, const Rational& c = 1);
    WeightedPoly scaled(const Rational& c) const;
    WeightedPoly times_r2s(const Rational& s) const;
    WeightedPoly times(const WeightedPoly& o) const;

    Rational y_exponent(const PolyKey& k) const { return 2 * k.beta + 2 * frac * k.branch; }
    Rational degree(const PolyKey& k) const;

    // Rewrites each residue class of r-powers over its smallest power; unique for a given function.
    WeightedPoly canonical() const;
    bool same_function(const WeightedPoly& o) const;
    bool is_zero() const { return terms.empty(); }
    std::string str() const;
};

WeightedPoly operator+(const WeightedPoly& a, const WeightedPoly& b);
WeightedPoly operator-(const WeightedPoly& a, const WeightedPoly& b);

WeightedPoly apply_laplacian(const WeightedPoly& p);
WeightedPoly apply_weighted_laplacian(const WeightedPoly& p, const Rational& m0);
WeightedPoly apply_weighted_laplacian_power(const WeightedPoly& p, const Rational& m0, int k);
// nabla^l U (grad r^2, ..., grad r^2)
WeightedPoly apply_radial(const WeightedPoly& p, int l);
// r^{2w} (p o inversion), inversion z -> z / |z|^2
WeightedPoly kelvin_pullback(const WeightedPoly& p, const Rational& w);

// Boundary coefficient of y^{2i} (branch 0) or y^{2[gamma]+2i} (branch 1) in the expansion at y = 0.
WeightedPoly trace_coefficient(const WeightedPoly& p, int branch, int i);
WeightedPoly boundary_operator_poly(const GammaParams& params, BIndex idx, const WeightedPoly& U);

// y^p x^alpha combinations for the hyperbolic side.
struct YKey {
    Rational p;
    std::vector<int> x;
};
struct YKeyLess {
    bool operator()(const YKey& a, const YKey& b) const;
};

class YPowerField {
public:
    int n = 1;
    std::map<YKey, Rational, YKeyLess> terms;

    YPowerField() = default;
    explicit YPowerField(int dim) : n(dim) {}
    static YPowerField monomial(int dim, const Rational& coeff, const Rational& p, std::vector<int> x);

    YPowerField& add_term(const YKey& key, const Rational& c);
    YPowerField& add(const YPowerField& o, const Rational& c = 1);
    YPowerField times_y(const Rational& q) const;
    bool operator==(const YPowerField& o) const;
    std::string str() const;
};

YPowerField hyperbolic_laplacian(const YPowerField& f);
YPowerField apply_weighted_laplacian(const YPowerField& f, const Rational& m0);

}  // namespace fractrace
