#pragma once

#include "fractrace/gamma_core.hpp"
#include "fractrace/report.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace fractrace {

struct SymbolKey {
    std::string name;
    int lap = 0;      // power of the tangential Laplacian
    bool hat = false; // formal scattering image of the symbol
    auto operator<=>(const SymbolKey&) const = default;
};

// Finite sum of coeff * Lap^l (symbol), canonical: zero coefficients are never stored.
class BoundaryExpr {
public:
    std::map<SymbolKey, Rational> terms;

    static BoundaryExpr symbol(const std::string& name, bool hat = false, int lap = 0,
                               const Rational& coeff = 1);

    BoundaryExpr& add(const BoundaryExpr& o, const Rational& c = 1);
    BoundaryExpr& add_term(const SymbolKey& key, const Rational& c);
    BoundaryExpr scaled(const Rational& c) const;
    BoundaryExpr tangential(int times = 1) const;
    Rational coefficient(const SymbolKey& key) const;
    bool is_zero() const { return terms.empty(); }
    bool has_hat() const;
    int max_lap() const;
    std::string str() const;
    bool operator==(const BoundaryExpr& o) const { return terms == o.terms; }
};

BoundaryExpr operator+(const BoundaryExpr& a, const BoundaryExpr& b);
BoundaryExpr operator-(const BoundaryExpr& a, const BoundaryExpr& b);

enum class Family { Even, Odd };  // indices 2j and 2[gamma] + 2j

struct BIndex {
    Family family = Family::Even;
    int j = 0;
    auto operator<=>(const BIndex&) const = default;

    Rational order(const GammaParams& p) const;  // 2 alpha
    std::string name(const GammaParams& p) const;
    static BIndex from_order(const GammaParams& p, const Rational& alpha2);
};

// Every index of the boundary operator set: both families, 0 <= j <= floor(gamma).
std::vector<BIndex> all_indices(const GammaParams& p);
// Dirichlet indices of the boundary value problem, in data order.
std::vector<BIndex> dirichlet_indices(const GammaParams& p);
// Neumann partner of each Dirichlet index: 2 gamma - 2j and 2 floor(gamma) - 2j.
std::vector<BIndex> neumann_indices(const GammaParams& p);

// a[j] multiplies y^{2j}, b[j] multiplies y^{2[gamma]+2j}, valid for 0 <= j <= truncation.
class Jet {
public:
    GammaParams params;
    int truncation = 0;
    std::vector<BoundaryExpr> a, b;

    Jet(const GammaParams& p, int J);
};

int default_truncation(const GammaParams& p);

Jet apply_T(const Jet& jet);
Jet apply_tangential(const Jet& jet);
Jet apply_weighted_laplacian(const Jet& jet);
BoundaryExpr restrict(const Jet& jet);
BoundaryExpr restrict_weighted_neumann(const Jet& jet);

// binom(j,l) times the Gamma quotient in front of Lap^l B_{..-2l} in the recursive definition.
Rational recursion_coefficient(const GammaParams& p, Family f, int j, int l);

BoundaryExpr boundary_operator(const GammaParams& p, BIndex idx, const Jet& jet);
BoundaryExpr boundary_operator(const GammaParams& p, const Rational& alpha2, const Jet& jet);

// Expansion of B in the basis Lap^lap iota* T^i (neumann = false) or Lap^lap iota* y^m d_y T^i.
struct OperatorTerm {
    bool neumann = false;
    int i = 0;
    int lap = 0;
    auto operator<=>(const OperatorTerm&) const = default;
};
using OperatorPoly = std::map<OperatorTerm, Rational>;

OperatorPoly boundary_operator_expansion(const GammaParams& p, BIndex idx);
// iota* T^i U = a_i * prod_{t<=i} 4t(t-[g]);  iota* y^m d_y T^i U = 2[g] b_i * prod 4t(t+[g])
Rational trace_factor(const GammaParams& p, bool neumann, int i);
BoundaryExpr apply_expansion(const GammaParams& p, const OperatorPoly& op, const Jet& jet);

enum class ScatterKind { Even, Odd };

// Formal jet of the Poisson extension of one boundary symbol (plus its hat partner).
Jet make_scattering_jet(const GammaParams& p, int j, ScatterKind kind, int truncation);
std::string scattering_symbol(ScatterKind kind, int j);
// Jet whose coefficients are independent symbols a_i, b_i.
Jet make_generic_jet(const GammaParams& p, int truncation);

VerificationReport verify_scattering_relations(const GammaParams& p);
VerificationReport verify_operators_via_laplacian(const GammaParams& p);

}  // namespace fractrace
