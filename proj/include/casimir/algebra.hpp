#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "casimir/error.hpp"
#include "casimir/rational.hpp"

namespace casimir {

enum class Family { SL, SO, SP, G2, F4, E6, E7, E8 };

// Identifies a simple Lie algebra. SL/SO/SP carry the defining parameter
// (N, with N = 2r for SP); the exceptional families carry none. f4..e8 are
// formula-level only: they have Vogel points and dimensions but no basis
// construction here.
struct AlgebraId {
    Family family = Family::SL;
    int parameter = 0;

    static AlgebraId parse(const std::string& name);
    std::string name() const;
    int dim() const;
    bool constructible() const;
    bool exceptional() const;  // g2/f4/e6/e7/e8 (the gamma = 1/3 line)
};

// Sparse structure constants f_ab^c for a chosen basis. brackets[a][b] lists
// (c, f_ab^c) with nonzero values only.
struct StructureConstants {
    int dim = 0;
    std::vector<std::vector<std::vector<std::pair<int, Rat>>>> brackets;

    Rat f(int a, int b, int c) const;
    // Flattened nonzero entries sorted by (a,b,c).
    std::vector<std::tuple<int, int, int, Rat>> entries() const;
};

struct KillingMetric {
    std::vector<std::vector<Rat>> g;
    std::vector<std::vector<Rat>> g_inv;
};

// Matrices of ad(X_a): column b holds (c, f_ab^c), i.e. X_b -> f_ab^c X_c.
struct AdjointRep {
    int dim = 0;
    std::vector<std::vector<std::vector<std::pair<int, Rat>>>> cols;
};

StructureConstants build_algebra(const AlgebraId& id);
KillingMetric killing_metric(const StructureConstants& f);
AdjointRep adjoint_rep(const StructureConstants& f);

// Exact whole-index-range scans, cheap for dim <= 28.
bool satisfies_antisymmetry(const StructureConstants& f);
bool satisfies_jacobi(const StructureConstants& f);
// [ad_a, ad_b] = sum_c f_ab^c ad_c, exact over all pairs.
bool satisfies_representation_property(const StructureConstants& f,
                                       const AdjointRep& adj);

// g^{ab} ad_a ad_b == identity, the c2(adjoint) = 1 normalization.
bool quadratic_casimir_is_identity(const StructureConstants& f,
                                   const KillingMetric& metric,
                                   const AdjointRep& adj);

Rat metric_determinant(const KillingMetric& metric);

}  // namespace casimir
