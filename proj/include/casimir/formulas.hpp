#pragma once

#include <optional>

#include "casimir/algebra.hpp"
#include "casimir/rational.hpp"
#include "casimir/vogel.hpp"

namespace casimir {

// Does Tr(ASym_n C^k) have a catalogued closed form? n=2: all k; n=3,4: k<=3;
// n=5: k<=4.
bool has_universal_trace(int n, int k);

// The catalogued universal trace polynomials. Only (n,k) = (5,4) consults the
// Vogel point (through the product alpha*beta*gamma); every other case
// depends on dim g alone. Throws FormulaNotPrinted outside that set.
Rat universal_trace(int n, int k, int dim_g, const VogelPoint& point);

// dim X_m as a universal polynomial in dim g, m = 0..5.
Rat dim_x(int m, int dim_g);

enum class M3Family { SL, SO, EXCEPTIONAL };

// dim M3 per family; N required for SL/SO (MissingParameter otherwise).
Rat dim_m3(M3Family family, std::optional<int> N = std::nullopt);

// Known dimension by family when it exists: SL/SO via the closed forms,
// exceptional 0; nullopt for SP (no closed form).
std::optional<Rat> m3_dim_for(const AlgebraId& id);

}  // namespace casimir
