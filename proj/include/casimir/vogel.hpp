#pragma once

#include <optional>
#include <string>
#include <vector>

#include "casimir/algebra.hpp"
#include "casimir/rational.hpp"

namespace casimir {

struct VogelPoint {
    Rat alpha, beta, gamma;
    bool normalized() const { return alpha + beta + gamma == Rat(1, 2); }
    bool on_exceptional_line() const { return gamma == Rat(1, 3); }
};

VogelPoint vogel_point(const AlgebraId& id);

// c0 + ca*alpha + cb*beta + cg*gamma
struct AffineExpr {
    Rat c0, ca, cb, cg;
    Rat eval(const VogelPoint& p) const {
        return c0 + ca * p.alpha + cb * p.beta + cg * p.gamma;
    }
    std::string str() const;
    bool operator==(const AffineExpr&) const = default;
};

// Product of linear factors (coef*alpha + cnst) over another, times a scale.
struct RatFunc {
    Rat scale;
    std::vector<std::pair<long, long>> num;  // (coef, cnst)
    std::vector<std::pair<long, long>> den;
    // Throws PoleEncountered when a denominator factor vanishes.
    Rat eval(const Rat& alpha) const;
};

enum class DimKind {
    None,     // no formula anywhere in the catalog
    One,      // the trivial representation
    DimG,     // dim g itself (needs the algebra dimension)
    PolyDimG, // universal polynomial in dim g (X2..X5, M3)
    RatAlpha, // exceptional-line rational function of alpha
};

struct Table2Row {
    std::string label;
    AffineExpr c4, c2, c5;  // split 4-, 2-, 5-Casimir eigenvalue columns
    DimKind dim_kind = DimKind::None;
    RatFunc dim;  // meaningful only for RatAlpha
};

enum class Scope { EXCEPTIONAL_LINE, FULL };

struct CatalogEntry {
    std::string label;
    AffineExpr lambda;
    int mult = 1;
};

// All transcribed data in one mutable value, so tests can perturb a copy.
struct Catalog {
    std::vector<Table2Row> table2;
    std::vector<CatalogEntry> n2, n3, n4, n5_full, n5_line;

    const std::vector<CatalogEntry>& entries(int n, Scope scope) const;
    const Table2Row* find_row(const std::string& label) const;
};

Catalog make_catalog();

struct EvaluatedEntry {
    std::string label;
    Rat lambda;
    int mult;
};

std::vector<EvaluatedEntry> eigenvalue_catalog(int n, const VogelPoint& point,
                                               Scope scope,
                                               const Catalog& catalog);

struct Table2Dim {
    bool needs_dim_g = false;  // X1..X4: evaluate via dim_x with dim g
    Rat value;                 // defined when !needs_dim_g
};

// Appendix dim-column evaluation; valid on the exceptional line only.
// Throws NoFormula for labels without a dim entry, PoleEncountered at poles.
Table2Dim table2_dim(const Catalog& catalog, const std::string& label,
                     const Rat& alpha);

// Per-row consistency: the catalogued 4- and 5-Casimir eigenvalue columns must
// equal (c2-4)/2 and (c2-5)/2 as affine expressions.
struct LambdaConsistency {
    std::string label;
    bool c4_ok, c5_ok;
};
std::vector<LambdaConsistency> table2_lambda_consistency(
    const Catalog& catalog);

}  // namespace casimir
