#include "casimir/vogel.hpp"

#include <algorithm>

#include "casimir/error.hpp"

namespace casimir {

VogelPoint vogel_point(const AlgebraId& id) {
    int N = id.parameter;
    switch (id.family) {
        case Family::SL:
            return {rat(-1, N), rat(1, N), rat(1, 2)};
        case Family::SO:
            return {rat(-1, N - 2), rat(2, N - 2), rat(N - 4, 2 * N - 4)};
        case Family::SP:
            return {rat(1, N + 2), rat(-2, N + 2), rat(N + 4, 2 * N + 4)};
        case Family::G2:
            return {rat(-1, 4), rat(5, 12), rat(1, 3)};
        case Family::F4:
            return {rat(-1, 9), rat(5, 18), rat(1, 3)};
        case Family::E6:
            return {rat(-1, 12), rat(1, 4), rat(1, 3)};
        case Family::E7:
            return {rat(-1, 18), rat(2, 9), rat(1, 3)};
        case Family::E8:
            return {rat(-1, 30), rat(1, 5), rat(1, 3)};
    }
    throw Error(ErrorCode::UnsupportedAlgebra, "vogel_point");
}

namespace {

std::string rat_compact(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

void append_term(std::string& s, const Rat& coef, const char* var) {
    if (coef == 0) return;
    Rat a = abs(coef);
    s += (coef < 0) ? "-" : (s.empty() ? "" : "+");
    if (a == 1)
        s += var;
    else {
        s += rat_compact(a);
        s += "*";
        s += var;
    }
}

}  // namespace

std::string AffineExpr::str() const {
    std::string s;
    if (c0 != 0) s = rat_compact(c0);
    append_term(s, ca, "a");
    append_term(s, cb, "b");
    append_term(s, cg, "g");
    if (s.empty()) s = "0";
    return s;
}

Rat RatFunc::eval(const Rat& alpha) const {
    Rat n = scale;
    for (auto [c, k] : num) n *= Rat(c) * alpha + Rat(k);
    Rat d(1);
    for (auto [c, k] : den) {
        Rat factor = Rat(c) * alpha + Rat(k);
        if (factor == 0)
            throw Error(ErrorCode::PoleEncountered,
                        "dimension formula pole at alpha = " +
                            rat_to_string(alpha));
        d *= factor;
    }
    return n / d;
}

const std::vector<CatalogEntry>& Catalog::entries(int n, Scope scope) const {
    switch (n) {
        case 2: return n2;
        case 3: return n3;
        case 4: return n4;
        case 5: return scope == Scope::FULL ? n5_full : n5_line;
    }
    throw Error(ErrorCode::SlotOutOfRange, "catalog: n must be 2..5");
}

const Table2Row* Catalog::find_row(const std::string& label) const {
    for (const auto& r : table2)
        if (r.label == label) return &r;
    return nullptr;
}

namespace {

AffineExpr ae(Rat c0, Rat a = Rat(0), Rat b = Rat(0), Rat g = Rat(0)) {
    return {c0, a, b, g};
}

using Factors = std::vector<std::pair<long, long>>;

Table2Row row(const std::string& label, AffineExpr c4, AffineExpr c2,
              AffineExpr c5, DimKind kind, Rat scale = Rat(0),
              Factors num = {}, Factors den = {}) {
    Table2Row r;
    r.label = label;
    r.c4 = c4;
    r.c2 = c2;
    r.c5 = c5;
    r.dim_kind = kind;
    r.dim = {scale, std::move(num), std::move(den)};
    return r;
}

}  // namespace

Catalog make_catalog() {
    Catalog cat;
    const Rat h = rat(1, 2);

    // Appendix Table 2. Eigenvalue columns are affine in (a, b, g); the dim
    // column is a rational function of a on the exceptional line.
    auto& t = cat.table2;
    t.push_back(row("X0", ae(-2), ae(0), ae(rat(-5, 2)), DimKind::One));
    t.push_back(row("X1", ae(rat(-3, 2)), ae(1), ae(-2), DimKind::DimG));
    t.push_back(row("X2", ae(-1), ae(2), ae(rat(-3, 2)), DimKind::PolyDimG));
    t.push_back(row("X3", ae(-h), ae(3), ae(-1), DimKind::PolyDimG));
    t.push_back(row("X4", ae(0), ae(4), ae(-h), DimKind::PolyDimG));
    t.push_back(row("Y2", ae(-1, -1), ae(2, -2), ae(rat(-3, 2), -1),
                    DimKind::RatAlpha, Rat(-5), {{3, -2}, {6, 5}},
                    {{1, 0}, {1, 0}, {6, -1}, {12, -1}}));
    t.push_back(row("Y2'", ae(-1, 0, -1), ae(2, 0, -2), ae(rat(-3, 2), 0, -1),
                    DimKind::RatAlpha, Rat(-270), {{1, -1}, {2, 1}},
                    {{1, 0}, {6, -1}, {6, -1}, {12, -1}}));
    t.push_back(row("B''", ae(-1, 0, 0, 1), ae(2, 0, 0, 2),
                    ae(rat(-3, 2), 0, 0, 1), DimKind::RatAlpha, Rat(-27),
                    {{1, -1}, {2, 1}, {3, -2}, {3, 2}, {6, -5}, {6, 5}},
                    {{1, 0}, {1, 0}, {6, -1}, {6, -1}, {9, -1}, {18, -1}}));
    t.push_back(row("C", ae(-h, rat(-3, 2)), ae(3, -3), ae(-1, rat(-3, 2)),
                    DimKind::RatAlpha, rat(40, 3),
                    {{2, -1}, {2, 1}, {6, -5}, {6, 5}},
                    {{1, 0}, {1, 0}, {1, 0}, {6, -1}, {9, -1}, {12, -1}}));
    t.push_back(row("C'", ae(-h, 0, rat(-3, 2)), ae(3, 0, -3),
                    ae(-1, 0, rat(-3, 2)), DimKind::RatAlpha, Rat(5120),
                    {{1, -1}, {3, -2}, {3, 1}, {3, 2}},
                    {{1, 0}, {6, -1}, {6, -1}, {6, -1}, {12, -1}, {18, -1}}));
    t.push_back(row("J''", ae(-1, 0, 0, 2), ae(2, 0, 0, 4),
                    ae(rat(-3, 2), 0, 0, 2), DimKind::RatAlpha, Rat(729),
                    {{1, -1}, {2, -1}, {2, 1}, {3, -2}, {3, 1}, {4, 1},
                     {6, 5}, {12, -5}},
                    {{1, 0}, {1, 0}, {6, -1}, {6, -1}, {9, -1}, {12, -1},
                     {12, -1}, {18, -1}}));
    t.push_back(row("Y4", ae(0, -6), ae(4, -12), ae(-h, -6),
                    DimKind::RatAlpha, rat(-5, 6),
                    {{1, -1}, {2, -1}, {3, -2}, {6, -5}, {6, 5}, {7, -1},
                     {9, -2}, {12, -5}},
                    {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {6, -1}, {6, -1},
                     {9, -1}, {12, -1}, {18, -1}, {24, -1}}));
    t.push_back(row("Y4'", ae(0, 0, -6), ae(4, 0, -12), ae(-h, 0, -6),
                    DimKind::RatAlpha, Rat(-5),
                    {{1, -1}, {2, 1}, {3, 1}, {3, 2}, {4, 1}, {6, 5},
                     {18, 1}, {42, -1}},
                    {{1, 0}, {1, 0}, {6, -1}, {6, -1}, {6, -1}, {6, -1},
                     {8, -1}, {9, -1}, {12, -1}, {18, -1}}));
    t.push_back(row("D", ae(0, -3, -1), ae(4, -6, -2), ae(-h, -3, -1),
                    DimKind::RatAlpha, Rat(-270),
                    {{1, -1}, {2, -1}, {2, 1}, {3, 2}, {5, -1}, {6, 5},
                     {12, -5}},
                    {{1, 0}, {1, 0}, {1, 0}, {6, -1}, {6, -1}, {6, -1},
                     {12, -1}, {12, -1}, {24, -1}}));
    t.push_back(row("D'", ae(0, -1, -3), ae(4, -2, -6), ae(-h, -1, -3),
                    DimKind::RatAlpha, Rat(-10),
                    {{1, -1}, {3, -2}, {3, 1}, {4, 1}, {6, -5}, {6, 5},
                     {30, 1}},
                    {{1, 0}, {1, 0}, {1, 0}, {6, -1}, {6, -1}, {6, -1},
                     {8, -1}, {12, -1}, {12, -1}}));
    t.push_back(row("E''", ae(rat(-3, 4), 0, 0, rat(3, 2)),
                    ae(rat(5, 2), 0, 0, 3), ae(rat(-5, 4), 0, 0, rat(3, 2)),
                    DimKind::RatAlpha, Rat(2048),
                    {{1, -1}, {2, -1}, {2, 1}, {3, -2}, {3, 1}, {3, 2},
                     {6, -5}, {6, 5}},
                    {{1, 0}, {1, 0}, {6, -1}, {6, -1}, {8, -1}, {12, -1},
                     {12, -1}, {24, -1}}));
    t.push_back(row("H", ae(0, -3), ae(4, -6), ae(-h, -3), DimKind::RatAlpha,
                    rat(-5, 3),
                    {{1, -1}, {2, 1}, {3, 2}, {5, -1}, {6, -5}, {6, 5},
                     {9, -2}, {12, -5}},
                    {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {6, -1}, {6, -1},
                     {6, -1}, {9, -1}, {12, -1}, {12, -1}}));
    t.push_back(row("H'", ae(0, 0, -3), ae(4, 0, -6), ae(-h, 0, -3),
                    DimKind::RatAlpha, rat(-10, 3),
                    {{1, -1}, {3, -2}, {3, 2}, {4, 1}, {6, -5}, {6, 5},
                     {18, 1}, {30, 1}},
                    {{1, 0}, {1, 0}, {1, 0}, {6, -1}, {6, -1}, {6, -1},
                     {6, -1}, {12, -1}, {12, -1}, {18, -1}}));
    t.push_back(row("G", ae(0, -4), ae(4, -8), ae(-h, -4), DimKind::RatAlpha,
                    rat(5, 2),
                    {{1, -1}, {2, 1}, {3, -2}, {6, -5}, {6, 5}, {9, -2},
                     {12, -5}},
                    {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {6, -1}, {6, -1},
                     {12, -1}, {12, -1}, {18, -1}}));
    t.push_back(row("G'", ae(0, 0, -4), ae(4, 0, -8), ae(-h, 0, -4),
                    DimKind::RatAlpha, Rat(135),
                    {{1, -1}, {2, 1}, {3, -2}, {3, 2}, {4, 1}, {6, 5},
                     {18, 1}},
                    {{1, 0}, {1, 0}, {6, -1}, {6, -1}, {6, -1}, {6, -1},
                     {9, -1}, {12, -1}, {12, -1}}));
    t.push_back(row("F", ae(0, -2, -1), ae(4, -4, -2), ae(-h, -2, -1),
                    DimKind::RatAlpha, Rat(-270),
                    {{1, -1}, {2, 1}, {3, -2}, {3, 1}, {6, 5}, {12, -5}},
                    {{1, 0}, {1, 0}, {1, 0}, {6, -1}, {6, -1}, {12, -1},
                     {12, -1}, {18, -1}}));
    t.push_back(row("F'", ae(0, -1, -2), ae(4, -2, -4), ae(-h, -1, -2),
                    DimKind::RatAlpha, Rat(-3645),
                    {{1, -1}, {2, -1}, {2, 1}, {3, -2}, {4, 1}, {6, 5}},
                    {{1, 0}, {1, 0}, {6, -1}, {6, -1}, {6, -1}, {9, -1},
                     {12, -1}, {12, -1}}));
    t.push_back(row("Y3", ae(-h, -3), ae(3, -6), ae(-1, -3),
                    DimKind::RatAlpha, rat(-10, 3),
                    {{1, -1}, {3, -2}, {5, -1}, {6, -5}, {6, 5}},
                    {{1, 0}, {1, 0}, {1, 0}, {6, -1}, {6, -1}, {12, -1},
                     {18, -1}}));
    t.push_back(row("Y3'", ae(-h, 0, -3), ae(3, 0, -6), ae(-1, 0, -3),
                    DimKind::RatAlpha, Rat(-5),
                    {{1, -1}, {2, 1}, {3, 2}, {6, 5}, {30, 1}},
                    {{1, 0}, {1, 0}, {6, -1}, {6, -1}, {6, -1}, {9, -1},
                     {12, -1}}));
    t.push_back(row("I", ae(0, -2), ae(4, -4), ae(-h, -2), DimKind::RatAlpha,
                    rat(-5, 2),
                    {{3, -2}, {3, 1}, {3, 2}, {5, -1}, {6, -5}, {6, 5},
                     {12, -5}},
                    {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {6, -1}, {6, -1},
                     {8, -1}, {9, -1}, {12, -1}}));
    t.push_back(row("I'", ae(0, 0, -2), ae(4, 0, -4), ae(-h, 0, -2),
                    DimKind::RatAlpha, Rat(-3645),
                    {{1, -1}, {2, -1}, {2, 1}, {3, 2}, {4, 1}, {6, -5},
                     {30, 1}},
                    {{1, 0}, {1, 0}, {6, -1}, {6, -1}, {6, -1}, {6, -1},
                     {12, -1}, {18, -1}, {24, -1}}));

    // Eigenvalue lists per tensor power. lambda = (c2 - n)/2 throughout.
    cat.n2 = {{"X1", ae(-h), 1}, {"X2", ae(0), 1}};
    cat.n3 = {{"X0", ae(rat(-3, 2)), 1}, {"X2", ae(-h), 1}, {"X3", ae(0), 1},
              {"Y2", ae(-h, -1), 1},     {"Y2'", ae(-h, 0, -1), 1},
              {"Y2''", ae(-h, 0, 0, -1), 1}};
    cat.n4 = {{"X1", ae(rat(-3, 2)), 1},
              {"X2", ae(-1), 1},
              {"X3", ae(-h), 1},
              {"X4", ae(0), 1},
              {"Y2", ae(-1, -1), 1},
              {"Y2'", ae(-1, 0, -1), 1},
              {"Y2''", ae(-1, 0, 0, -1), 1},
              {"B", ae(-1, 1), 1},
              {"B'", ae(-1, 0, 1), 1},
              {"B''", ae(-1, 0, 0, 1), 1},
              {"C", ae(-h, rat(-3, 2)), 1},
              {"C'", ae(-h, 0, rat(-3, 2)), 1},
              {"C''", ae(-h, 0, 0, rat(-3, 2)), 1}};
    const Rat th = rat(3, 2);
    cat.n5_full = {{"X1", ae(-2), 2},
                   {"X2", ae(-th), 4},
                   {"M3", ae(-1), 1},
                   {"X4", ae(-h), 1},
                   {"X5", ae(0), 1},
                   {"B", ae(-th, 1), 3},
                   {"B'", ae(-th, 0, 1), 3},
                   {"B''", ae(-th, 0, 0, 1), 3},
                   {"C", ae(-1, -th), 2},
                   {"C'", ae(-1, 0, -th), 2},
                   {"C''", ae(-1, 0, 0, -th), 2},
                   {"E", ae(-h, 0, -th, -th), 1},
                   {"E'", ae(-h, -th, 0, -th), 1},
                   {"E''", ae(-h, -th, -th, 0), 1},
                   {"F", ae(-h, -2, -1), 1},
                   {"F'", ae(-h, -1, -2), 1},
                   {"F''", ae(-h, 0, -1, -2), 1},
                   {"F'''", ae(-h, -2, 0, -1), 1},
                   {"F(4)", ae(-h, 0, -2, -1), 1},
                   {"F(5)", ae(-h, -1, 0, -2), 1},
                   {"Y3", ae(-1, -3), 1},
                   {"Y3'", ae(-1, 0, -3), 1},
                   {"Y3''", ae(-1, 0, 0, -3), 1},
                   {"I", ae(-h, -2), 1},
                   {"I'", ae(-h, 0, -2), 1},
                   {"I''", ae(-h, 0, 0, -2), 1}};
    cat.n5_line = {{"X1", ae(-2), 1},
                   {"X2", ae(-th), 2},
                   {"X4", ae(-h), 1},
                   {"X5", ae(0), 1},
                   {"B''", ae(rat(-7, 6)), 2},
                   {"C", ae(-1, -th), 1},
                   {"C'", ae(-1, 0, -th), 1},
                   {"E''", ae(-h, -th, -th, 0), 1},
                   {"F", ae(-h, -2, -1), 1},
                   {"F'", ae(-h, -1, -2), 1},
                   {"Y3", ae(-1, -3), 1},
                   {"Y3'", ae(-1, 0, -3), 1},
                   {"I", ae(-h, -2), 1},
                   {"I'", ae(-h, 0, -2), 1}};
    return cat;
}

std::vector<EvaluatedEntry> eigenvalue_catalog(int n, const VogelPoint& point,
                                               Scope scope,
                                               const Catalog& catalog) {
    std::vector<EvaluatedEntry> out;
    for (const auto& e : catalog.entries(n, scope))
        out.push_back({e.label, e.lambda.eval(point), e.mult});
    return out;
}

Table2Dim table2_dim(const Catalog& catalog, const std::string& label,
                     const Rat& alpha) {
    const Table2Row* r = catalog.find_row(label);
    if (!r || r->dim_kind == DimKind::None)
        throw Error(ErrorCode::NoFormula,
                    "no Table 2 dimension formula for " + label);
    switch (r->dim_kind) {
        case DimKind::One: return {false, Rat(1)};
        case DimKind::DimG:
        case DimKind::PolyDimG: return {true, Rat(0)};
        case DimKind::RatAlpha: return {false, r->dim.eval(alpha)};
        default: break;
    }
    throw Error(ErrorCode::NoFormula, label);
}

std::vector<LambdaConsistency> table2_lambda_consistency(
    const Catalog& catalog) {
    std::vector<LambdaConsistency> out;
    for (const auto& r : catalog.table2) {
        AffineExpr c4_expect{(r.c2.c0 - 4) / 2, r.c2.ca / 2, r.c2.cb / 2,
                             r.c2.cg / 2};
        AffineExpr c5_expect{(r.c2.c0 - 5) / 2, r.c2.ca / 2, r.c2.cb / 2,
                             r.c2.cg / 2};
        out.push_back({r.label, r.c4 == c4_expect, r.c5 == c5_expect});
    }
    return out;
}

}  // namespace casimir
