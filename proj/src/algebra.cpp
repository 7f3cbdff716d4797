#include "casimir/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace casimir {

namespace detail {
StructureConstants chevalley_g2();
}

AlgebraId AlgebraId::parse(const std::string& name) {
    std::string s;
    for (char c : name) s.push_back(static_cast<char>(std::tolower(c)));
    auto num = [&](size_t from) -> int {
        if (from >= s.size()) return 0;
        for (size_t i = from; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return -1;
        return std::stoi(s.substr(from));
    };
    AlgebraId id;
    if (s == "g2") return {Family::G2, 0};
    if (s == "f4") return {Family::F4, 0};
    if (s == "e6") return {Family::E6, 0};
    if (s == "e7") return {Family::E7, 0};
    if (s == "e8") return {Family::E8, 0};
    if (s.rfind("sl", 0) == 0) {
        id = {Family::SL, num(2)};
    } else if (s.rfind("so", 0) == 0) {
        id = {Family::SO, num(2)};
    } else if (s.rfind("sp", 0) == 0) {
        id = {Family::SP, num(2)};
    } else {
        throw Error(ErrorCode::UnsupportedAlgebra, "unknown algebra: " + name);
    }
    bool ok = (id.family == Family::SL && id.parameter >= 2) ||
              (id.family == Family::SO && id.parameter >= 3) ||
              (id.family == Family::SP && id.parameter >= 2 &&
               id.parameter % 2 == 0);
    if (!ok)
        throw Error(ErrorCode::UnsupportedAlgebra,
                    "invalid parameter in: " + name);
    return id;
}

std::string AlgebraId::name() const {
    switch (family) {
        case Family::SL: return "sl" + std::to_string(parameter);
        case Family::SO: return "so" + std::to_string(parameter);
        case Family::SP: return "sp" + std::to_string(parameter);
        case Family::G2: return "g2";
        case Family::F4: return "f4";
        case Family::E6: return "e6";
        case Family::E7: return "e7";
        case Family::E8: return "e8";
    }
    return "?";
}

int AlgebraId::dim() const {
    switch (family) {
        case Family::SL: return parameter * parameter - 1;
        case Family::SO: return parameter * (parameter - 1) / 2;
        case Family::SP: {
            int r = parameter / 2;
            return r * (2 * r + 1);
        }
        case Family::G2: return 14;
        case Family::F4: return 52;
        case Family::E6: return 78;
        case Family::E7: return 133;
        case Family::E8: return 248;
    }
    return 0;
}

bool AlgebraId::exceptional() const {
    return family == Family::G2 || family == Family::F4 ||
           family == Family::E6 || family == Family::E7 ||
           family == Family::E8;
}

bool AlgebraId::constructible() const {
    if (family == Family::G2) return true;
    if (exceptional()) return false;
    if (family == Family::SO && parameter == 4) return false;  // not simple
    return dim() <= 28;
}

Rat StructureConstants::f(int a, int b, int c) const {
    for (const auto& [cc, v] : brackets[a][b])
        if (cc == c) return v;
    return Rat(0);
}

std::vector<std::tuple<int, int, int, Rat>> StructureConstants::entries()
    const {
    std::vector<std::tuple<int, int, int, Rat>> out;
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            for (const auto& [c, v] : brackets[a][b])
                out.emplace_back(a, b, c, v);
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) {
                  return std::tie(std::get<0>(x), std::get<1>(x),
                                  std::get<2>(x)) <
                         std::tie(std::get<0>(y), std::get<1>(y),
                                  std::get<2>(y));
              });
    return out;
}

namespace {

using Mat = std::vector<std::vector<Rat>>;

Mat zeros(int n) { return Mat(n, std::vector<Rat>(n, Rat(0))); }

Mat commutator(const Mat& x, const Mat& y) {
    int n = static_cast<int>(x.size());
    Mat out = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (x[i][k] != 0) {
                for (int j = 0; j < n; ++j)
                    if (y[k][j] != 0) out[i][j] += x[i][k] * y[k][j];
            }
            if (y[i][k] != 0) {
                for (int j = 0; j < n; ++j)
                    if (x[k][j] != 0) out[i][j] -= y[i][k] * x[k][j];
            }
        }
    return out;
}

// Builds structure constants from explicit matrices plus an exact expansion
// of a bracket back into basis coordinates. The reassembly check below makes
// expansion bugs impossible to miss.
StructureConstants from_matrix_basis(
    const std::vector<Mat>& basis,
    const std::function<std::vector<Rat>(const Mat&)>& expand) {
    int dim = static_cast<int>(basis.size());
    int n = static_cast<int>(basis[0].size());
    StructureConstants f;
    f.dim = dim;
    f.brackets.assign(dim, std::vector<std::vector<std::pair<int, Rat>>>(dim));
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            Mat m = commutator(basis[a], basis[b]);
            std::vector<Rat> coeff = expand(m);
            Mat check = zeros(n);
            for (int c = 0; c < dim; ++c) {
                if (coeff[c] == 0) continue;
                f.brackets[a][b].emplace_back(c, coeff[c]);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (basis[c][i][j] != 0)
                            check[i][j] += coeff[c] * basis[c][i][j];
            }
            if (check != m)
                throw Error(ErrorCode::InternalConsistency,
                            "basis expansion failed to close");
        }
    return f;
}

StructureConstants build_sl(int N) {
    // Basis order: E_ij (i<j, lex), H_k = E_kk - E_{k+1,k+1}, E_ij (i>j, lex).
    std::vector<Mat> basis;
    std::vector<std::pair<int, int>> uppers, lowers;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) uppers.emplace_back(i, j);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < i; ++j) lowers.emplace_back(i, j);
    auto unit = [&](int i, int j) {
        Mat m = zeros(N);
        m[i][j] = 1;
        return m;
    };
    for (auto [i, j] : uppers) basis.push_back(unit(i, j));
    for (int k = 0; k + 1 < N; ++k) {
        Mat m = zeros(N);
        m[k][k] = 1;
        m[k + 1][k + 1] = -1;
        basis.push_back(m);
    }
    for (auto [i, j] : lowers) basis.push_back(unit(i, j));

    auto expand = [=](const Mat& m) {
        std::vector<Rat> coeff(N * N - 1, Rat(0));
        int idx = 0;
        for (auto [i, j] : uppers) coeff[idx++] = m[i][j];
        Rat partial(0);
        for (int k = 0; k + 1 < N; ++k) {
            partial += m[k][k];
            coeff[idx++] = partial;
        }
        for (auto [i, j] : lowers) coeff[idx++] = m[i][j];
        return coeff;
    };
    return from_matrix_basis(basis, expand);
}

StructureConstants build_so(int N) {
    // Basis M_ij = E_ij - E_ji, i<j, lex order.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) pairs.emplace_back(i, j);
    std::vector<Mat> basis;
    for (auto [i, j] : pairs) {
        Mat m = zeros(N);
        m[i][j] = 1;
        m[j][i] = -1;
        basis.push_back(m);
    }
    auto expand = [=](const Mat& m) {
        std::vector<Rat> coeff(pairs.size(), Rat(0));
        for (size_t k = 0; k < pairs.size(); ++k)
            coeff[k] = m[pairs[k].first][pairs[k].second];
        return coeff;
    };
    return from_matrix_basis(basis, expand);
}

StructureConstants build_sp(int twoR) {
    int r = twoR / 2;
    int n = 2 * r;
    // X = [[A, B], [C, -A^T]] with B, C symmetric.
    std::vector<Mat> basis;
    auto mat = [&]() { return zeros(n); };
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Mat m = mat();
            m[i][j] = 1;
            m[r + j][r + i] = -1;
            basis.push_back(m);
        }
    std::vector<std::pair<int, int>> sym;
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) sym.emplace_back(i, j);
    for (auto [i, j] : sym) {  // i == j lands on the same cell once
        Mat m = mat();
        m[i][r + j] = 1;
        m[j][r + i] = 1;
        basis.push_back(m);
    }
    for (auto [i, j] : sym) {
        Mat m = mat();
        m[r + i][j] = 1;
        m[r + j][i] = 1;
        basis.push_back(m);
    }
    auto expand = [=](const Mat& m) {
        std::vector<Rat> coeff;
        coeff.reserve(r * (2 * r + 1));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) coeff.push_back(m[i][j]);
        for (auto [i, j] : sym) coeff.push_back(m[i][r + j]);
        for (auto [i, j] : sym) coeff.push_back(m[r + i][j]);
        return coeff;
    };
    return from_matrix_basis(basis, expand);
}

}  // namespace

StructureConstants build_algebra(const AlgebraId& id) {
    if (!id.constructible()) {
        std::string why = id.exceptional() && id.family != Family::G2
                              ? "formula-level only"
                          : (id.family == Family::SO && id.parameter == 4)
                              ? "so(4) is not simple"
                              : "dimension exceeds construction cap (28)";
        throw Error(ErrorCode::UnsupportedAlgebra, id.name() + ": " + why);
    }
    StructureConstants f;
    switch (id.family) {
        case Family::SL: f = build_sl(id.parameter); break;
        case Family::SO: f = build_so(id.parameter); break;
        case Family::SP: f = build_sp(id.parameter); break;
        case Family::G2: f = detail::chevalley_g2(); break;
        default:
            throw Error(ErrorCode::UnsupportedAlgebra, id.name());
    }
    if (f.dim != id.dim())
        throw Error(ErrorCode::InternalConsistency, "dimension mismatch");
    if (!satisfies_antisymmetry(f) || !satisfies_jacobi(f))
        throw Error(ErrorCode::InternalConsistency,
                    id.name() + ": Jacobi/antisymmetry scan failed");
    return f;
}

KillingMetric killing_metric(const StructureConstants& f) {
    int d = f.dim;
    KillingMetric m;
    m.g.assign(d, std::vector<Rat>(d, Rat(0)));
    // g_ab = Tr(ad a . ad b) = sum_c sum_e f_bc^e f_ae^c
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            Rat acc(0);
            for (int c = 0; c < d; ++c)
                for (const auto& [e, v1] : f.brackets[b][c])
                    for (const auto& [c2, v2] : f.brackets[a][e])
                        if (c2 == c) acc += v1 * v2;
            m.g[a][b] = acc;
        }
    // Exact Gauss-Jordan inverse.
    Mat aug = m.g;
    Mat inv = zeros(d);
    for (int i = 0; i < d; ++i) inv[i][i] = 1;
    for (int col = 0; col < d; ++col) {
        int piv = -1;
        for (int r = col; r < d; ++r)
            if (aug[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            throw Error(ErrorCode::DegenerateMetric,
                        "Killing metric is singular");
        std::swap(aug[piv], aug[col]);
        std::swap(inv[piv], inv[col]);
        Rat p = aug[col][col];
        for (int j = 0; j < d; ++j) {
            aug[col][j] /= p;
            inv[col][j] /= p;
        }
        for (int r = 0; r < d; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            Rat fmul = aug[r][col];
            for (int j = 0; j < d; ++j) {
                aug[r][j] -= fmul * aug[col][j];
                inv[r][j] -= fmul * inv[col][j];
            }
        }
    }
    m.g_inv = inv;
    return m;
}

AdjointRep adjoint_rep(const StructureConstants& f) {
    AdjointRep adj;
    adj.dim = f.dim;
    adj.cols = f.brackets;  // (ad X_a)^c_b = f_ab^c, column b of ad[a]
    return adj;
}

bool satisfies_antisymmetry(const StructureConstants& f) {
    for (int a = 0; a < f.dim; ++a)
        for (int b = 0; b < f.dim; ++b)
            for (int c = 0; c < f.dim; ++c)
                if (f.f(a, b, c) != -f.f(b, a, c)) return false;
    return true;
}

bool satisfies_jacobi(const StructureConstants& f) {
    int d = f.dim;
    // sum_e f_ab^e f_ec^x + f_bc^e f_ea^x + f_ca^e f_eb^x = 0
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b)
            for (int c = b; c < d; ++c) {
                std::map<int, Rat> acc;
                auto addmul = [&](int u, int v, int w) {
                    for (const auto& [e, x] : f.brackets[u][v])
                        for (const auto& [t, y] : f.brackets[e][w])
                            acc[t] += x * y;
                };
                addmul(a, b, c);
                addmul(b, c, a);
                addmul(c, a, b);
                for (const auto& [t, v] : acc)
                    if (v != 0) return false;
            }
    return true;
}

bool satisfies_representation_property(const StructureConstants& f,
                                       const AdjointRep& adj) {
    int d = f.dim;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            // column-by-column: [ad_a, ad_b] e_x vs sum_c f_ab^c ad_c e_x
            for (int x = 0; x < d; ++x) {
                std::map<int, Rat> lhs;
                for (const auto& [m, v] : adj.cols[b][x])
                    for (const auto& [r, w] : adj.cols[a][m]) lhs[r] += v * w;
                for (const auto& [m, v] : adj.cols[a][x])
                    for (const auto& [r, w] : adj.cols[b][m]) lhs[r] -= v * w;
                for (const auto& [c, v] : f.brackets[a][b])
                    for (const auto& [r, w] : adj.cols[c][x]) lhs[r] -= v * w;
                for (const auto& [r, v] : lhs)
                    if (v != 0) return false;
            }
        }
    return true;
}

bool quadratic_casimir_is_identity(const StructureConstants& f,
                                   const KillingMetric& metric,
                                   const AdjointRep& adj) {
    int d = f.dim;
    Mat cas = zeros(d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            if (metric.g_inv[a][b] == 0) continue;
            for (int x = 0; x < d; ++x)
                for (const auto& [m, v] : adj.cols[b][x])
                    for (const auto& [r, w] : adj.cols[a][m])
                        cas[r][x] += metric.g_inv[a][b] * v * w;
        }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (cas[i][j] != Rat(i == j ? 1 : 0)) return false;
    return true;
}

Rat metric_determinant(const KillingMetric& metric) {
    Mat a = metric.g;
    int d = static_cast<int>(a.size());
    Rat det(1);
    for (int col = 0; col < d; ++col) {
        int piv = -1;
        for (int r = col; r < d; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rat p = a[col][col];
        for (int r = col + 1; r < d; ++r) {
            if (a[r][col] == 0) continue;
            Rat fmul = a[r][col] / p;
            for (int j = col; j < d; ++j) a[r][j] -= fmul * a[col][j];
        }
    }
    return det;
}

}  // namespace casimir
