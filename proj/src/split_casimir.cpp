#include "casimir/split_casimir.hpp"

#include <algorithm>
#include <map>

namespace casimir {

Rat SplitCasimir::entry(int a, int b, int c, int d) const {
    if (!dense.empty())
        return dense[((static_cast<size_t>(a) * dim + b) * dim + c) * dim + d];
    for (const auto& [aa, bb, v] : slice(c, d))
        if (aa == a && bb == b) return v;
    return Rat(0);
}

std::vector<std::tuple<int, int, int, int, Rat>> SplitCasimir::quadruples()
    const {
    std::vector<std::tuple<int, int, int, int, Rat>> out;
    for (int c = 0; c < dim; ++c)
        for (int d = 0; d < dim; ++d)
            for (const auto& [a, b, v] : slice(c, d))
                out.emplace_back(a, b, c, d, v);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::tie(std::get<0>(x), std::get<1>(x), std::get<2>(x),
                        std::get<3>(x)) < std::tie(std::get<0>(y),
                                                   std::get<1>(y),
                                                   std::get<2>(y),
                                                   std::get<3>(y));
    });
    return out;
}

Int SplitCasimir::denominator_lcm() const {
    Int l(1);
    for (const auto& s : slices)
        for (const auto& [a, b, v] : s)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    return l;
}

SplitCasimir split_casimir_2(const AdjointRep& adj,
                             const KillingMetric& metric) {
    int d = adj.dim;
    if (static_cast<int>(metric.g_inv.size()) != d)
        throw Error(ErrorCode::DimensionMismatch,
                    "adjoint and metric dimensions differ");
    SplitCasimir C;
    C.dim = d;
    C.g = metric.g;
    C.g_inv = metric.g_inv;
    C.slices.assign(static_cast<size_t>(d) * d, {});
    for (int c = 0; c < d; ++c)
        for (int dd = 0; dd < d; ++dd) {
            std::map<std::pair<int, int>, Rat> acc;
            for (int x = 0; x < d; ++x) {
                if (adj.cols[x][c].empty()) continue;
                for (int y = 0; y < d; ++y) {
                    const Rat& gxy = metric.g_inv[x][y];
                    if (gxy == 0) continue;
                    for (const auto& [a, va] : adj.cols[x][c])
                        for (const auto& [b, vb] : adj.cols[y][dd])
                            acc[{a, b}] += gxy * va * vb;
                }
            }
            auto& out = C.slices[c * d + dd];
            for (const auto& [ab, v] : acc)
                if (v != 0) out.emplace_back(ab.first, ab.second, v);
        }
    if (d <= 16) {
        C.dense.assign(static_cast<size_t>(d) * d * d * d, Rat(0));
        for (int c = 0; c < d; ++c)
            for (int dd = 0; dd < d; ++dd)
                for (const auto& [a, b, v] : C.slice(c, dd))
                    C.dense[((static_cast<size_t>(a) * d + b) * d + c) * d +
                            dd] = v;
    }
    return C;
}

CasimirIdentityReport verify_casimir_identities(const SplitCasimir& C) {
    int d = C.dim;
    CasimirIdentityReport rep;

    // sum_i C^{ij}_{il} = 0 for every (j,l): contract upper-1 with lower-1.
    std::vector<Rat> t1(static_cast<size_t>(d) * d, Rat(0));
    // sum_l C^{il}_{jl} = 0 for every (i,j): contract upper-2 with lower-2.
    std::vector<Rat> t2(static_cast<size_t>(d) * d, Rat(0));
    Rat full(0);   // C^{ij}_{ji}, both pairs contracted up-down
    Rat upper(0);  // C^{ii}_{jj}: same-level pairs contract through g
    for (int c = 0; c < d; ++c)
        for (int dd = 0; dd < d; ++dd)
            for (const auto& [a, b, v] : C.slice(c, dd)) {
                if (a == c) t1[b * d + dd] += v;
                if (b == dd) t2[a * d + c] += v;
                if (a == dd && b == c) full += v;
                if (C.g[a][b] != 0 && C.g_inv[c][dd] != 0)
                    upper += C.g[a][b] * v * C.g_inv[c][dd];
            }
    Rat r1(0), r2(0);
    for (const auto& v : t1) r1 += v * v;
    for (const auto& v : t2) r2 += v * v;
    rep.lines.push_back({"partial-trace-upper1-lower1", r1 == 0, r1});
    rep.lines.push_back({"partial-trace-upper2-lower2", r2 == 0, r2});
    Rat fr = full - Rat(d);
    rep.lines.push_back({"full-trace-dim", fr == 0, fr});
    Rat ur = upper + Rat(d);
    rep.lines.push_back({"double-upper-trace-minus-dim", ur == 0, ur});
    return rep;
}

std::uint32_t encode_tuple(const int* idx, int n) {
    std::uint32_t key = 0;
    for (int s = 0; s < n; ++s)
        key |= static_cast<std::uint32_t>(idx[s]) << (6 * s);
    return key;
}

void decode_tuple(std::uint32_t key, int* idx, int n) {
    for (int s = 0; s < n; ++s) idx[s] = (key >> (6 * s)) & 0x3f;
}

TensorVec pair_apply(const SplitCasimir& C, int n, int i, int j,
                     const TensorVec& v) {
    if (!(1 <= i && i < j && j <= n))
        throw Error(ErrorCode::SlotOutOfRange, "pair_apply: bad slots");
    TensorVec out;
    out.reserve(v.size() * 4);
    int idx[5];
    for (const auto& [key, coeff] : v) {
        decode_tuple(key, idx, n);
        int c = idx[i - 1], d = idx[j - 1];
        for (const auto& [a, b, val] : C.slice(c, d)) {
            idx[i - 1] = a;
            idx[j - 1] = b;
            out[encode_tuple(idx, n)] += coeff * val;
        }
        idx[i - 1] = c;
        idx[j - 1] = d;
    }
    // drop exact cancellations
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

TensorVec casimir_n_apply(const SplitCasimir& C, int n, const TensorVec& v) {
    TensorVec out;
    int idx[5];
    for (const auto& [key, coeff] : v) {
        decode_tuple(key, idx, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int c = idx[i], d = idx[j];
                for (const auto& [a, b, val] : C.slice(c, d)) {
                    idx[i] = a;
                    idx[j] = b;
                    out[encode_tuple(idx, n)] += coeff * val;
                    idx[i] = c;
                    idx[j] = d;
                }
            }
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace casimir
