#include "casimir/wedge.hpp"

#include <algorithm>
#include <map>

#include "casimir/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace casimir {

long WedgeBasis::index_of(const int* idx) const {
    auto it = rank.find(encode_tuple(idx, n));
    return it == rank.end() ? -1 : it->second;
}

WedgeBasis wedge_basis(int dim_g, int n) {
    if (n < 2 || n > 5)
        throw Error(ErrorCode::SlotOutOfRange, "wedge_basis: n must be 2..5");
    WedgeBasis b;
    b.dim_g = dim_g;
    b.n = n;
    if (dim_g < n) return b;
    std::array<int, 5> t{};
    for (int s = 0; s < n; ++s) t[s] = s;
    while (true) {
        b.rank[encode_tuple(t.data(), n)] = static_cast<long>(b.tuples.size());
        b.tuples.push_back(t);
        int s = n - 1;
        while (s >= 0 && t[s] == dim_g - n + s) --s;
        if (s < 0) break;
        ++t[s];
        for (int u = s + 1; u < n; ++u) t[u] = t[u - 1] + 1;
    }
    return b;
}

Rat WedgeOperator::entry(long row, long col) const {
    for (const auto& [r, v] : cols[col])
        if (r == row) return v;
    return Rat(0);
}

namespace {

// Sorts idx[0..n) in place; returns the sign of the sorting permutation,
// or 0 if two entries coincide.
int sort_sign(int* idx, int n) {
    int sign = 1;
    for (int i = 1; i < n; ++i) {
        int v = idx[i];
        int j = i - 1;
        while (j >= 0 && idx[j] > v) {
            idx[j + 1] = idx[j];
            --j;
            sign = -sign;
        }
        idx[j + 1] = v;
    }
    for (int i = 1; i < n; ++i)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

// One wedge column: apply every pair term to the sorted tuple, then
// re-antisymmetrize by sorting outputs with sign and dropping repeats.
std::vector<std::pair<long, Rat>> build_column(const SplitCasimir& C,
                                               const WedgeBasis& basis,
                                               long col) {
    int n = basis.n;
    const auto& T = basis.tuples[col];
    std::map<long, Rat> acc;
    int out[5];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int c = T[i], d = T[j];
            for (const auto& [a, b, v] : C.slice(c, d)) {
                for (int s = 0; s < n; ++s) out[s] = T[s];
                out[i] = a;
                out[j] = b;
                int sign = sort_sign(out, n);
                if (sign == 0) continue;
                long row = basis.index_of(out);
                if (sign > 0)
                    acc[row] += v;
                else
                    acc[row] -= v;
            }
        }
    std::vector<std::pair<long, Rat>> colv;
    colv.reserve(acc.size());
    for (const auto& [r, v] : acc)
        if (v != 0) colv.emplace_back(r, v);
    return colv;
}

}  // namespace

WedgeOperator restrict_casimir_serial(const SplitCasimir& C,
                                      const WedgeBasis& basis) {
    if (basis.dim_g != C.dim)
        throw Error(ErrorCode::DimensionMismatch,
                    "wedge basis and Casimir tensor dimensions differ");
    WedgeOperator op;
    op.size = basis.size();
    op.dim_g = basis.dim_g;
    op.n = basis.n;
    op.cols.resize(op.size);
    for (long col = 0; col < op.size; ++col)
        op.cols[col] = build_column(C, basis, col);
    return op;
}

WedgeOperator restrict_casimir(const SplitCasimir& C,
                               const WedgeBasis& basis) {
    if (basis.dim_g != C.dim)
        throw Error(ErrorCode::DimensionMismatch,
                    "wedge basis and Casimir tensor dimensions differ");
    WedgeOperator op;
    op.size = basis.size();
    op.dim_g = basis.dim_g;
    op.n = basis.n;
    op.cols.resize(op.size);
#pragma omp parallel for schedule(dynamic, 16)
    for (long col = 0; col < op.size; ++col)
        op.cols[col] = build_column(C, basis, col);
    return op;
}

namespace {

struct ScaledMat {
    long size = 0;
    Int scale;
    std::vector<std::vector<std::pair<long, Int>>> cols;
};

ScaledMat scale_to_integers(const WedgeOperator& op, bool transpose) {
    ScaledMat m;
    m.size = op.size;
    m.scale = 1;
    for (const auto& col : op.cols)
        for (const auto& [r, v] : col)
            mpz_lcm(m.scale.get_mpz_t(), m.scale.get_mpz_t(),
                    v.get_den().get_mpz_t());
    m.cols.resize(op.size);
    for (long c = 0; c < op.size; ++c)
        for (const auto& [r, v] : op.cols[c]) {
            Int iv = v.get_num() * (m.scale / v.get_den());
            if (transpose)
                m.cols[r].emplace_back(c, iv);
            else
                m.cols[c].emplace_back(r, iv);
        }
    return m;
}

// Dense integer workspace reused across columns of one thread.
struct Scratch {
    std::vector<Int> val;
    std::vector<long> touched;
    explicit Scratch(long size) : val(size, Int(0)) {}
    void clear() {
        for (long i : touched) val[i] = 0;
        touched.clear();
    }
};

// y = A x with x given as (index, value) pairs; y accumulated in scratch.
void apply_scaled(const ScaledMat& A,
                  const std::vector<std::pair<long, Int>>& x, Scratch& y) {
    for (const auto& [i, xv] : x)
        for (const auto& [r, av] : A.cols[i]) {
            if (y.val[r] == 0) y.touched.push_back(r);
            mpz_addmul(y.val[r].get_mpz_t(), av.get_mpz_t(), xv.get_mpz_t());
        }
}

std::vector<std::pair<long, Int>> compact(Scratch& s) {
    std::vector<std::pair<long, Int>> out;
    out.reserve(s.touched.size());
    // touched may hold duplicates (a cell can cross zero mid-accumulation);
    // zeroing on emission makes the second visit a no-op.
    for (long i : s.touched)
        if (s.val[i] != 0) {
            out.emplace_back(i, s.val[i]);
            s.val[i] = 0;
        }
    s.touched.clear();
    return out;
}

std::vector<std::pair<long, Int>> power_column(const ScaledMat& A, long j,
                                               int k, Scratch& scratch) {
    std::vector<std::pair<long, Int>> x{{j, Int(1)}};
    for (int t = 0; t < k; ++t) {
        apply_scaled(A, x, scratch);
        x = compact(scratch);
    }
    return x;
}

}  // namespace

Rat trace_power(const WedgeOperator& op, int k, const RunConfig* caps) {
    if (k < 0) throw Error(ErrorCode::SlotOutOfRange, "trace_power: k < 0");
    if (caps) {
        if (op.size > caps->max_wedge_dim)
            throw Error(ErrorCode::ResourceCap,
                        "wedge dimension " + std::to_string(op.size) +
                            " exceeds cap " +
                            std::to_string(caps->max_wedge_dim));
        if (op.n == 5 && op.dim_g > caps->trace_dim_cap_n5)
            throw Error(ErrorCode::ResourceCap,
                        "n=5 traces capped at dim g <= " +
                            std::to_string(caps->trace_dim_cap_n5));
    }
    if (k == 0) return Rat(op.size);
    ScaledMat A = scale_to_integers(op, false);
    ScaledMat At = scale_to_integers(op, true);
    int ka = k / 2, kb = k - ka;

    int nthreads = 1;
#ifdef _OPENMP
    nthreads = omp_get_max_threads();
#endif
    std::vector<Int> partial(nthreads, Int(0));
#pragma omp parallel
    {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        Scratch s1(op.size), s2(op.size);
        Int dot(0);
#pragma omp for schedule(dynamic, 8)
        for (long j = 0; j < op.size; ++j) {
            auto u = power_column(A, j, kb, s1);
            if (ka == 0) {
                for (const auto& [r, v] : u)
                    if (r == j) partial[tid] += v;
                continue;
            }
            auto w = power_column(At, j, ka, s2);
            dot = 0;
            if (u.size() > w.size()) std::swap(u, w);
            for (auto& [r, v] : w) {
                if (s1.val[r] == 0) s1.touched.push_back(r);
                s1.val[r] = std::move(v);
            }
            for (const auto& [r, v] : u)
                mpz_addmul(dot.get_mpz_t(), v.get_mpz_t(),
                           s1.val[r].get_mpz_t());
            s1.clear();
            partial[tid] += dot;
        }
    }
    Int total(0);
    for (const auto& p : partial) total += p;
    Rat result(total);
    result /= Rat(int_pow(A.scale, static_cast<unsigned>(k)));
    return result;
}

Rat trace_power_serial(const WedgeOperator& op, int k) {
    if (k == 0) return Rat(op.size);
    Rat acc(0);
    std::vector<Rat> v(op.size, Rat(0)), next(op.size, Rat(0));
    for (long j = 0; j < op.size; ++j) {
        for (long i = 0; i < op.size; ++i) v[i] = 0;
        v[j] = 1;
        for (int t = 0; t < k; ++t) {
            for (long i = 0; i < op.size; ++i) next[i] = 0;
            for (long c = 0; c < op.size; ++c) {
                if (v[c] == 0) continue;
                for (const auto& [r, val] : op.cols[c]) next[r] += v[c] * val;
            }
            std::swap(v, next);
        }
        acc += v[j];
    }
    return acc;
}

bool satisfies_quadratic_identity(const WedgeOperator& op, const Rat& lambda) {
    std::vector<Rat> u(op.size, Rat(0));
    std::vector<long> touched;
    for (long j = 0; j < op.size; ++j) {
        for (const auto& [r, v] : op.cols[j]) {
            if (u[r] == 0) touched.push_back(r);
            u[r] += v;
        }
        // column j of op*(op + lambda I): op*(col_j) + lambda*col_j
        std::map<long, Rat> acc;
        for (long r : touched) {
            if (u[r] == 0) continue;
            acc[r] += lambda * u[r];
            for (const auto& [rr, vv] : op.cols[r]) acc[rr] += u[r] * vv;
        }
        for (long r : touched) u[r] = 0;
        touched.clear();
        for (const auto& [r, v] : acc)
            if (v != 0) return false;
    }
    return true;
}

TensorVec asym_apply(int n, const TensorVec& v) {
    // ASym_n = (1/n!) F_n F_{n-1} ... F_2 with
    // F_j = sum_{t=0..j-1} (-1)^t sigma_{j-t,j-t+1} ... sigma_{j-1,j}.
    TensorVec cur = v;
    int idx[5];
    for (int j = 2; j <= n; ++j) {
        TensorVec next;
        next.reserve(cur.size() * j);
        for (const auto& [key, coeff] : cur) {
            decode_tuple(key, idx, n);
            Rat c = coeff;
            // t = 0 term
            next[key] += c;
            for (int t = 1; t < j; ++t) {
                // right-to-left application of the adjacent swaps
                std::swap(idx[j - t - 1], idx[j - t]);
                c = -c;  // reuse accumulated tuple, alternate sign
                next[encode_tuple(idx, n)] += c;
            }
            decode_tuple(key, idx, n);
        }
        cur.swap(next);
    }
    Rat fact(1);
    for (int t = 2; t <= n; ++t) fact *= t;
    TensorVec out;
    out.reserve(cur.size());
    for (const auto& [key, coeff] : cur) {
        if (coeff == 0) continue;
        out[key] = coeff / fact;
    }
    return out;
}

Rat full_projector_trace(const SplitCasimir& C, int n, int k,
                         const RunConfig& cfg) {
    if (n < 2 || n > 5)
        throw Error(ErrorCode::SlotOutOfRange, "full_projector_trace: n");
    double full_dim = 1;
    for (int t = 0; t < n; ++t) full_dim *= C.dim;
    if (full_dim > static_cast<double>(cfg.max_full_tensor_dim))
        throw Error(ErrorCode::ResourceCap,
                    "full tensor dimension exceeds cap");
    if (C.dim < n) return Rat(0);

    WedgeBasis basis = wedge_basis(C.dim, n);
    long m = basis.size();
    std::vector<Rat> per_tuple(m, Rat(0));
#pragma omp parallel for schedule(dynamic, 4)
    for (long t = 0; t < m; ++t) {
        int idx[5];
        for (int s = 0; s < n; ++s) idx[s] = basis.tuples[t][s];
        std::uint32_t key = encode_tuple(idx, n);
        TensorVec v;
        v[key] = 1;
        for (int rep = 0; rep < k; ++rep) v = casimir_n_apply(C, n, v);
        TensorVec w;
        w[key] = 1;
        w = asym_apply(n, w);
        Rat dot(0);
        for (const auto& [kk, cc] : w) {
            auto it = v.find(kk);
            if (it != v.end()) dot += cc * it->second;
        }
        per_tuple[t] = dot;
    }
    // Distinct-entry tuples carry the whole trace; each sorted tuple stands
    // for n! equal diagonal entries of ASym C^k.
    Rat fact(1);
    for (int t = 2; t <= n; ++t) fact *= t;
    Rat total(0);
    for (long t = 0; t < m; ++t) total += per_tuple[t];
    return total * fact;
}

}  // namespace casimir
