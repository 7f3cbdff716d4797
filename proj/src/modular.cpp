#include "casimir/modular.hpp"

#include <random>

#include "casimir/error.hpp"

namespace casimir {

Montgomery::Montgomery(std::uint64_t prime) : p(prime) {
    // Newton iteration for p^{-1} mod 2^64, then negate.
    std::uint64_t inv = p;
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    ninv = ~inv + 1;
    using u128 = unsigned __int128;
    u128 r = (~static_cast<u128>(0)) % p;  // 2^128 - 1 mod p
    r2 = static_cast<std::uint64_t>((r + 1) % p);
}

std::uint64_t Montgomery::pow(std::uint64_t base_m, std::uint64_t e) const {
    std::uint64_t acc = to(1);
    while (e) {
        if (e & 1) acc = mul(acc, base_m);
        base_m = mul(base_m, base_m);
        e >>= 1;
    }
    return acc;
}

namespace {

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    using u128 = unsigned __int128;
    std::uint64_t acc = 1;
    b %= m;
    while (e) {
        if (e & 1) acc = static_cast<std::uint64_t>(static_cast<u128>(acc) * b % m);
        b = static_cast<std::uint64_t>(static_cast<u128>(b) * b % m);
        e >>= 1;
    }
    return acc;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for all n < 3.3e24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            using u128 = unsigned __int128;
            x = static_cast<std::uint64_t>(static_cast<u128>(x) * x % n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<std::uint64_t> generate_primes(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(
        (1ull << 60) + 1, (1ull << 62) - 1);
    std::vector<std::uint64_t> primes;
    while (static_cast<int>(primes.size()) < count) {
        std::uint64_t c = dist(rng) | 1ull;
        if (!is_prime_u64(c)) continue;
        bool dup = false;
        for (std::uint64_t p : primes) dup = dup || p == c;
        if (!dup) primes.push_back(c);
    }
    return primes;
}

std::uint64_t rat_mod(const Rat& v, const Montgomery& mont) {
    std::uint64_t num = mpz_fdiv_ui(v.get_num().get_mpz_t(), mont.p);
    std::uint64_t den = mpz_fdiv_ui(v.get_den().get_mpz_t(), mont.p);
    if (den == 0)
        throw Error(ErrorCode::ModularDisagreement,
                    "denominator divisible by modulus");
    return mont.mul(mont.to(num), mont.inv(mont.to(den)));
}

namespace {

std::vector<std::uint64_t> build_mod_matrix(const WedgeOperator& op,
                                            const Rat& lambda,
                                            const Montgomery& mont) {
    long n = op.size;
    std::vector<std::uint64_t> rows(static_cast<size_t>(n) * n, 0);
    for (long c = 0; c < n; ++c)
        for (const auto& [r, v] : op.cols[c])
            rows[static_cast<size_t>(r) * n + c] = rat_mod(v, mont);
    if (lambda != 0) {
        std::uint64_t lm = rat_mod(lambda, mont);
        for (long i = 0; i < n; ++i) {
            auto& cell = rows[static_cast<size_t>(i) * n + i];
            cell = mont.sub(cell, lm);
        }
    }
    return rows;
}

}  // namespace

long rank_mod_p(const WedgeOperator& op, const Rat& lambda, std::uint64_t p) {
    Montgomery mont(p);
    long n = op.size;
    std::vector<std::uint64_t> a = build_mod_matrix(op, lambda, mont);
    long rank = 0;
    for (long col = 0; col < n && rank < n; ++col) {
        long piv = -1;
        for (long r = rank; r < n; ++r)
            if (a[static_cast<size_t>(r) * n + col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (long j = col; j < n; ++j)
                std::swap(a[static_cast<size_t>(piv) * n + j],
                          a[static_cast<size_t>(rank) * n + j]);
        const std::uint64_t pinv =
            mont.inv(a[static_cast<size_t>(rank) * n + col]);
        const std::uint64_t* prow = &a[static_cast<size_t>(rank) * n];
        for (long r = rank + 1; r < n; ++r) {
            std::uint64_t* row = &a[static_cast<size_t>(r) * n];
            if (row[col] == 0) continue;
            std::uint64_t f = mont.mul(row[col], pinv);
            row[col] = 0;
            for (long j = col + 1; j < n; ++j)
                if (prow[j] != 0) row[j] = mont.sub(row[j], mont.mul(f, prow[j]));
        }
        ++rank;
    }
    return rank;
}

long rank_exact(const WedgeOperator& op, const Rat& lambda) {
    long n = op.size;
    // Clear denominators row by row; row scaling preserves rank.
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (long c = 0; c < n; ++c)
        for (const auto& [r, v] : op.cols[c]) m[r][c] = v;
    for (long i = 0; i < n; ++i) m[i][i] -= lambda;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (long r = 0; r < n; ++r) {
        Int l(1);
        for (long c = 0; c < n; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                    m[r][c].get_den().get_mpz_t());
        for (long c = 0; c < n; ++c)
            a[r][c] = m[r][c].get_num() * (l / m[r][c].get_den());
    }
    // Bareiss fraction-free elimination with column pivoting.
    Int prev(1);
    long rank = 0;
    for (long col = 0; col < n && rank < n; ++col) {
        long piv = -1;
        for (long r = rank; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (long r = rank + 1; r < n; ++r) {
            for (long j = col + 1; j < n; ++j) {
                Int t = a[rank][col] * a[r][j] - a[r][col] * a[rank][j];
                mpz_divexact(a[r][j].get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

long eigen_multiplicity(const WedgeOperator& op, const Rat& lambda,
                        const RunConfig& cfg,
                        const std::vector<std::uint64_t>& primes) {
    if (op.size > cfg.max_wedge_dim)
        throw Error(ErrorCode::ResourceCap, "eigen_multiplicity: size cap");
    if (op.size == 0) return 0;
    long first = -1;
    bool agree = true;
    for (int i = 0; i < cfg.primes && i < static_cast<int>(primes.size());
         ++i) {
        long r = rank_mod_p(op, lambda, primes[i]);
        if (first < 0)
            first = r;
        else
            agree = agree && r == first;
    }
    if (agree) return op.size - first;
    long exact = rank_exact(op, lambda);
    return op.size - exact;
}

std::vector<long> spectrum_multiplicities(
    const WedgeOperator& op, const std::vector<Rat>& lambdas,
    const RunConfig& cfg, const std::vector<std::uint64_t>& primes) {
    if (op.size > cfg.max_wedge_dim)
        throw Error(ErrorCode::ResourceCap, "spectrum: size cap");
    int nl = static_cast<int>(lambdas.size());
    int np = std::min<int>(cfg.primes, static_cast<int>(primes.size()));
    std::vector<long> ranks(static_cast<size_t>(nl) * np, -1);
#pragma omp parallel for schedule(dynamic, 1) collapse(2)
    for (int li = 0; li < nl; ++li)
        for (int pi = 0; pi < np; ++pi)
            ranks[static_cast<size_t>(li) * np + pi] =
                rank_mod_p(op, lambdas[li], primes[pi]);
    std::vector<long> mult(nl, 0);
    for (int li = 0; li < nl; ++li) {
        bool agree = true;
        for (int pi = 1; pi < np; ++pi)
            agree = agree && ranks[li * np + pi] == ranks[li * np];
        long rank = agree ? ranks[li * np] : rank_exact(op, lambdas[li]);
        mult[li] = op.size - rank;
    }
    return mult;
}

}  // namespace casimir
