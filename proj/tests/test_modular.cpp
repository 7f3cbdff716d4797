#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "casimir/modular.hpp"

using namespace casimir;

namespace {

std::uint64_t mulmod_naive(std::uint64_t a, std::uint64_t b,
                           std::uint64_t p) {
    using u128 = unsigned __int128;
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod_naive(std::uint64_t b, std::uint64_t e,
                           std::uint64_t p) {
    std::uint64_t acc = 1;
    b %= p;
    while (e) {
        if (e & 1) acc = mulmod_naive(acc, b, p);
        b = mulmod_naive(b, b, p);
        e >>= 1;
    }
    return acc;
}

WedgeOperator op_from_dense(const std::vector<std::vector<Rat>>& m) {
    WedgeOperator op;
    op.size = static_cast<long>(m.size());
    op.cols.resize(op.size);
    for (long r = 0; r < op.size; ++r)
        for (long c = 0; c < op.size; ++c)
            if (m[r][c] != 0) op.cols[c].emplace_back(r, m[r][c]);
    return op;
}

}  // namespace

TEST_CASE("prime generation is deterministic and in range") {
    auto a = generate_primes(3, 42);
    auto b = generate_primes(3, 42);
    CHECK(a == b);
    auto c = generate_primes(3, 43);
    CHECK(a != c);
    for (auto p : a) {
        CHECK(p > (1ull << 60));
        CHECK(p < (1ull << 62));
        CHECK(is_prime_u64(p));
    }
    CHECK(a[0] != a[1]);
}

TEST_CASE("Miller-Rabin spot checks") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(1000000007ull));
    CHECK(is_prime_u64((1ull << 61) - 1));  // Mersenne prime 2^61-1
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(561));          // Carmichael
    CHECK_FALSE(is_prime_u64((1ull << 62) - 1));
}

TEST_CASE("Montgomery arithmetic matches naive mod") {
    std::uint64_t p = generate_primes(1, 7)[0];
    Montgomery mont(p);
    std::mt19937_64 rng(123);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t a = rng() % p, b = rng() % p;
        std::uint64_t am = mont.to(a), bm = mont.to(b);
        CHECK(mont.from(mont.mul(am, bm)) == mulmod_naive(a, b, p));
        CHECK(mont.from(mont.add(am, bm)) == (a + b) % p);
        CHECK(mont.from(mont.sub(am, bm)) == (a + p - b) % p);
    }
    std::uint64_t x = 123456789;
    CHECK(mont.from(mont.inv(mont.to(x))) ==
          powmod_naive(x, p - 2, p));
}

TEST_CASE("rational residues honor the denominator inverse") {
    std::uint64_t p = generate_primes(1, 11)[0];
    Montgomery mont(p);
    Rat v = rat(-3, 7);
    std::uint64_t r = mont.from(rat_mod(v, mont));
    // 7 r = -3 mod p
    std::uint64_t lhs = mulmod_naive(7, r, p);
    CHECK(lhs == p - 3);
}

TEST_CASE("modular rank equals exact rank on random rational matrices") {
    std::mt19937_64 rng(99);
    auto primes = generate_primes(2, 5);
    RunConfig cfg;
    for (int trial = 0; trial < 10; ++trial) {
        int n = 6;
        int rank_target = static_cast<int>(rng() % (n + 1));
        // random matrix of the chosen rank: product of n x r and r x n
        std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
        std::vector<std::vector<Rat>> u(n), v(rank_target);
        for (auto& row : u) {
            row.resize(rank_target);
            for (auto& x : row)
                x = rat(static_cast<long>(rng() % 19) - 9,
                        1 + static_cast<long>(rng() % 4));
        }
        for (auto& row : v) {
            row.resize(n);
            for (auto& x : row)
                x = rat(static_cast<long>(rng() % 19) - 9,
                        1 + static_cast<long>(rng() % 4));
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < rank_target; ++k) a[i][j] += u[i][k] * v[k][j];
        WedgeOperator op = op_from_dense(a);
        long exact = rank_exact(op, Rat(0));
        CHECK(exact <= rank_target);
        for (auto p : primes)
            CHECK(rank_mod_p(op, Rat(0), p) == exact);
        CHECK(eigen_multiplicity(op, Rat(0), cfg, primes) == 6 - exact);
    }
}

TEST_CASE("eigen multiplicities of an explicit diagonalizable matrix") {
    // diag(5, 5, -1/2, -1/2, -1/2, 0) conjugated by a unimodular matrix
    int n = 6;
    std::vector<Rat> d = {Rat(5), Rat(5), rat(-1, 2), rat(-1, 2), rat(-1, 2),
                          Rat(0)};
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = d[i];
    // conjugate by E_{ij}(1) shears
    auto shear = [&](int i, int j) {
        for (int c = 0; c < n; ++c) m[i][c] += m[j][c];
        for (int r = 0; r < n; ++r) m[r][j] -= m[r][i];
    };
    shear(0, 3);
    shear(2, 5);
    shear(4, 1);
    shear(1, 2);
    WedgeOperator op = op_from_dense(m);
    RunConfig cfg;
    auto primes = generate_primes(2, 17);
    CHECK(eigen_multiplicity(op, Rat(5), cfg, primes) == 2);
    CHECK(eigen_multiplicity(op, rat(-1, 2), cfg, primes) == 3);
    CHECK(eigen_multiplicity(op, Rat(0), cfg, primes) == 1);
    CHECK(eigen_multiplicity(op, Rat(7), cfg, primes) == 0);
    auto mults = spectrum_multiplicities(
        op, {Rat(5), rat(-1, 2), Rat(0), Rat(7)}, cfg, primes);
    CHECK(mults == std::vector<long>{2, 3, 1, 0});
}

TEST_CASE("empty operator has empty spectrum") {
    WedgeOperator op;
    op.size = 0;
    RunConfig cfg;
    auto primes = generate_primes(2, 3);
    CHECK(eigen_multiplicity(op, Rat(1), cfg, primes) == 0);
}
