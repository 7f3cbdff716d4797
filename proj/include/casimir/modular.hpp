#pragma once

#include <cstdint>
#include <vector>

#include "casimir/config.hpp"
#include "casimir/rational.hpp"
#include "casimir/wedge.hpp"

namespace casimir {

// Montgomery arithmetic modulo an odd prime p < 2^62.
struct Montgomery {
    std::uint64_t p = 0;
    std::uint64_t ninv = 0;  // -p^{-1} mod 2^64
    std::uint64_t r2 = 0;    // 2^128 mod p

    explicit Montgomery(std::uint64_t prime);
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        using u128 = unsigned __int128;
        u128 t = static_cast<u128>(a) * b;
        std::uint64_t m = static_cast<std::uint64_t>(t) * ninv;
        u128 u = (t + static_cast<u128>(m) * p) >> 64;
        std::uint64_t r = static_cast<std::uint64_t>(u);
        return r >= p ? r - p : r;
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint64_t to(std::uint64_t x) const { return mul(x % p, r2); }
    std::uint64_t from(std::uint64_t x) const { return mul(x, 1); }
    std::uint64_t pow(std::uint64_t base_m, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t x_m) const { return pow(x_m, p - 2); }
};

bool is_prime_u64(std::uint64_t n);

// Deterministic stream of distinct primes in (2^60, 2^62).
std::vector<std::uint64_t> generate_primes(int count, std::uint64_t seed);

// Residue of a rational mod p, in Montgomery form.
std::uint64_t rat_mod(const Rat& v, const Montgomery& mont);

// Rank of (op - lambda I) over GF(p), dense Gaussian elimination.
long rank_mod_p(const WedgeOperator& op, const Rat& lambda, std::uint64_t p);

// Exact rank via fraction-free (Bareiss) elimination; the escalation path
// when modular ranks disagree, and the small-case reference in tests.
long rank_exact(const WedgeOperator& op, const Rat& lambda);

// dim ker(op - lambda I): modular ranks over cfg.primes primes must agree,
// otherwise escalate to exact elimination.
long eigen_multiplicity(const WedgeOperator& op, const Rat& lambda,
                        const RunConfig& cfg,
                        const std::vector<std::uint64_t>& primes);

// Kernel dimensions for a whole eigenvalue list; (lambda, prime) jobs run
// in parallel.
std::vector<long> spectrum_multiplicities(
    const WedgeOperator& op, const std::vector<Rat>& lambdas,
    const RunConfig& cfg, const std::vector<std::uint64_t>& primes);

}  // namespace casimir
