#pragma once

#include <cstdint>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "casimir/algebra.hpp"
#include "casimir/rational.hpp"

namespace casimir {

// Split 2-Casimir tensor C^{ab}_{cd} = g^{xy} (ad x)^a_c (ad y)^b_d.
// Stored by lower-index slices: slice(c,d) lists the nonzero (a,b,value).
// A dense lookup array is kept alongside for dim <= 16.
struct SplitCasimir {
    int dim = 0;
    std::vector<std::vector<std::tuple<int, int, Rat>>> slices;
    std::vector<Rat> dense;  // dim^4 entries when dim <= 16, else empty
    // The metric that raised the indices, kept for the contraction
    // identities (same-level index pairs contract through it).
    std::vector<std::vector<Rat>> g, g_inv;

    const std::vector<std::tuple<int, int, Rat>>& slice(int c, int d) const {
        return slices[c * dim + d];
    }
    Rat entry(int a, int b, int c, int d) const;
    // Nonzero entries as (a, b, c, d, value), sorted: the JSON dump payload.
    std::vector<std::tuple<int, int, int, int, Rat>> quadruples() const;
    // lcm of all entry denominators; scaled kernels divide it back out.
    Int denominator_lcm() const;
};

SplitCasimir split_casimir_2(const AdjointRep& adj, const KillingMetric& metric);

struct CasimirIdentityReport {
    struct Line {
        std::string name;
        bool pass;
        Rat residual;
    };
    std::vector<Line> lines;
    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

// The four elementary trace identities: both partial traces vanish,
// full trace is dim g, doubly-contracted upper trace is -dim g.
CasimirIdentityReport verify_casimir_identities(const SplitCasimir& C);

// Sparse vector on the full n-fold tensor power, keyed by an encoded index
// tuple (6 bits per slot).
using TensorVec = std::unordered_map<std::uint32_t, Rat>;

std::uint32_t encode_tuple(const int* idx, int n);
void decode_tuple(std::uint32_t key, int* idx, int n);

// C acting on slots (i,j) of the n-fold tensor power, identity elsewhere.
// Slots are 1-based, 1 <= i < j <= n.
TensorVec pair_apply(const SplitCasimir& C, int n, int i, int j,
                     const TensorVec& v);

// Sum of pair_apply over all n(n-1)/2 slot pairs: the n-split Casimir.
TensorVec casimir_n_apply(const SplitCasimir& C, int n, const TensorVec& v);

}  // namespace casimir
