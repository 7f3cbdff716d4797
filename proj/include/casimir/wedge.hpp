#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "casimir/config.hpp"
#include "casimir/rational.hpp"
#include "casimir/split_casimir.hpp"

namespace casimir {

// Basis of the n-th antisymmetric power: strictly increasing index tuples in
// lexicographic order. Empty when dim_g < n.
struct WedgeBasis {
    int dim_g = 0;
    int n = 0;
    std::vector<std::array<int, 5>> tuples;
    std::unordered_map<std::uint32_t, long> rank;  // encoded tuple -> index

    long size() const { return static_cast<long>(tuples.size()); }
    long index_of(const int* idx) const;
};

WedgeBasis wedge_basis(int dim_g, int n);

// C_(n) restricted to the wedge subspace, sparse columns of exact rationals.
struct WedgeOperator {
    long size = 0;
    int dim_g = 0;
    int n = 0;
    std::string algebra;
    std::vector<std::vector<std::pair<long, Rat>>> cols;

    Rat entry(long row, long col) const;
};

// OpenMP-parallel over basis columns; the serial twin is the reference kept
// for testing and benchmarking.
WedgeOperator restrict_casimir(const SplitCasimir& C, const WedgeBasis& basis);
WedgeOperator restrict_casimir_serial(const SplitCasimir& C,
                                      const WedgeBasis& basis);

// Exact Tr(op^k). The parallel version clears denominators once and runs
// integer column kernels; the serial version is the straightforward
// repeated-application reference.
Rat trace_power(const WedgeOperator& op, int k,
                const RunConfig* caps = nullptr);
Rat trace_power_serial(const WedgeOperator& op, int k);

// op * (op + lambda I) == 0, checked exactly column by column.
bool satisfies_quadratic_identity(const WedgeOperator& op, const Rat& lambda);

// Tr(ASym_n C_(n)^k) evaluated on the full dim^n tensor space with the
// explicit permutation-product projector: the independent oracle for
// restrict_casimir + trace_power. Throws ResourceCap past the configured
// full-tensor budget.
Rat full_projector_trace(const SplitCasimir& C, int n, int k,
                         const RunConfig& cfg);

// Applies the product-form antisymmetrizer (including the 1/n! factor).
TensorVec asym_apply(int n, const TensorVec& v);

}  // namespace casimir
