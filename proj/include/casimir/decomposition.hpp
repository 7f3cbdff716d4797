#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "casimir/config.hpp"
#include "casimir/formulas.hpp"
#include "casimir/modular.hpp"
#include "casimir/vogel.hpp"
#include "casimir/wedge.hpp"

namespace casimir {

struct GroupMember {
    std::string label;
    int mult = 1;
    std::optional<Rat> dim;  // nullopt = unknown for this algebra
};

// One eigenvalue group: catalog entries sharing lambda at this Vogel point.
struct SpectrumGroup {
    Rat lambda;
    long observed = 0;  // kernel multiplicity of (op - lambda I)
    std::vector<GroupMember> members;
    Rat known_sum;  // sum of mult*dim over known members
    std::string status;  // MATCHED | SOLVED | UNDETERMINED | INCONSISTENT
    std::optional<std::string> solved_label;
    std::optional<Rat> solved_dim;

    std::string expected_str() const;  // e.g. "2*dimB''+dimC"
};

struct DecompositionReport {
    std::string algebra;
    int n = 0;
    long size = 0;
    std::vector<std::uint64_t> primes;
    std::vector<SpectrumGroup> groups;

    bool all_consistent() const;
};

// Known dimension of a catalog representation for this algebra: universal
// polynomials for X0..X5 and M3, Table 2 evaluations on the exceptional
// line; nullopt otherwise. dim_overrides supports falsification tests.
std::optional<Rat> known_dim(const std::string& label, const AlgebraId& id,
                             const VogelPoint& point, const Catalog& catalog,
                             const std::map<std::string, Rat>& overrides = {});

// Groups the n-catalog by coinciding eigenvalues at this algebra's Vogel
// point, measures kernel multiplicities, and classifies each group.
// Throws SpectrumMismatch if multiplicities fail to exhaust the wedge space.
DecompositionReport verify_decomposition(
    const AlgebraId& id, const WedgeOperator& op, const VogelPoint& point,
    const Catalog& catalog, const RunConfig& cfg,
    const std::vector<std::uint64_t>& primes,
    const std::map<std::string, Rat>& dim_overrides = {});

struct MomentReport {
    std::string algebra;
    int n = 0;
    bool spectrum_used = false;
    struct Line {
        int k;
        Rat trace;
        std::optional<Rat> catalog_rhs;  // sum over groups of obs*lambda^k
        std::optional<Rat> formula;      // catalogued universal value
        bool pass = false;
    };
    std::vector<Line> lines;
    bool all_pass() const;
};

// Tr(ASym_n C^k) for k = 0..k_max against the spectrum-weighted catalog sum
// (when the spectrum is within caps) and the catalogued universal formulas.
MomentReport moment_consistency(const AlgebraId& id, const WedgeOperator& op,
                                const VogelPoint& point, int k_max,
                                const Catalog& catalog, const RunConfig& cfg,
                                const std::vector<std::uint64_t>& primes);

// The n=5 exceptional-line bookkeeping: subtracts every known dimension on
// the right-hand side of the k=0 trace identity; the remainder is dim X5.
Rat solve_dim_x5(const VogelPoint& point, int dim_g, const Catalog& catalog);

// Exact solve of sum_i d_i lambda_i^k = traces[k]; extra rows are residual
// checks. Throws SingularSystem on duplicate lambdas, InconsistentSystem on
// nonzero residuals.
std::vector<Rat> solve_vandermonde(const std::vector<Rat>& traces,
                                   const std::vector<Rat>& lambdas);

}  // namespace casimir
