#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "casimir/algebra.hpp"
#include "casimir/config.hpp"
#include "casimir/decomposition.hpp"
#include "casimir/modular.hpp"
#include "casimir/split_casimir.hpp"
#include "casimir/vogel.hpp"
#include "casimir/wedge.hpp"

namespace casimir {

// Everything derived from one algebra, built once and shared.
struct AlgebraContext {
    AlgebraId id;
    StructureConstants f;
    KillingMetric metric;
    AdjointRep adj;
    SplitCasimir casimir;
    VogelPoint point;
    std::map<int, WedgeOperator> wedges;
};

struct TraceRow {
    int k = 0;
    Rat value;
    std::optional<Rat> formula;
    bool match = true;  // vacuously true when no formula is catalogued
};

struct TraceTableReport {
    std::string algebra;
    int n = 0;
    long size = 0;
    std::vector<TraceRow> rows;
    bool all_match() const {
        for (const auto& r : rows)
            if (!r.match) return false;
        return true;
    }
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyAllReport {
    RunConfig config;
    std::vector<std::uint64_t> primes;
    std::vector<CheckResult> checks;
    int passed() const;
    int failed() const;
};

enum class Injection {
    None,
    Table2Eigenvalue,
    Table2Dim,
    StructureConstant,
    CatalogEigenvalue,
};

Injection parse_injection(const std::string& name);

// Applies the named defect to a catalog copy (for the catalog-borne kinds).
void apply_injection(Catalog& catalog, Injection inj);

class Workbench {
public:
    explicit Workbench(RunConfig cfg = {}, Injection inj = Injection::None);

    const RunConfig& config() const { return cfg_; }
    const Catalog& catalog() const { return catalog_; }
    Catalog& mutable_catalog() { return catalog_; }
    const std::vector<std::uint64_t>& primes() const { return primes_; }

    AlgebraContext& context(const std::string& algebra);
    const WedgeOperator& wedge(AlgebraContext& ctx, int n);

    TraceTableReport traces(const std::string& algebra, int n, int k_max);
    DecompositionReport decompose(const std::string& algebra, int n);
    VerifyAllReport verify_all();

private:
    RunConfig cfg_;
    Injection injection_;
    Catalog catalog_;
    std::vector<std::uint64_t> primes_;
    std::map<std::string, std::unique_ptr<AlgebraContext>> contexts_;
};

}  // namespace casimir
