#include "casimir/decomposition.hpp"

#include <algorithm>

#include "casimir/error.hpp"

namespace casimir {

std::string SpectrumGroup::expected_str() const {
    std::string s;
    for (const auto& m : members) {
        if (!s.empty()) s += "+";
        if (m.mult != 1) s += std::to_string(m.mult) + "*";
        s += "dim" + m.label;
    }
    return s;
}

bool DecompositionReport::all_consistent() const {
    for (const auto& g : groups)
        if (g.status == "INCONSISTENT") return false;
    return true;
}

std::optional<Rat> known_dim(const std::string& label, const AlgebraId& id,
                             const VogelPoint& point, const Catalog& catalog,
                             const std::map<std::string, Rat>& overrides) {
    if (auto it = overrides.find(label); it != overrides.end())
        return it->second;
    int d = id.dim();
    if (label == "X0") return Rat(1);
    if (label == "X1") return Rat(d);
    if (label == "X2") return dim_x(2, d);
    if (label == "X3") return dim_x(3, d);
    if (label == "X4") return dim_x(4, d);
    if (label == "X5") return dim_x(5, d);
    if (label == "M3") return m3_dim_for(id);
    if (point.on_exceptional_line()) {
        const Table2Row* row = catalog.find_row(label);
        if (row && row->dim_kind == DimKind::RatAlpha)
            return row->dim.eval(point.alpha);
        if (row && row->dim_kind == DimKind::One) return Rat(1);
    }
    return std::nullopt;
}

DecompositionReport verify_decomposition(
    const AlgebraId& id, const WedgeOperator& op, const VogelPoint& point,
    const Catalog& catalog, const RunConfig& cfg,
    const std::vector<std::uint64_t>& primes,
    const std::map<std::string, Rat>& dim_overrides) {
    if (op.n == 5 && op.dim_g > cfg.spectrum_dim_cap_n5)
        throw Error(ErrorCode::ResourceCap,
                    "n=5 spectra capped at dim g <= " +
                        std::to_string(cfg.spectrum_dim_cap_n5));
    if (op.size > cfg.max_wedge_dim)
        throw Error(ErrorCode::ResourceCap, "wedge dimension cap");

    DecompositionReport rep;
    rep.algebra = id.name();
    rep.n = op.n;
    rep.size = op.size;
    rep.primes = primes;

    // Group catalog entries by coinciding eigenvalue at this point.
    std::map<Rat, std::vector<GroupMember>> grouped;
    for (const auto& e :
         eigenvalue_catalog(op.n, point, Scope::FULL, catalog)) {
        grouped[e.lambda].push_back(
            {e.label, e.mult,
             known_dim(e.label, id, point, catalog, dim_overrides)});
    }
    std::vector<Rat> lambdas;
    for (const auto& [l, members] : grouped) lambdas.push_back(l);

    std::vector<long> mult =
        op.size == 0 ? std::vector<long>(lambdas.size(), 0)
                     : spectrum_multiplicities(op, lambdas, cfg, primes);

    long total = 0;
    for (long m : mult) total += m;
    if (total != op.size)
        throw Error(ErrorCode::SpectrumMismatch,
                    rep.algebra + " n=" + std::to_string(op.n) +
                        ": eigenspaces for catalog eigenvalues span " +
                        std::to_string(total) + " of " +
                        std::to_string(op.size) +
                        " wedge dimensions; some eigenvalue is not in the "
                        "catalog");

    size_t li = 0;
    for (auto& [lambda, members] : grouped) {
        SpectrumGroup g;
        g.lambda = lambda;
        g.observed = mult[li++];
        g.members = members;
        g.known_sum = 0;
        int unknowns = 0;
        const GroupMember* unknown_member = nullptr;
        for (const auto& m : g.members) {
            if (m.dim)
                g.known_sum += Rat(m.mult) * *m.dim;
            else {
                ++unknowns;
                unknown_member = &m;
            }
        }
        if (unknowns == 0) {
            g.status = g.known_sum == Rat(g.observed) ? "MATCHED"
                                                      : "INCONSISTENT";
        } else if (unknowns == 1) {
            g.status = "SOLVED";
            g.solved_label = unknown_member->label;
            g.solved_dim =
                (Rat(g.observed) - g.known_sum) / Rat(unknown_member->mult);
        } else {
            g.status = "UNDETERMINED";
        }
        rep.groups.push_back(std::move(g));
    }
    return rep;
}

bool MomentReport::all_pass() const {
    for (const auto& l : lines)
        if (!l.pass) return false;
    return true;
}

MomentReport moment_consistency(const AlgebraId& id, const WedgeOperator& op,
                                const VogelPoint& point, int k_max,
                                const Catalog& catalog, const RunConfig& cfg,
                                const std::vector<std::uint64_t>& primes) {
    MomentReport rep;
    rep.algebra = id.name();
    rep.n = op.n;

    bool spectrum_ok =
        op.size <= cfg.max_wedge_dim &&
        !(op.n == 5 && op.dim_g > cfg.spectrum_dim_cap_n5);
    std::vector<std::pair<Rat, long>> spectrum;  // (lambda, observed)
    if (spectrum_ok) {
        auto dec = verify_decomposition(id, op, point, catalog, cfg, primes);
        for (const auto& g : dec.groups)
            spectrum.push_back({g.lambda, g.observed});
        rep.spectrum_used = true;
    }

    for (int k = 0; k <= k_max; ++k) {
        MomentReport::Line line;
        line.k = k;
        line.trace = trace_power(op, k, &cfg);
        line.pass = true;
        if (rep.spectrum_used) {
            Rat rhs(0);
            for (const auto& [l, m] : spectrum)
                rhs += Rat(m) * rat_pow(l, static_cast<unsigned>(k));
            line.catalog_rhs = rhs;
            line.pass = line.pass && (rhs == line.trace);
        }
        if (has_universal_trace(op.n, k)) {
            line.formula = universal_trace(op.n, k, op.dim_g, point);
            line.pass = line.pass && (*line.formula == line.trace);
        }
        rep.lines.push_back(std::move(line));
    }
    return rep;
}

Rat solve_dim_x5(const VogelPoint& point, int dim_g, const Catalog& catalog) {
    // k=0 trace identity on the exceptional line:
    //   binom(d,5) = dimX1 + 2 dimX2 + dimX4 + dimX5 + 2 dimB''
    //              + dimC + dimC' + dimE'' + dimF + dimF'
    //              + dimY3 + dimY3' + dimI + dimI'
    Rat total(binomial(static_cast<unsigned>(dim_g), 5));
    Rat rest = Rat(dim_g) + 2 * dim_x(2, dim_g) + dim_x(4, dim_g);
    auto t2 = [&](const char* label) {
        return table2_dim(catalog, label, point.alpha).value;
    };
    rest += 2 * t2("B''");
    for (const char* l : {"C", "C'", "E''", "F", "F'", "Y3", "Y3'", "I", "I'"})
        rest += t2(l);
    return total - rest;
}

std::vector<Rat> solve_vandermonde(const std::vector<Rat>& traces,
                                   const std::vector<Rat>& lambdas) {
    size_t m = lambdas.size();
    if (traces.size() < m)
        throw Error(ErrorCode::Usage,
                    "solve_vandermonde: need at least as many traces as "
                    "eigenvalues");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (lambdas[i] == lambdas[j])
                throw Error(ErrorCode::SingularSystem,
                            "duplicate eigenvalue " + rat_to_string(lambdas[i]));
    // Square system on the first m rows.
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m + 1, Rat(0)));
    for (size_t k = 0; k < m; ++k) {
        for (size_t i = 0; i < m; ++i)
            a[k][i] = rat_pow(lambdas[i], static_cast<unsigned>(k));
        a[k][m] = traces[k];
    }
    for (size_t col = 0; col < m; ++col) {
        size_t piv = col;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m)
            throw Error(ErrorCode::SingularSystem, "singular Vandermonde");
        std::swap(a[piv], a[col]);
        for (size_t r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (size_t j = col; j <= m; ++j) a[r][j] -= f * a[col][j];
        }
    }
    std::vector<Rat> d(m);
    for (size_t i = 0; i < m; ++i) d[i] = a[i][m] / a[i][i];
    // Over-determined rows are residual checks.
    for (size_t k = m; k < traces.size(); ++k) {
        Rat rhs(0);
        for (size_t i = 0; i < m; ++i)
            rhs += d[i] * rat_pow(lambdas[i], static_cast<unsigned>(k));
        if (rhs != traces[k])
            throw Error(ErrorCode::InconsistentSystem,
                        "residual at k=" + std::to_string(k) + ": " +
                            rat_to_string(traces[k] - rhs));
    }
    return d;
}

}  // namespace casimir
