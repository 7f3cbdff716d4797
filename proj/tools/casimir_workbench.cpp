// Command-line front end: builds algebras, emits trace tables and
// decomposition reports, runs the verification matrix.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "casimir/json_io.hpp"
#include "casimir/workbench.hpp"

using namespace casimir;

int main(int argc, char** argv) {
    CLI::App app{"split n-Casimir workbench for simple Lie algebras"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out = "-";
    app.add_option("--format", format, "json|csv|text");
    app.add_option("--out", out, "output path, '-' for stdout");

    RunConfig cfg;
    std::string algebra;
    int n = 2;
    int k_max = cfg.k_max;
    std::string scope_name = "full";
    std::string inject_name = "none";

    auto add_caps = [&](CLI::App* sub) {
        sub->add_option("--max-wedge-dim", cfg.max_wedge_dim);
        sub->add_option("--max-full-tensor-dim", cfg.max_full_tensor_dim);
        sub->add_option("--primes", cfg.primes)->check(CLI::Range(2, 16));
        sub->add_option("--seed", cfg.seed);
    };

    CLI::App* build = app.add_subcommand(
        "build", "emit structure constants and Killing metric");
    build->add_option("algebra", algebra)->required();

    CLI::App* tensor = app.add_subcommand(
        "tensor", "emit the split 2-Casimir tensor as a quadruple list");
    tensor->add_option("algebra", algebra)->required();

    CLI::App* catalog_cmd =
        app.add_subcommand("catalog", "emit the eigenvalue catalog");
    catalog_cmd->add_option("--n", n)->check(CLI::Range(2, 5));
    catalog_cmd->add_option("--algebra", algebra,
                            "evaluate at this algebra's Vogel point");
    catalog_cmd->add_option("--scope", scope_name, "full|exceptional-line");

    CLI::App* traces_cmd = app.add_subcommand(
        "traces", "trace table with universal-formula comparison");
    traces_cmd->add_option("algebra", algebra)->required();
    traces_cmd->add_option("--n", n)->required()->check(CLI::Range(2, 5));
    traces_cmd->add_option("--k-max", k_max);
    add_caps(traces_cmd);

    CLI::App* dec_cmd =
        app.add_subcommand("decompose", "eigenvalue-group decomposition report");
    dec_cmd->add_option("algebra", algebra)->required();
    dec_cmd->add_option("--n", n)->required()->check(CLI::Range(2, 5));
    add_caps(dec_cmd);

    CLI::App* verify_cmd =
        app.add_subcommand("verify-all", "run the whole verification matrix");
    verify_cmd->add_option("--algebras", cfg.algebras)->delimiter(',');
    verify_cmd->add_option("--n-values", cfg.n_values)->delimiter(',');
    verify_cmd->add_option("--k-max", cfg.k_max);
    verify_cmd->add_option("--inject", inject_name,
                           "none|table2-eigenvalue|table2-dim|"
                           "structure-constant|catalog-eigenvalue");
    add_caps(verify_cmd);

    for (CLI::App* sub : {build, tensor, catalog_cmd, traces_cmd, dec_cmd,
                          verify_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*build) {
            AlgebraId id = AlgebraId::parse(algebra);
            StructureConstants f = build_algebra(id);
            KillingMetric metric = killing_metric(f);
            write_output(structure_json(id.name(), f, metric), out, format);
            return 0;
        }
        if (*tensor) {
            AlgebraId id = AlgebraId::parse(algebra);
            StructureConstants f = build_algebra(id);
            KillingMetric metric = killing_metric(f);
            AdjointRep adj = adjoint_rep(f);
            write_output(casimir_tensor_json(split_casimir_2(adj, metric)),
                         out, format);
            return 0;
        }
        if (*catalog_cmd) {
            Scope scope = scope_name == "exceptional-line"
                              ? Scope::EXCEPTIONAL_LINE
                              : Scope::FULL;
            Catalog cat = make_catalog();
            if (algebra.empty()) {
                write_output(catalog_json(cat, n, scope, nullptr), out,
                             format);
            } else {
                VogelPoint p = vogel_point(AlgebraId::parse(algebra));
                write_output(catalog_json(cat, n, scope, &p), out, format);
            }
            return 0;
        }
        if (*traces_cmd) {
            Workbench wb(cfg);
            TraceTableReport rep = wb.traces(algebra, n, k_max);
            write_output(trace_table_json(rep), out, format);
            return rep.all_match() ? 0 : 1;
        }
        if (*dec_cmd) {
            Workbench wb(cfg);
            DecompositionReport rep = wb.decompose(algebra, n);
            write_output(decomposition_json(rep), out, format);
            return rep.all_consistent() ? 0 : 1;
        }
        if (*verify_cmd) {
            Workbench wb(cfg, parse_injection(inject_name));
            VerifyAllReport rep = wb.verify_all();
            write_output(verify_all_json(rep), out, format);
            if (rep.failed() > 0) {
                for (const auto& c : rep.checks)
                    if (!c.pass)
                        std::cerr << "failed check: " << c.name << "\n";
                return 1;
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << error_code_name(e.code()) << ": " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
