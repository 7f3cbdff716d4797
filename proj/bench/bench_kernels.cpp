// Times the OpenMP kernels against their serial reference implementations
// and cross-checks that both produce identical exact results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "casimir/modular.hpp"
#include "casimir/vogel.hpp"
#include "casimir/wedge.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace casimir;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

void report(const char* kernel, const char* input, double serial_ms,
            double parallel_ms, bool equal) {
    std::printf("%-28s %-12s serial %9.1f ms   parallel %9.1f ms   x%.2f   %s\n",
                kernel, input, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n\n");
#endif

    struct Case {
        const char* algebra;
        int n;
    };
    for (const Case& c : {Case{"so5", 4}, Case{"g2", 3}, Case{"g2", 4}}) {
        auto f = build_algebra(AlgebraId::parse(c.algebra));
        auto metric = killing_metric(f);
        auto adj = adjoint_rep(f);
        auto C = split_casimir_2(adj, metric);
        auto basis = wedge_basis(f.dim, c.n);
        std::string input = std::string(c.algebra) + " n=" +
                            std::to_string(c.n) + " (" +
                            std::to_string(basis.size()) + ")";

        WedgeOperator op_par, op_ser;
        double tser = time_ms([&] { op_ser = restrict_casimir_serial(C, basis); });
        double tpar = time_ms([&] { op_par = restrict_casimir(C, basis); });
        bool equal = op_ser.cols == op_par.cols;
        report("restrict_casimir", input.c_str(), tser, tpar, equal);

        Rat tr_ser, tr_par;
        int k = 3;
        tser = time_ms([&] { tr_ser = trace_power_serial(op_ser, k); });
        tpar = time_ms([&] { tr_par = trace_power(op_par, k); });
        report("trace_power k=3", input.c_str(), tser, tpar,
               tr_ser == tr_par);

        // kernel ranks: serial loop over (lambda, prime) jobs vs the
        // job-parallel spectrum driver
        RunConfig cfg;
        auto primes = generate_primes(2, cfg.seed);
        auto point = vogel_point(AlgebraId::parse(c.algebra));
        Catalog cat = make_catalog();
        std::vector<Rat> lambdas;
        for (const auto& e :
             eigenvalue_catalog(c.n, point, Scope::FULL, cat)) {
            bool seen = false;
            for (const auto& l : lambdas) seen = seen || l == e.lambda;
            if (!seen) lambdas.push_back(e.lambda);
        }
        std::vector<long> mult_ser(lambdas.size()), mult_par;
        tser = time_ms([&] {
            for (size_t i = 0; i < lambdas.size(); ++i)
                mult_ser[i] = eigen_multiplicity(op_ser, lambdas[i], cfg,
                                                 primes);
        });
        tpar = time_ms([&] {
            mult_par = spectrum_multiplicities(op_par, lambdas, cfg, primes);
        });
        report("kernel ranks (all lambdas)", input.c_str(), tser, tpar,
               mult_ser == mult_par);
        std::printf("\n");
    }
    return 0;
}
