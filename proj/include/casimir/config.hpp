#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace casimir {

// Resource caps and reproducibility knobs shared by the heavy operations.
// Defaults keep the whole verification matrix at desk scale.
struct RunConfig {
    std::vector<std::string> algebras = {"sl2", "sl3", "sl4", "so5",
                                         "so7", "sp6", "g2"};
    std::vector<int> n_values = {2, 3, 4, 5};
    int k_max = 4;

    // Hard cap on the wedge-space dimension binomial(dim g, n).
    long max_wedge_dim = 20349;  // binomial(21,5)
    // Hard cap on dim^n for the full-tensor projector route.
    long max_full_tensor_dim = 40000;
    // Kernel-rank spectra for n=5 only up to this algebra dimension.
    int spectrum_dim_cap_n5 = 15;
    // Traces for n=5 only up to this algebra dimension.
    int trace_dim_cap_n5 = 21;
    // verify-all runs kernel-rank spectra only up to this algebra dimension.
    int spectrum_dim_cap = 15;
    // verify-all runs the dual-route (full projector) check up to here.
    int route_equivalence_dim_cap = 10;

    int primes = 2;           // modular ranks must agree across this many primes
    std::uint64_t seed = 20230911;  // prime generator seed, recorded in reports

    std::string format = "json";  // json | csv | text
    std::string out = "-";
};

}  // namespace casimir
