// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
//
// f4, e6, e7 and e8 are out of reach for direct tensor computation at desk
// scale; for those algebras acceptance rests on the formula-level criteria
// (8) and (9) below, as reported in the final summary.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "casimir/json_io.hpp"
#include "casimir/workbench.hpp"

using namespace casimir;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
}

void criterion(int id, const std::string& name,
               const std::function<bool(std::string&)>& run) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = run(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double dt = seconds_since(t0);
    std::printf("[%s] criterion %2d: %s (%.1fs)%s%s\n",
                pass ? "PASS" : "FAIL", id, name.c_str(), dt,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

const std::vector<std::string> kAlgebras = {"sl2", "sl3", "sl4", "so5",
                                            "so7", "sp6", "g2"};

}  // namespace

int main() {
    RunConfig cfg;
    Workbench wb(cfg);

    criterion(1, "universal trace suite, n=2, k=1..6, runtime < 1s each",
              [&](std::string& detail) {
                  bool ok = true;
                  std::ostringstream times;
                  for (const auto& name : kAlgebras) {
                      auto t0 = std::chrono::steady_clock::now();
                      AlgebraContext& ctx = wb.context(name);
                      const WedgeOperator& op = wb.wedge(ctx, 2);
                      Rat d(ctx.f.dim);
                      ok = ok && trace_power(op, 0) == d * (d - 1) / 2;
                      for (int k = 1; k <= 6; ++k)
                          ok = ok &&
                               trace_power(op, k) ==
                                   rat_pow(rat(-1, 2),
                                           static_cast<unsigned>(k)) *
                                       d;
                      double dt = seconds_since(t0);
                      times << name << "=" << static_cast<int>(dt * 1000)
                            << "ms ";
                      ok = ok && dt < 1.0;
                  }
                  detail = times.str();
                  return ok;
              });

    criterion(2, "universal trace suite, n=3 and n=4, k=0..3",
              [&](std::string&) {
                  bool ok = true;
                  for (const auto& name : kAlgebras) {
                      AlgebraContext& ctx = wb.context(name);
                      for (int n : {3, 4}) {
                          const WedgeOperator& op = wb.wedge(ctx, n);
                          for (int k = 0; k <= 3; ++k)
                              ok = ok &&
                                   trace_power(op, k, &cfg) ==
                                       universal_trace(n, k, ctx.f.dim,
                                                       ctx.point);
                      }
                  }
                  return ok;
              });

    criterion(3, "universal trace suite, n=5, k=0..4 (with the abg term)",
              [&](std::string&) {
                  bool ok = true;
                  for (const char* name :
                       {"sl2", "sl3", "so5", "g2", "sl4"}) {
                      AlgebraContext& ctx = wb.context(name);
                      const WedgeOperator& op = wb.wedge(ctx, 5);
                      for (int k = 0; k <= 4; ++k)
                          ok = ok && trace_power(op, k, &cfg) ==
                                         universal_trace(5, k, ctx.f.dim,
                                                         ctx.point);
                  }
                  return ok;
              });

    criterion(4, "characteristic identity M(M + 1/2 I) = 0, n=2",
              [&](std::string&) {
                  bool ok = true;
                  for (const auto& name : kAlgebras) {
                      AlgebraContext& ctx = wb.context(name);
                      ok = ok && satisfies_quadratic_identity(
                                     wb.wedge(ctx, 2), rat(1, 2));
                  }
                  return ok;
              });

    criterion(5, "route equivalence, full projector vs wedge, dim g <= 10",
              [&](std::string&) {
                  bool ok = true;
                  for (const char* name : {"sl2", "sl3", "so5"}) {
                      AlgebraContext& ctx = wb.context(name);
                      for (int n : {3, 4}) {
                          const WedgeOperator& op = wb.wedge(ctx, n);
                          for (int k = 0; k <= 3; ++k)
                              ok = ok && full_projector_trace(ctx.casimir, n,
                                                              k, cfg) ==
                                             trace_power(op, k, &cfg);
                      }
                  }
                  return ok;
              });

    criterion(6, "spectrum verification, n=2,3,4, dim g <= 15",
              [&](std::string&) {
                  bool ok = true;
                  for (const char* name : {"sl2", "sl3", "sl4", "so5", "g2"}) {
                      AlgebraContext& ctx = wb.context(name);
                      for (int n : {2, 3, 4}) {
                          auto rep = verify_decomposition(
                              ctx.id, wb.wedge(ctx, n), ctx.point,
                              wb.catalog(), cfg, wb.primes());
                          ok = ok && rep.all_consistent();
                          long sum = 0;
                          for (const auto& g : rep.groups) sum += g.observed;
                          ok = ok && Rat(sum) ==
                                         Rat(binomial(ctx.f.dim, n));
                      }
                  }
                  // the stated example: sl3 n=2 splits as 8 + 20
                  auto rep = wb.decompose("sl3", 2);
                  for (const auto& g : rep.groups) {
                      if (g.lambda == rat(-1, 2))
                          ok = ok && g.observed == 8 && g.status == "MATCHED";
                      if (g.lambda == Rat(0))
                          ok = ok && g.observed == 20 && g.status == "MATCHED";
                  }
                  return ok;
              });

    criterion(7, "spectrum verification, n=5: g2 (2002) and sl4 (3003)",
              [&](std::string& detail) {
                  bool ok = true;
                  std::ostringstream info;
                  for (const char* name : {"g2", "sl4"}) {
                      AlgebraContext& ctx = wb.context(name);
                      auto rep = verify_decomposition(
                          ctx.id, wb.wedge(ctx, 5), ctx.point, wb.catalog(),
                          cfg, wb.primes());
                      ok = ok && rep.all_consistent();
                      long sum = 0;
                      for (const auto& g : rep.groups) sum += g.observed;
                      ok = ok && Rat(sum) == Rat(binomial(ctx.f.dim, 5));
                      info << name << ": " << rep.groups.size()
                           << " groups, total " << sum << "; ";
                      if (ctx.id.family == Family::G2)
                          for (const auto& g : rep.groups)
                              if (g.lambda == Rat(0)) {
                                  ok = ok && g.observed == 0 &&
                                       g.status == "MATCHED";
                                  info << "g2 lambda=0 multiplicity "
                                       << g.observed << "; ";
                              }
                  }
                  detail = info.str();
                  return ok;
              });

    criterion(8, "dim X5 closed form and eq51 closure at g2,f4,e6,e7,e8",
              [&](std::string&) {
                  bool ok = dim_x(5, 14) == Rat(-924) &&
                            dim_x(5, 52) == Rat(1582308) &&
                            dim_x(5, 248) == Rat(6899079264);
                  for (const char* name : {"g2", "f4", "e6", "e7", "e8"}) {
                      AlgebraId id = AlgebraId::parse(name);
                      ok = ok && solve_dim_x5(vogel_point(id), id.dim(),
                                              wb.catalog()) ==
                                     dim_x(5, id.dim());
                  }
                  return ok;
              });

    criterion(9, "Table 2 internal lambda-consistency; dim I' = 0 at g2",
              [&](std::string&) {
                  bool ok = true;
                  for (const auto& lc :
                       table2_lambda_consistency(wb.catalog()))
                      ok = ok && lc.c4_ok && lc.c5_ok;
                  ok = ok && table2_dim(wb.catalog(), "I'", rat(-1, 4))
                                     .value == Rat(0);
                  return ok;
              });

    criterion(10, "M3 values; sl4 n=5 moments k=0..4; single-unknown policy",
              [&](std::string& detail) {
                  bool ok = dim_m3(M3Family::SL, 3) == Rat(0) &&
                            dim_m3(M3Family::SL, 4) == Rat(245) &&
                            dim_m3(M3Family::EXCEPTIONAL) == Rat(0);
                  AlgebraContext& ctx = wb.context("sl4");
                  const WedgeOperator& op = wb.wedge(ctx, 5);
                  auto mom = moment_consistency(ctx.id, op, ctx.point, 4,
                                                wb.catalog(), cfg,
                                                wb.primes());
                  ok = ok && mom.spectrum_used && mom.all_pass();
                  auto dec = verify_decomposition(ctx.id, op, ctx.point,
                                                  wb.catalog(), cfg,
                                                  wb.primes());
                  for (const auto& g : dec.groups)
                      if (g.lambda == Rat(-1)) {
                          bool has_m3 = false;
                          for (const auto& m : g.members)
                              if (m.label == "M3")
                                  has_m3 = m.dim && *m.dim == Rat(245);
                          ok = ok && has_m3 && g.status != "INCONSISTENT";
                          detail = "M3 group status: " + g.status;
                      }
                  return ok;
              });

    criterion(11, "negative controls: seeded defects must be caught",
              [&](std::string& detail) {
                  std::ostringstream info;
                  bool ok = true;

                  {  // perturbed Table 2 eigenvalue coefficient
                      Catalog bad = make_catalog();
                      apply_injection(bad, Injection::Table2Eigenvalue);
                      bool caught = false;
                      for (const auto& lc : table2_lambda_consistency(bad))
                          caught = caught || !(lc.c4_ok && lc.c5_ok);
                      ok = ok && caught;
                      info << "table2-lambda-consistency:"
                           << (caught ? "caught" : "MISSED") << " ";
                  }
                  {  // perturbed Table 2 dimension coefficient
                      Catalog bad = make_catalog();
                      apply_injection(bad, Injection::Table2Dim);
                      AlgebraId e8 = AlgebraId::parse("e8");
                      bool caught = solve_dim_x5(vogel_point(e8), e8.dim(),
                                                 bad) != dim_x(5, e8.dim());
                      ok = ok && caught;
                      info << "dimx5-closure:"
                           << (caught ? "caught" : "MISSED") << " ";
                  }
                  {  // perturbed structure constant
                      StructureConstants f =
                          build_algebra(AlgebraId::parse("sl3"));
                      f.brackets[0][1].push_back({f.dim - 1, Rat(1)});
                      bool caught = !satisfies_antisymmetry(f) ||
                                    !satisfies_jacobi(f);
                      ok = ok && caught;
                      info << "structure-jacobi:"
                           << (caught ? "caught" : "MISSED") << " ";
                  }
                  {  // perturbed catalog eigenvalue
                      Catalog bad = make_catalog();
                      apply_injection(bad, Injection::CatalogEigenvalue);
                      AlgebraContext& ctx = wb.context("sl3");
                      bool caught = false;
                      try {
                          auto rep = verify_decomposition(
                              ctx.id, wb.wedge(ctx, 3), ctx.point, bad, cfg,
                              wb.primes());
                          caught = !rep.all_consistent();
                      } catch (const Error& e) {
                          caught = e.code() == ErrorCode::SpectrumMismatch;
                      }
                      ok = ok && caught;
                      info << "spectrum-mismatch:"
                           << (caught ? "caught" : "MISSED");
                  }
                  detail = info.str();
                  return ok;
              });

    std::printf(
        "\nNote: f4, e6, e7, e8 are verified at formula level only "
        "(criteria 8 and 9); their wedge spaces are beyond direct "
        "computation at desk scale.\n");
    std::printf("%d of 11 criteria passed.\n", 11 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
