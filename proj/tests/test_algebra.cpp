#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "casimir/algebra.hpp"

using namespace casimir;

TEST_CASE("algebra ids and dimensions") {
    CHECK(AlgebraId::parse("sl2").dim() == 3);
    CHECK(AlgebraId::parse("sl3").dim() == 8);
    CHECK(AlgebraId::parse("sl4").dim() == 15);
    CHECK(AlgebraId::parse("so5").dim() == 10);
    CHECK(AlgebraId::parse("sp4").dim() == 10);  // so(5) ~ sp(4)
    CHECK(AlgebraId::parse("so7").dim() == 21);
    CHECK(AlgebraId::parse("sp6").dim() == 21);
    CHECK(AlgebraId::parse("g2").dim() == 14);
    CHECK(AlgebraId::parse("e8").dim() == 248);
    CHECK_THROWS_AS((void)AlgebraId::parse("su3"), Error);
    CHECK_THROWS_AS((void)AlgebraId::parse("sp5"), Error);
    CHECK_THROWS_AS((void)AlgebraId::parse("so2"), Error);
    CHECK_THROWS_AS((void)build_algebra(AlgebraId::parse("e8")), Error);
    CHECK_THROWS_AS((void)build_algebra(AlgebraId::parse("so4")), Error);
    CHECK_THROWS_AS((void)build_algebra(AlgebraId::parse("sl6")), Error);
}

TEST_CASE("sl2 in the (e,h,f) basis") {
    auto f = build_algebra(AlgebraId::parse("sl2"));
    REQUIRE(f.dim == 3);
    // basis order: e = E12, h = E11-E22, f = E21
    CHECK(f.f(1, 0, 0) == Rat(2));    // [h,e] = 2e
    CHECK(f.f(1, 2, 2) == Rat(-2));   // [h,f] = -2f
    CHECK(f.f(0, 2, 1) == Rat(1));    // [e,f] = h
    auto metric = killing_metric(f);
    CHECK(metric.g[1][1] == Rat(8));  // g(h,h)
    CHECK(metric.g[0][2] == Rat(4));  // g(e,f)
    CHECK(metric.g[0][0] == Rat(0));  // g(e,e)
    auto adj = adjoint_rep(f);
    // ad h = diag(2, 0, -2)
    CHECK(adj.cols[1][0] == std::vector<std::pair<int, Rat>>{{0, Rat(2)}});
    CHECK(adj.cols[1][1].empty());
    CHECK(adj.cols[1][2] == std::vector<std::pair<int, Rat>>{{2, Rat(-2)}});
}

TEST_CASE("structure constants satisfy antisymmetry and Jacobi exactly") {
    for (const char* name : {"sl2", "sl3", "sl4", "so3", "so5", "sp4", "g2"}) {
        CAPTURE(name);
        auto f = build_algebra(AlgebraId::parse(name));
        CHECK(satisfies_antisymmetry(f));
        CHECK(satisfies_jacobi(f));
        auto adj = adjoint_rep(f);
        CHECK(satisfies_representation_property(f, adj));
    }
}

TEST_CASE("adjoint traceless for sl3") {
    auto f = build_algebra(AlgebraId::parse("sl3"));
    auto adj = adjoint_rep(f);
    for (int a = 0; a < f.dim; ++a) {
        Rat tr(0);
        for (int b = 0; b < f.dim; ++b)
            for (const auto& [c, v] : adj.cols[a][b])
                if (c == b) tr += v;
        CHECK(tr == Rat(0));
    }
}

TEST_CASE("Killing metric: symmetric, exact inverse, c2(adjoint) = 1") {
    for (const char* name : {"sl2", "sl3", "so5", "sp4", "sp6", "g2"}) {
        CAPTURE(name);
        auto f = build_algebra(AlgebraId::parse(name));
        auto metric = killing_metric(f);
        for (int a = 0; a < f.dim; ++a)
            for (int b = 0; b < f.dim; ++b) {
                CHECK(metric.g[a][b] == metric.g[b][a]);
                Rat dotab(0);
                for (int c = 0; c < f.dim; ++c)
                    dotab += metric.g[a][c] * metric.g_inv[c][b];
                CHECK(dotab == Rat(a == b ? 1 : 0));
            }
        auto adj = adjoint_rep(f);
        CHECK(quadratic_casimir_is_identity(f, metric, adj));
    }
}

TEST_CASE("G2 Killing determinant is nonzero") {
    auto f = build_algebra(AlgebraId::parse("g2"));
    REQUIRE(f.dim == 14);
    auto metric = killing_metric(f);
    CHECK(metric_determinant(metric) != Rat(0));
}

TEST_CASE("G2 Chevalley constants are integers") {
    auto f = build_algebra(AlgebraId::parse("g2"));
    for (const auto& [a, b, c, v] : f.entries())
        CHECK(v.get_den() == 1);
}

TEST_CASE("perturbed structure constant breaks Jacobi") {
    auto f = build_algebra(AlgebraId::parse("sl3"));
    f.brackets[0][1].push_back({3, Rat(1)});
    bool anti = satisfies_antisymmetry(f);
    bool jac = satisfies_jacobi(f);
    CHECK_FALSE((anti && jac));
}
