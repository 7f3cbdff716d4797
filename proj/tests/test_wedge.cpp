#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "casimir/formulas.hpp"
#include "casimir/wedge.hpp"

using namespace casimir;

namespace {

struct Ctx {
    StructureConstants f;
    KillingMetric metric;
    AdjointRep adj;
    SplitCasimir C;
};

Ctx make(const char* name) {
    Ctx c;
    c.f = build_algebra(AlgebraId::parse(name));
    c.metric = killing_metric(c.f);
    c.adj = adjoint_rep(c.f);
    c.C = split_casimir_2(c.adj, c.metric);
    return c;
}

// Literal full-space reference: sum the diagonal of ASym C^k over every one
// of the dim^n tuple-basis vectors, no distinct-tuple shortcut.
Rat literal_projector_trace(const SplitCasimir& C, int n, int k) {
    int d = C.dim;
    long total = 1;
    for (int t = 0; t < n; ++t) total *= d;
    Rat trace(0);
    std::vector<int> idx(n, 0);
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int s = 0; s < n; ++s) {
            idx[s] = static_cast<int>(c % d);
            c /= d;
        }
        std::uint32_t key = encode_tuple(idx.data(), n);
        TensorVec v;
        v[key] = 1;
        for (int rep = 0; rep < k; ++rep) v = casimir_n_apply(C, n, v);
        TensorVec w = asym_apply(n, v);
        if (auto it = w.find(key); it != w.end()) trace += it->second;
    }
    return trace;
}

}  // namespace

TEST_CASE("wedge basis counts and ordering") {
    CHECK(wedge_basis(8, 3).size() == 56);
    CHECK(wedge_basis(3, 5).size() == 0);
    CHECK(wedge_basis(14, 5).size() == 2002);
    CHECK(wedge_basis(15, 5).size() == 3003);
    auto b = wedge_basis(4, 2);
    REQUIRE(b.size() == 6);
    CHECK(b.tuples.front() == std::array<int, 5>{0, 1, 0, 0, 0});
    CHECK(b.tuples.back() == std::array<int, 5>{2, 3, 0, 0, 0});
    for (long i = 0; i < b.size(); ++i)
        CHECK(b.index_of(b.tuples[i].data()) == i);
}

TEST_CASE("sl3 n=2: 28x28 operator with trace -4") {
    Ctx c = make("sl3");
    auto basis = wedge_basis(8, 2);
    auto op = restrict_casimir(c.C, basis);
    CHECK(op.size == 28);
    CHECK(trace_power(op, 0) == Rat(28));
    CHECK(trace_power(op, 1) == Rat(-4));
    // route equivalence against the full-tensor projector
    RunConfig cfg;
    CHECK(full_projector_trace(c.C, 2, 1, cfg) == Rat(-4));
}

TEST_CASE("sl2 n=2 operator is -1/2 times the identity") {
    Ctx c = make("sl2");
    auto op = restrict_casimir(c.C, wedge_basis(3, 2));
    REQUIRE(op.size == 3);
    for (long col = 0; col < 3; ++col)
        for (long row = 0; row < 3; ++row)
            CHECK(op.entry(row, col) == (row == col ? rat(-1, 2) : Rat(0)));
    CHECK(satisfies_quadratic_identity(op, rat(1, 2)));
}

TEST_CASE("characteristic identity M(M + 1/2) = 0 across algebras") {
    for (const char* name : {"sl2", "sl3", "so5", "sp4", "g2"}) {
        CAPTURE(name);
        Ctx c = make(name);
        auto op = restrict_casimir(c.C, wedge_basis(c.f.dim, 2));
        CHECK(satisfies_quadratic_identity(op, rat(1, 2)));
    }
}

TEST_CASE("frozen trace values from the universal polynomials") {
    // sl3, n=3, k=3: -(1/8) d (d+6) at d=8
    Ctx sl3 = make("sl3");
    auto op3 = restrict_casimir(sl3.C, wedge_basis(8, 3));
    CHECK(trace_power(op3, 3) == Rat(-14));
    // sl3, n=4, k=2: (1/8) d (d-3) (d+4) at d=8
    auto op4 = restrict_casimir(sl3.C, wedge_basis(8, 4));
    CHECK(trace_power(op4, 2) == Rat(60));
    // sl2, n=3, k=1: -(1/2) d (d-2) at d=3
    Ctx sl2 = make("sl2");
    auto sl2op3 = restrict_casimir(sl2.C, wedge_basis(3, 3));
    CHECK(trace_power(sl2op3, 1) == rat(-3, 2));
    // sl3, n=5, k=1: -(1/12) d (d-2)(d-3)(d-4) at d=8
    auto op5 = restrict_casimir(sl3.C, wedge_basis(8, 5));
    CHECK(op5.size == 56);
    CHECK(trace_power(op5, 1) == Rat(-80));
}

TEST_CASE("empty wedge spaces yield zero operators and traces") {
    Ctx sl2 = make("sl2");
    auto op = restrict_casimir(sl2.C, wedge_basis(3, 5));
    CHECK(op.size == 0);
    for (int k = 0; k <= 4; ++k) CHECK(trace_power(op, k) == Rat(0));
}

TEST_CASE("serial and parallel restriction agree") {
    for (const char* name : {"sl3", "so5"}) {
        Ctx c = make(name);
        for (int n : {2, 3}) {
            auto basis = wedge_basis(c.f.dim, n);
            auto a = restrict_casimir(c.C, basis);
            auto b = restrict_casimir_serial(c.C, basis);
            REQUIRE(a.size == b.size);
            for (long col = 0; col < a.size; ++col)
                CHECK(a.cols[col] == b.cols[col]);
        }
    }
}

TEST_CASE("serial and parallel trace kernels agree") {
    Ctx c = make("sl3");
    for (int n : {2, 3, 4}) {
        auto op = restrict_casimir(c.C, wedge_basis(8, n));
        for (int k = 0; k <= 3; ++k)
            CHECK(trace_power(op, k) == trace_power_serial(op, k));
    }
}

TEST_CASE("optimized full-projector oracle equals the literal full sum") {
    Ctx sl2 = make("sl2");
    RunConfig cfg;
    for (int n : {2, 3, 4}) {
        for (int k = 0; k <= 3; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(full_projector_trace(sl2.C, n, k, cfg) ==
                  literal_projector_trace(sl2.C, n, k));
        }
    }
    Ctx sl3 = make("sl3");
    for (int k = 0; k <= 2; ++k)
        CHECK(full_projector_trace(sl3.C, 2, k, cfg) ==
              literal_projector_trace(sl3.C, 2, k));
}

TEST_CASE("projector route: k=0 counts the wedge dimension") {
    RunConfig cfg;
    Ctx sl3 = make("sl3");
    CHECK(full_projector_trace(sl3.C, 5, 0, cfg) == Rat(56));
    CHECK(full_projector_trace(sl3.C, 3, 0, cfg) == Rat(56));
    CHECK(full_projector_trace(sl3.C, 4, 0, cfg) == Rat(70));
    Ctx sl2 = make("sl2");
    CHECK(full_projector_trace(sl2.C, 3, 1, cfg) == rat(-3, 2));
}

TEST_CASE("full projector route respects the resource cap") {
    Ctx sl3 = make("sl3");
    RunConfig cfg;
    cfg.max_full_tensor_dim = 10;
    CHECK_THROWS_AS((void)full_projector_trace(sl3.C, 3, 1, cfg), Error);
}

TEST_CASE("route equivalence on small cases") {
    RunConfig cfg;
    for (const char* name : {"sl2", "sl3"}) {
        Ctx c = make(name);
        for (int n : {3, 4}) {
            auto op = restrict_casimir(c.C, wedge_basis(c.f.dim, n));
            for (int k = 0; k <= 3; ++k) {
                CAPTURE(name);
                CAPTURE(n);
                CAPTURE(k);
                CHECK(full_projector_trace(c.C, n, k, cfg) ==
                      trace_power(op, k));
            }
        }
    }
}

TEST_CASE("trace cap errors") {
    Ctx c = make("sl3");
    auto op = restrict_casimir(c.C, wedge_basis(8, 2));
    RunConfig cfg;
    cfg.max_wedge_dim = 5;
    CHECK_THROWS_AS((void)trace_power(op, 1, &cfg), Error);
}
