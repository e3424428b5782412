#include "doctest.h"
#include "support.hpp"

#include "koszul/cyclic.hpp"

using namespace koszul;

namespace {

void require_all(const AxiomReport& r) {
    for (const auto& c : r.checks) {
        CAPTURE(c.id);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
}

std::vector<int> dims_of(const HcResult& r) {
    std::vector<int> out;
    for (const auto& [n, d] : r.dims) out.push_back(d);
    return out;
}

CurvedAlgebra dual_of(const std::string& name, int W) {
    return dual_curved_algebra(CurvedCoalgebra(support::fixture_split(name), W));
}

}  // namespace

TEST_CASE("cyclic operators: Tⁿ = id and (1-T)N = N(1-T) = 0") {
    for (int n = 1; n <= 4; ++n) {
        CyclicOperators op = operators(n, {0, 1});
        require_all(op.checks);
    }
}

TEST_CASE("chain map identities through arity 5") {
    std::vector<std::pair<std::string, CurvedAlgebra>> algebras{
        {"k[x]/x³", CurvedAlgebra::truncated_polynomial(2)},
        {"k[x]/x² odd", CurvedAlgebra::truncated_polynomial(1, 1)},
        {"weyl dual (curved)", dual_of("weyl", 3)},
        {"ug dual (∇ ≠ 0)", dual_of("ug-nonabelian", 3)},
        {"heisenberg dual", dual_of("heisenberg-unital", 3)},
        {"dual numbers dual", dual_of("dualnumbers", 4)},
        {"sym2 quadratic", CurvedAlgebra::from_graded(FilteredAlgebra(support::fixture_split("sym2"), 3))}};
    for (const auto& [name, a] : algebras) {
        CAPTURE(name);
        require_all(chain_map_checks(a, 5));
    }
}

TEST_CASE("reduced cyclic homology of dual numbers") {
    HcResult r = hc(CyclicKind::plus, CurvedAlgebra::truncated_polynomial(1), {5, 0, 4});
    CHECK(dims_of(r) == std::vector<int>{1, 0, 1, 0, 1});
    require_all(r.checks);
}

TEST_CASE("truncated polynomial rings against Connes' complex") {
    for (int D = 2; D <= 3; ++D) {
        CAPTURE(D);
        HcResult r = hc(CyclicKind::plus, CurvedAlgebra::truncated_polynomial(D), {5, 0, 3});
        CHECK(dims_of(r) == support::connes_truncated_poly(D, 5, 3));
        require_all(r.checks);
    }
}

TEST_CASE("reduced periodic cyclic homology of a nilpotent extension vanishes") {
    HcResult r = hc(CyclicKind::per, CurvedAlgebra::truncated_polynomial(2), {5, 0, 3});
    for (int d : dims_of(r)) CHECK(d == 0);
}

TEST_CASE("dual kinds are the weightwise dual of homological kinds") {
    CurvedAlgebra a = CurvedAlgebra::truncated_polynomial(2);
    HcResult hom = hc(CyclicKind::plus, a, {5, 0, 3});
    HcResult dual = hc(CyclicKind::dual_plus, a, {5, 0, 3});
    CHECK(dims_of(hom) == dims_of(dual));
}

TEST_CASE("R♮ of the free algebra on two letters counts necklaces") {
    XPlusComplex x = x_plus(support::fixture_split("tensor2"), 4);
    auto h = r_natural_homology(x, 0, 0);
    long long expect = 0;
    for (int n = 1; n <= 4; ++n) expect += support::necklaces(n, 2);
    CHECK(expect == 15);
    REQUIRE(h.size() == 1);
    CHECK(h[0].second == expect);
}

TEST_CASE("X⁺ identities on every fixture") {
    for (const auto& name : support::associative_fixtures()) {
        CAPTURE(name);
        require_all(x_plus(support::fixture_split(name), 4).checks);
    }
}

TEST_CASE("Feigin–Tsygan comparison on fixtures") {
    for (const char* name : {"poly1", "dualnumbers", "sym2", "weyl", "ug-nonabelian"}) {
        CAPTURE(name);
        FtReport r = ft_compare(support::fixture_split(name), 4, 3);
        require_all(r.checks);
        for (const auto& row : r.rows) {
            CHECK(row.hc_r_natural == row.hc_dual_minus);
            CHECK(row.hc_r_natural == row.hc_x_plus);
        }
    }
}

TEST_CASE("poly1: R♮ has one class per positive weight") {
    FtReport r = ft_compare(support::fixture_split("poly1"), 5, 2);
    REQUIRE(r.rows.size() == 3);
    CHECK(r.rows[0].hc_r_natural == 5);
    CHECK(r.rows[1].hc_r_natural == 0);
}
