#include "doctest.h"
#include "support.hpp"

#include "koszul/algebra.hpp"
#include "koszul/koszul_dual.hpp"

using namespace koszul;

namespace {

std::vector<int> dual_dims(const CurvedCoalgebra& c) {
    std::vector<int> out;
    for (int n = 0; n <= c.max_weight(); ++n) out.push_back(c.dim(n));
    return out;
}

const CheckRecord& find(const AxiomReport& r, const std::string& id) {
    for (const auto& c : r.checks)
        if (c.id == id) return c;
    throw std::runtime_error("no check " + id);
}

}  // namespace

TEST_CASE("dual coalgebra dimensions") {
    auto dims = [](const std::string& name) { return dual_dims(CurvedCoalgebra(support::fixture_split(name), 4)); };
    CHECK(dims("tensor2") == std::vector<int>{1, 2, 0, 0, 0});
    CHECK(dims("sym2") == std::vector<int>{1, 2, 1, 0, 0});
    CHECK(dims("weyl") == std::vector<int>{1, 2, 1, 0, 0});
    CHECK(dims("ug-nonabelian") == std::vector<int>{1, 2, 1, 0, 0});
    CHECK(dims("poly1") == std::vector<int>{1, 1, 0, 0, 0});
    CHECK(dims("dualnumbers") == std::vector<int>{1, 1, 1, 1, 1});
}

TEST_CASE("recursive components match the defining intersection") {
    std::vector<QlcSplit> splits;
    for (const auto& n : support::associative_fixtures()) splits.push_back(support::fixture_split(n));
    for (const auto& p : support::random_valid_qlc(7, 8)) splits.push_back(split(p));
    for (const auto& s : splits) {
        CurvedCoalgebra c(s, 4);
        for (int n = 2; n <= 4; ++n) CHECK(c.component(n) == dual_component(s, n));
    }
}

TEST_CASE("s² is an involution") {
    QlcSplit s = support::fixture_split("ug-nonabelian");
    SparseVec x{{0, 2}, {1, -1}, {3, Rational(1, 3)}};
    CHECK(suspend2(s, suspend2(s, x)) == x);
}

TEST_CASE("the Weyl curvature is nonzero and the Lie-type one is not curved") {
    CurvedCoalgebra weyl(support::fixture_split("weyl"), 3);
    REQUIRE(weyl.h().size() == 1);
    CHECK(weyl.h()[0] != 0);
    CurvedCoalgebra ug(support::fixture_split("ug-nonabelian"), 3);
    CHECK(ug.h()[0] == 0);
    CHECK(!ug.d(2).is_zero());
}

TEST_CASE("coalgebra axioms hold on fixtures") {
    for (const auto& name : support::associative_fixtures()) {
        CAPTURE(name);
        CurvedCoalgebra c(support::fixture_split(name), 4);
        AxiomReport r = verify_axioms(c);
        for (const auto& chk : r.checks) {
            CAPTURE(chk.id);
            CAPTURE(chk.detail);
            CHECK(chk.pass);
        }
        AxiomReport a = verify_curved_algebra(dual_curved_algebra(c));
        CHECK(a.all_pass());
    }
}

TEST_CASE("coalgebra axioms hold on ten random valid presentations") {
    for (const auto& p : support::random_valid_qlc(2024, 10)) {
        CAPTURE(p.name);
        CurvedCoalgebra c(split(p), 4);
        AxiomReport r = verify_axioms(c);
        for (const auto& chk : r.checks) {
            CAPTURE(chk.id);
            CAPTURE(chk.detail);
            CHECK(chk.pass);
        }
        CHECK(verify_curved_algebra(dual_curved_algebra(c)).all_pass());
    }
}

TEST_CASE("a Jacobi violation is caught by the second compatibility condition") {
    CurvedCoalgebra c(split(support::jacobi_violating()), 4, false);
    AxiomReport r = verify_axioms(c);
    const CheckRecord& cc2 = find(r, "lemma-cc2");
    CHECK_FALSE(cc2.pass);
    CHECK(cc2.detail.rfind("witness X = ", 0) == 0);
    CHECK(find(r, "lemma-cc1").pass);
    CHECK_FALSE(r.all_pass());
}

TEST_CASE("overlap space dimension") {
    // V⊗qR ∩ qR⊗V: exterior-type relations on 2 letters meet in 0, on 3 letters in 1
    CHECK(overlap_w3(support::fixture_split("sym2")).dim() == 0);
    CHECK(overlap_w3(support::fixture_split("dualnumbers")).dim() == 1);
    CHECK(overlap_w3(split(support::random_valid_qlc(1, 3)[2])).dim() == 1);
}
