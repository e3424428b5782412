#include "doctest.h"

#include "koszul/graded.hpp"

#include <random>

using namespace koszul;

namespace {

BigradedSpace space(const std::string& prefix, const std::vector<int>& degrees) {
    BigradedSpace s;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        s.add(prefix + std::to_string(i), degrees[i], static_cast<int>(i % 2));
    return s;
}

// Random map of the given degree shift; weight is ignored (shift 0 and only matching weights).
GradedMap random_map(std::mt19937& rng, const BigradedSpace& src, const BigradedSpace& tgt, int shift) {
    GradedMap f = zero_map(src, tgt, shift, 0);
    std::uniform_int_distribution<int> v(-3, 3);
    for (int r = 0; r < tgt.dim(); ++r)
        for (int c = 0; c < src.dim(); ++c)
            if (tgt.degree(r) == src.degree(c) + shift && tgt.weight(r) == src.weight(c)) f.matrix.set(r, c, v(rng));
    return f;
}

}  // namespace

TEST_CASE("Koszul sign rule for tensor products of maps") {
    // (f⊗g)(f'⊗g') = (-1)^{|g||f'|} ff'⊗gg'
    std::mt19937 rng(3);
    BigradedSpace a = space("a", {0, 1, 2, 1}), b = space("b", {1, 0, 2, 3}), c = space("c", {0, 1, 2, 1});
    for (int trial = 0; trial < 20; ++trial) {
        const int sf = trial % 2, sg = (trial / 2) % 2, sf2 = (trial / 4) % 2, sg2 = 1 - sf;
        GradedMap f2 = random_map(rng, a, b, sf2), f = random_map(rng, b, c, sf);
        GradedMap g2 = random_map(rng, c, a, sg2), g = random_map(rng, a, b, sg);
        CHECK(f.is_homogeneous());
        GradedMap lhs = compose(tensor_map(f, g), tensor_map(f2, g2));
        GradedMap rhs = tensor_map(compose(f, f2), compose(g, g2));
        Rational sign = (sg * sf2) % 2 ? -1 : 1;
        CHECK(lhs.matrix == sign * rhs.matrix);
    }
}

TEST_CASE("dual maps reverse composition with the Koszul sign") {
    std::mt19937 rng(8);
    BigradedSpace base = space("b", {1, 2, 0, 1});
    for (int trial = 0; trial < 12; ++trial) {
        const int sf = trial % 2, sg = (trial / 2) % 2;
        BigradedSpace a = shift(base, -sf), c = shift(base, sg);
        GradedMap f = random_map(rng, a, base, sf);
        GradedMap g = random_map(rng, base, c, sg);
        CHECK(!f.matrix.is_zero());
        GradedMap lhs = dual_map(compose(g, f));
        GradedMap rhs = compose(dual_map(f), dual_map(g));
        Rational sign = (sf * sg) % 2 ? -1 : 1;
        CHECK(lhs.matrix == sign * rhs.matrix);
        CHECK(lhs.target == graded_dual(a));
    }
}

TEST_CASE("shift and dual labels") {
    BigradedSpace v = space("x", {0, 1});
    BigradedSpace sv = shift(v, 1);
    CHECK(sv.label(0) == "s(x0)");
    CHECK(sv.degree(1) == 2);
    CHECK(shift(sv, -1) == v);
    CHECK(graded_dual(graded_dual(v)) == v);
    CHECK(graded_dual(v).degree(1) == -1);
    CHECK_THROWS_AS(v.add("x0", 0, 0), std::invalid_argument);
}

TEST_CASE("homology_by_degree rejects inhomogeneous differentials") {
    // degrees 1 → 0: x ↦ y is fine; a degree-preserving entry is not
    Matrix d(2, 2);
    d.set(1, 0, 1);
    auto h = homology_by_degree({1, 0}, d);
    CHECK(h.at(0) == 0);
    CHECK(h.at(1) == 0);
    Matrix bad(2, 2);
    bad.set(0, 1, 1);
    CHECK_THROWS_AS(homology_by_degree({1, 1}, bad), Error);
}

TEST_CASE("word indexing puts the first letter first") {
    CHECK(word_index({1, 0, 2}, 3) == 11);
    CHECK(word_at(11, 3, 3) == std::vector<int>{1, 0, 2});
    CHECK(ipow(3, 4) == 81);
    CHECK(render({{0, Rational(-2)}, {1, 1}}, [](int i) { return i ? std::string("y") : std::string("x"); }) ==
          "-2·x + y");
}
