#include "doctest.h"
#include "support.hpp"

#include "koszul/linalg.hpp"

#include <random>

using namespace koszul;
using support::Dense;

namespace {

Dense random_dense(std::mt19937& rng, int rows, int cols, double density) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    std::bernoulli_distribution nz(density);
    Dense m(rows, std::vector<Rational>(cols, 0));
    for (auto& row : m)
        for (auto& x : row)
            if (nz(rng)) {
                x = Rational(num(rng), den(rng));
                x.canonicalize();
            }
    return m;
}

// A low-rank matrix as a product, so rank deficiency is common.
Dense low_rank(std::mt19937& rng, int rows, int cols, int r) {
    Dense a = random_dense(rng, rows, r, 0.8), b = random_dense(rng, r, cols, 0.8);
    Dense m(rows, std::vector<Rational>(cols, 0));
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < r; ++k)
            for (int j = 0; j < cols; ++j) m[i][j] += a[i][k] * b[k][j];
    return m;
}

}  // namespace

TEST_CASE("parse_rational accepts p, -p, p/q and rejects the rest") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-7/14") == Rational(-1, 2));
    CHECK(parse_rational(" 4 / 6 ") == Rational(2, 3));
    CHECK(parse_rational("+5") == 5);
    for (const char* bad : {"", "1/0", "x", "1.5", "1/-2", "--1", "3/", "/3", "1e3"})
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
    CHECK(to_string(parse_rational("6/4")) == "3/2");
}

TEST_CASE("sparse vector helpers") {
    SparseVec a{{0, 1}, {3, 2}}, b{{1, 5}, {3, -1}};
    CHECK(axpy(a, 2, b) == SparseVec{{0, 1}, {1, 10}});
    CHECK(scaled(a, 0).empty());
    CHECK(dot(a, b) == -2);
    CHECK(entry(b, 1) == 5);
    CHECK(entry(b, 2) == 0);
    SparseAccumulator acc;
    acc.add(4, 1);
    acc.add(1, 2);
    acc.add(4, -1);
    CHECK(acc.take() == SparseVec{{1, 2}});
}

TEST_CASE("rank agrees with textbook elimination on random matrices") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> dim(1, 9);
        const int r = dim(rng), c = dim(rng);
        // wide matrices exercise the sparse path too
        const int cols = trial % 5 == 0 ? c + 70 : c;
        Dense m = trial % 2 ? random_dense(rng, r, cols, 0.4) : low_rank(rng, r, cols, 1 + trial % 3);
        CHECK(rank(Matrix::from_dense(m)) == support::naive_rank(m));
    }
}

TEST_CASE("rref is reduced and the kernel has complementary dimension") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int rows = 2 + trial % 6, cols = 3 + trial % 7;
        Matrix m = Matrix::from_dense(low_rank(rng, rows, cols, 1 + trial % 4));
        RrefResult rr = rref(m);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
            CHECK(rr.matrix.at(static_cast<int>(i), rr.pivots[i]) == 1);
            for (int r = 0; r < rr.matrix.rows(); ++r)
                if (r != static_cast<int>(i)) CHECK(rr.matrix.at(r, rr.pivots[i]) == 0);
        }
        Subspace ker = kernel_basis(m);
        CHECK(ker.dim() + rank(m) == cols);
        for (const auto& v : ker.basis()) CHECK(m.apply(v).empty());
    }
}

TEST_CASE("dim(A + B) + dim(A ∩ B) = dim A + dim B") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + trial % 5;
        auto vectors = [&](int k) {
            std::vector<SparseVec> out;
            for (const auto& row : low_rank(rng, k, n, 1 + trial % 3)) out.push_back(sparse_from_dense(row));
            return out;
        };
        Subspace a = Subspace::span(n, vectors(1 + trial % 4)), b = Subspace::span(n, vectors(2 + trial % 3));
        Subspace s = sum(a, b), i = intersect({a, b});
        CHECK(s.dim() + i.dim() == a.dim() + b.dim());
        for (const auto& v : i.basis()) {
            CHECK(a.contains(v));
            CHECK(b.contains(v));
        }
        CHECK(s.contains(a));
        CHECK(s.contains(b));
    }
    CHECK_THROWS_AS(intersect({}), EmptyIntersectionFamily);
}

TEST_CASE("quotient projection kills the subspace and is onto") {
    Subspace sub = Subspace::span(4, {{{0, 1}, {1, 1}}, {{2, 1}, {3, -1}}});
    Quotient q = quotient(4, sub);
    CHECK(q.projection.rows() == 2);
    for (const auto& v : sub.basis()) CHECK(q.projection.apply(v).empty());
    CHECK(rank(q.projection) == 2);
}

TEST_CASE("complex homology and the d² guard") {
    // 0 ← Q ← Q² ← Q : a circle-like complex with H = (0, 0, 0) up to the chosen maps
    Matrix d1 = Matrix::from_dense({{1, 1}});
    Matrix d2 = Matrix::from_dense({{1}, {-1}});
    auto h = complex_homology({1, 2, 1}, {Matrix(0, 1), d1, d2});
    CHECK(h[0].dim == 0);
    CHECK(h[1].dim == 0);
    CHECK(h[2].dim == 0);
    Matrix bad = Matrix::from_dense({{1}, {0}});
    CHECK_THROWS_AS(check_complex({1, 2, 1}, {Matrix(0, 1), d1, bad}), NotAComplex);
}

TEST_CASE("induced rank between nested complexes") {
    // sub cycles span e0, big boundaries span e0: the class dies
    Subspace cyc = Subspace::span(2, {{{0, 1}}});
    CHECK(induced_rank(cyc, Subspace::span(2, {{{0, 1}}})) == 0);
    CHECK(induced_rank(cyc, Subspace::span(2, {{{1, 1}}})) == 1);
}
