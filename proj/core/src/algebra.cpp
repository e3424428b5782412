#include "koszul/algebra.hpp"

namespace koszul {

int CurvedAlgebra::add_basis(std::string label, int degree, int weight) {
    labels_.push_back(std::move(label));
    degree_.push_back(degree);
    weight_.push_back(weight);
    for (auto& row : table_) row.emplace_back();
    table_.emplace_back(labels_.size());
    nabla_.emplace_back();
    return dim() - 1;
}

CurvedAlgebra CurvedAlgebra::trivial() {
    CurvedAlgebra a;
    a.add_basis("1", 0, 0);
    a.set_product(0, 0, {{0, Rational(1)}});
    return a;
}

CurvedAlgebra CurvedAlgebra::from_graded(const FilteredAlgebra& qa) {
    CurvedAlgebra a;
    for (int i = 0; i < qa.dim(); ++i) a.add_basis(qa.label(i), qa.degree(i), qa.filtration(i));
    for (int i = 0; i < qa.dim(); ++i)
        for (int j = 0; j < qa.dim(); ++j)
            if (qa.filtration(i) + qa.filtration(j) <= qa.bound()) a.set_product(i, j, qa.mult(i, j));
    a.set_max_weight(qa.bound());
    return a;
}

CurvedAlgebra CurvedAlgebra::truncated_polynomial(int D, int degree) {
    CurvedAlgebra a;
    for (int n = 0; n <= D; ++n) a.add_basis(n == 0 ? "1" : "x^" + std::to_string(n), n * degree, n);
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j) a.set_product(i, j, {{i + j, Rational(1)}});
    a.set_max_weight(D);
    return a;
}

SparseVec CurvedAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
    SparseAccumulator acc;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) acc.add(table_[i][j], a * b);
    return acc.take();
}

SparseVec CurvedAlgebra::apply_nabla(const SparseVec& x) const {
    SparseAccumulator acc;
    for (const auto& [i, a] : x) acc.add(nabla_[i], a);
    return acc.take();
}

int dual_index(const CurvedCoalgebra& c, int n, int k) {
    int idx = 1;
    for (int m = 1; m < n; ++m) idx += c.dim(m);
    return n == 0 ? 0 : idx + k;
}

CurvedAlgebra dual_curved_algebra(const CurvedCoalgebra& c) {
    CurvedAlgebra a;
    const int W = c.max_weight();
    a.add_basis("1", 0, 0);
    for (int n = 1; n <= W; ++n)
        for (int k = 0; k < c.dim(n); ++k) a.add_basis("(" + c.label(n, k) + ")*", -c.degree(n, k), n);
    a.set_max_weight(W);
    // <ξ_a ξ_b, c> = (-1)^{|a||b|} <ξ_a ⊗ ξ_b, Δc>
    for (int i = 0; i <= W; ++i)
        for (int j = 0; i + j <= W; ++j) {
            const Matrix& cols = c.delta(i + j, i);  // rows: pairs k1 * dim(j) + k2
            for (int k1 = 0; k1 < c.dim(i); ++k1)
                for (int k2 = 0; k2 < c.dim(j); ++k2) {
                    int sign = sign_of(static_cast<long long>(c.degree(i, k1)) * c.degree(j, k2));
                    SparseVec prod;
                    const SparseVec& row = cols.row(k1 * c.dim(j) + k2);
                    for (const auto& [k, x] : row) prod.emplace_back(dual_index(c, i + j, k), sign * x);
                    a.set_product(dual_index(c, i, k1), dual_index(c, j, k2), std::move(prod));
                }
        }
    // ∇ξ = (-1)^{|ξ|} ξ∘d
    for (int n = 1; n < W; ++n) {
        const Matrix& d = c.d(n + 1);
        for (int k = 0; k < c.dim(n); ++k) {
            int sign = sign_of(c.degree(n, k));
            SparseVec v;
            for (const auto& [m, x] : d.row(k)) v.emplace_back(dual_index(c, n + 1, m), sign * x);
            a.set_nabla(dual_index(c, n, k), std::move(v));
        }
    }
    if (W >= 2) {
        SparseVec theta;
        for (int k = 0; k < c.dim(2); ++k)
            if (sgn(c.h()[k]) != 0) theta.emplace_back(dual_index(c, 2, k), -c.h()[k]);
        a.set_theta(theta);
    }
    return a;
}

AxiomReport verify_curved_algebra(const CurvedAlgebra& a) {
    AxiomReport rep;
    int n = a.dim();
    auto e = [](int i) { return SparseVec{{i, Rational(1)}}; };
    bool assoc = true, unit = true, leibniz = true, curv = true;
    std::string wa, wu, wl, wc;
    for (int i = 0; i < n; ++i) {
        if (a.mult(0, i) != e(i) || a.mult(i, 0) != e(i)) {
            if (unit) wu = a.label(i);
            unit = false;
        }
        for (int j = 0; j < n; ++j) {
            SparseVec ij = a.mult(i, j);
            // ∇(ab) = ∇a·b + (-1)^{|a|} a·∇b
            SparseVec lhs = a.apply_nabla(ij);
            SparseVec rhs = axpy(a.multiply(a.nabla(i), e(j)), sign_of(a.degree(i)),
                                 a.multiply(e(i), a.nabla(j)));
            if (lhs != rhs && leibniz) {
                leibniz = false;
                wl = a.label(i) + " , " + a.label(j);
            }
            for (int k = 0; k < n && assoc; ++k) {
                if (a.multiply(ij, e(k)) != a.multiply(e(i), a.mult(j, k))) {
                    assoc = false;
                    wa = a.label(i) + " , " + a.label(j) + " , " + a.label(k);
                }
            }
        }
        // ∇²x = Θx - xΘ (|Θ| = -2)
        SparseVec lhs = a.apply_nabla(a.nabla(i));
        SparseVec rhs = axpy(a.multiply(a.theta(), e(i)), -1, a.multiply(e(i), a.theta()));
        if (lhs != rhs && curv) {
            curv = false;
            wc = a.label(i);
        }
    }
    rep.checks.push_back({"associativity", assoc, assoc ? "dim " + std::to_string(n) : wa});
    rep.checks.push_back({"unit", unit, unit ? "1·a = a·1 = a" : wu});
    rep.checks.push_back({"leibniz", leibniz, leibniz ? "∇ is a derivation" : wl});
    rep.checks.push_back({"nabla-squared", curv, curv ? "∇² = [Θ,-]" : wc});
    bool nt = a.apply_nabla(a.theta()).empty();
    rep.checks.push_back({"nabla-theta", nt, nt ? "∇Θ = 0" : "∇Θ ≠ 0"});
    return rep;
}

}  // namespace koszul
