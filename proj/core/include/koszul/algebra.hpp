#pragma once

#include "koszul/koszul_dual.hpp"

#include <string>
#include <vector>

namespace koszul {

/// Finite, augmented, weight-graded curved algebra (A, ∇, Θ). Basis 0 is the unit and
/// every other basis element spans Ā. Products of weight above max_weight() are zero,
/// i.e. the truncation is the quotient by the ideal of large weight.
class CurvedAlgebra : public AlgebraView {
public:
    CurvedAlgebra() = default;

    static CurvedAlgebra trivial();
    /// Quotient of a graded (quadratic) algebra by its weight > N part.
    static CurvedAlgebra from_graded(const FilteredAlgebra& qa);
    /// k[x]/(x^{D+1}) with |x| = degree and weight 1 per x.
    static CurvedAlgebra truncated_polynomial(int D, int degree = 0);

    int dim() const override { return static_cast<int>(labels_.size()); }
    int degree(int i) const override { return degree_[i]; }
    int weight(int i) const { return weight_[i]; }
    int max_weight() const { return max_weight_; }
    SparseVec mult(int i, int j) const override { return table_[i][j]; }
    SparseVec nabla(int i) const override { return nabla_[i]; }
    SparseVec theta() const override { return theta_; }
    std::string label(int i) const override { return labels_[i]; }
    bool is_curved() const { return !theta_.empty(); }

    SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
    SparseVec apply_nabla(const SparseVec& x) const;

    int add_basis(std::string label, int degree, int weight);
    void set_product(int i, int j, SparseVec v) { table_[i][j] = std::move(v); }
    void set_nabla(int i, SparseVec v) { nabla_[i] = std::move(v); }
    void set_theta(SparseVec v) { theta_ = std::move(v); }
    void set_max_weight(int w) { max_weight_ = w; }

private:
    std::vector<std::string> labels_;
    std::vector<int> degree_, weight_;
    std::vector<std::vector<SparseVec>> table_;
    std::vector<SparseVec> nabla_;
    SparseVec theta_;
    int max_weight_ = 0;
};

/// Graded linear dual of a truncated curved coalgebra: products from Δ, ∇ from d, Θ = -h.
/// Basis element 1 + (offset of weight n) + k is dual to coalgebra element (n, k).
CurvedAlgebra dual_curved_algebra(const CurvedCoalgebra& c);
/// Index in dual_curved_algebra(c) of the dual of coalgebra basis element (n, k).
int dual_index(const CurvedCoalgebra& c, int n, int k);

/// Associativity, unit, Leibniz rule, ∇² = [Θ, -] and ∇Θ = 0.
AxiomReport verify_curved_algebra(const CurvedAlgebra& a);

}  // namespace koszul
