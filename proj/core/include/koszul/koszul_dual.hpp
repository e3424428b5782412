#pragma once

#include "koszul/presentation.hpp"

#include <string>
#include <vector>

namespace koszul {

class StabilityViolation : public Error {
public:
    StabilityViolation(int weight, SparseVec witness, const std::string& what)
        : Error(what), weight_(weight), witness_(std::move(witness)) {}
    int weight() const { return weight_; }
    const SparseVec& witness() const { return witness_; }

private:
    int weight_;
    SparseVec witness_;
};

/// s²: V⊗V -> sV⊗sV in word coordinates, ab ↦ (-1)^{|a|} sa sb. It is its own inverse.
SparseVec suspend2(const QlcSplit& s, const SparseVec& x);

/// ∩_{i+2+j=n} (sV)^i ⊗ s²qR ⊗ (sV)^j inside (sV)^{⊗n}, computed straight from the definition.
Subspace dual_component(const QlcSplit& s, int n);

/// Truncated Koszul dual curved coalgebra. Component n is a subspace of words of length n;
/// basis element (n, k) is the k-th RREF row of that subspace.
class CurvedCoalgebra {
public:
    CurvedCoalgebra() = default;
    /// Builds components n ≤ W recursively as (C^{n-1}⊗sV) ∩ (sV⊗C^{n-1}), then d, h and Δ.
    /// With check_stability = false an escaping d is recorded instead of thrown.
    CurvedCoalgebra(const QlcSplit& s, int W, bool check_stability = true);

    int max_weight() const { return W_; }
    int letters() const { return d_; }
    const QlcSplit& split() const { return split_; }
    int dim(int n) const { return comp_[n].dim(); }
    const Subspace& component(int n) const { return comp_[n]; }
    /// Degree of basis element k of weight n (suspended letters).
    int degree(int n, int k) const { return deg_[n][k]; }
    int letter_degree(int a) const { return sdeg_[a]; }
    std::string label(int n, int k) const;

    /// φ̃ extended to a coderivation, applied to any word combination of length n.
    SparseVec coderivation_on_words(int n, const SparseVec& x) const;
    /// d: C^n -> C^{n-1} in basis coordinates.
    const Matrix& d(int n) const { return dmat_[n]; }
    /// h on C^2 basis (zero elsewhere).
    const std::vector<Rational>& h() const { return h_; }
    /// Δ_{i,n-i}: C^n -> C^i ⊗ C^{n-i}, row index k1 * dim(n-i) + k2.
    const Matrix& delta(int n, int i) const { return delta_[n][i]; }
    /// Coordinates of a word combination lying in C^n; throws if it does not.
    SparseVec coordinates(int n, const SparseVec& words) const;

    /// φ̃ on sV⊗sV words (extension by zero off s²qR) and h likewise.
    const std::vector<SparseVec>& phi_tilde() const { return phi2_; }
    const std::vector<Rational>& h_words() const { return h2_; }

    /// First weight where d escaped, -1 if none; witness in word coordinates.
    int stability_failure() const { return unstable_weight_; }
    const SparseVec& stability_witness() const { return unstable_witness_; }

private:
    void build_delta();

    QlcSplit split_;
    int d_ = 0, W_ = 0;
    std::vector<int> sdeg_;
    std::vector<Subspace> comp_;
    std::vector<std::vector<int>> deg_;
    std::vector<std::vector<int>> pivot_row_;  // word -> basis row, per weight
    std::vector<SparseVec> phi2_;
    std::vector<Rational> h2_;
    std::vector<Matrix> dmat_;
    std::vector<Rational> h_;
    std::vector<std::vector<Matrix>> delta_;
    int unstable_weight_ = -1;
    SparseVec unstable_witness_;
};

struct CheckRecord {
    std::string id;
    bool pass = true;
    std::string detail;  // dims on pass, witness on failure
};

struct AxiomReport {
    std::vector<CheckRecord> checks;
    bool all_pass() const;
};

/// Coassociativity, both counits, coderivation, curvature, h∘d = 0, stability and the three
/// compatibility conditions on V⊗qR ∩ qR⊗V.
AxiomReport verify_axioms(const CurvedCoalgebra& c);

/// V⊗qR ∩ qR⊗V inside V⊗3 (unsuspended).
Subspace overlap_w3(const QlcSplit& s);

}  // namespace koszul
