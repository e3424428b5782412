#pragma once

#include "koszul/cobar_bar.hpp"
#include "koszul/koszul_complex.hpp"

#include <map>
#include <string>
#include <vector>

namespace koszul {

/// V in degree 0 with relations in k ⊕ V ⊕ Sym²(V). A quadratic entry at a*d + b stands for the
/// monomial x_a x_b; entries with a > b are folded onto b*d + a.
struct CommutativePresentation {
    std::string name;
    std::vector<Generator> generators;
    std::vector<Relation> relations;
    int dim() const { return static_cast<int>(generators.size()); }
};

/// Sym(V) = T(V)/([V,V]): each relation symmetrized (x_a x_b ↦ (x_a x_b + x_b x_a)/2) plus the
/// commutators x_a x_b - x_b x_a for a < b.
QlcPresentation associative_presentation(const CommutativePresentation& p);

/// Finite, weight-graded curved Lie coalgebra. `cobracket[i]` lists (left, right, coef) over
/// the basis; `d[i]` is a SparseVec over the basis; h is a functional.
struct CurvedLieCoalgebra {
    struct Term {
        int left, right;
        Rational coef;
    };
    std::vector<std::string> labels;
    std::vector<int> degree, weight;
    std::vector<std::vector<Term>> cobracket;
    std::vector<SparseVec> d;
    std::vector<Rational> h;

    int dim() const { return static_cast<int>(labels.size()); }
};

/// Antisymmetry, co-Jacobi, coderivation, d² = (h⊗id)∘]−[ and h∘d = 0.
AxiomReport verify_lie_axioms(const CurvedLieCoalgebra& g);

/// Same space as C̄ with ]c[ = Δ̄c − τΔ̄c.
CurvedLieCoalgebra lie_from_coalgebra(const CoalgebraData& c);

/// The Koszul dual Lie coalgebra realized inside the shuffle-indecomposable quotient
/// Q_n = (sV)^{⊗n} / Sh_n, as the image of the associative dual component (qA⁺)¡⁽ⁿ⁾.
struct LieDual {
    int max_weight = 0;
    std::vector<int> dims;  // index n = 1..W (index 0 unused)
    std::vector<int> quotient_dims;  // dim Q_n, same indexing
    CurvedLieCoalgebra coalgebra;
    /// Per basis element of `coalgebra`: a preimage in (qA⁺)¡ as a combination of sV-words.
    std::vector<SparseVec> lifts;
    /// Largest subspace of Q_n whose cobracket lands in lower components, starting from sV and
    /// s²qR; must equal the image of the associative dual.
    std::vector<int> universal_dims;
    AxiomReport checks;
};

/// `s` is the split of the associated associative presentation; W ≤ 4 is recommended.
LieDual lie_dual(const QlcSplit& s, int W);

/// Sym(G[−1]) modulo weight > N with d₀ (from h), d₁ (from d) and d₂ (from the cobracket).
struct LieCobar {
    int N = 0;
    std::vector<std::vector<int>> monomials;  // sorted letter lists; index 0 is 1
    std::vector<int> degree, weight;
    std::vector<std::string> labels;
    Matrix d0, d1, d2;
    AxiomReport checks;

    Matrix total() const { return d0 + d1 + d2; }
    int index(const std::vector<int>& m) const;
    std::map<std::vector<int>, int> lookup;
};

/// Throws NotAComplex if d² ≠ 0; the generator identities are recorded in `checks`.
LieCobar lie_cobar(const CurvedLieCoalgebra& g, int N);

struct CResolutionReport {
    int N = 0;
    std::map<int, int> homology;  // raw, by degree
    int algebra_dim = 0;
    int h1_stable = 0;  // rank of H₁(F≤N-2) → H₁(F≤N)
    /// (degree, weight) -> dim for degrees 0 and 1.
    std::map<std::pair<int, int>, int> weight_slice;
    AxiomReport checks;
};

/// g_κ: F≤N Ω_Lie((qA)¡) → F≤N A. The associative certificate on qA⁺ stands in for the
/// operadic Koszul condition and is recorded as such.
CResolutionReport c_resolution_check(const CommutativePresentation& p, int N);

struct UcReport {
    int n_max = 0;
    std::vector<int> assoc_dims, lie_dims, pbw_dims;  // index 0..n_max
    AxiomReport checks;
};

/// co-PBW dimension identity, the universal-property description of the Lie dual, and the
/// weight-3 conditions on φ̃, θ̃.
UcReport uc_comparison(const CommutativePresentation& p, int n_max);

}  // namespace koszul
