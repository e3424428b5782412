#pragma once

#include "koszul/algebra.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace koszul {

/// d² ≠ 0 on a construction that should be a complex. Always an implementation bug.
class SignConventionError : public Error {
public:
    SignConventionError(std::string witness, const std::string& what)
        : Error(what), witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

/// Flat form of a finite, weight-graded, coaugmented curved coalgebra. Element 0 is the
/// coaugmentation; the rest span C̄.
struct CoalgebraData {
    struct Term {
        int left, right;
        Rational coef;
    };
    std::vector<std::string> labels;
    std::vector<int> degree, weight;
    std::vector<std::vector<Term>> delta;  // full Δ, counit terms included
    std::vector<SparseVec> d;
    std::vector<Rational> h;
    int max_weight = 0;

    int dim() const { return static_cast<int>(labels.size()); }
    static CoalgebraData from(const CurvedCoalgebra& c);
    /// Flat index of coalgebra element (n, k); same numbering as dual_index.
    static int index(const CurvedCoalgebra& c, int n, int k) { return dual_index(c, n, k); }
};

/// Words in letters 0..L-1 with per-letter weight ≥ 1, total weight ≤ N and length ≤ max_length
/// (−1 for no length bound). The empty word is index 0.
class WordBasis {
public:
    WordBasis() = default;
    WordBasis(std::vector<int> letter_weight, int max_weight, int max_length = -1);

    int size() const { return static_cast<int>(words_.size()); }
    const std::vector<int>& word(int i) const { return words_[i]; }
    int weight(int i) const { return weight_[i]; }
    /// -1 if the word is not in the basis.
    int index(const std::vector<int>& w) const;

private:
    std::vector<std::vector<int>> words_;
    std::vector<int> weight_;
    std::map<std::vector<int>, int> index_;
};

/// F≤N of Ω(C) = T(C̄[-1]) with the three derivations as square matrices on the word basis.
/// Letter i is C̄ element i+1; its degree is |c| - 1.
struct CobarComplex {
    WordBasis words;
    std::vector<int> degree;
    Matrix d0, d1, d2;
    AxiomReport checks;
    std::vector<std::string> labels;

    Matrix total() const { return d0 + d1 + d2; }
};

/// Builds F≤N Ω(C). With verify set, throws SignConventionError if any identity fails.
CobarComplex cobar(const CoalgebraData& c, int N, int max_length = -1, bool verify = true);

/// B(A) = T^c(Ā[1]) modulo words of weight > N. Letter i is Ā element i+1, degree |a| + 1.
struct BarComplex {
    WordBasis words;
    std::vector<int> degree;
    Matrix d0, d1, d2;
    AxiomReport checks;
    std::vector<std::string> labels;

    Matrix total() const { return d0 + d1 + d2; }
};

/// Requires A augmented (products, ∇ and Θ have no unit component on Ā).
BarComplex bar(const CurvedAlgebra& a, int N, int max_length = -1, bool verify = true);

/// A homogeneous element of Hom(C, A): matrix dim A × dim C.
struct HomElement {
    int degree = 0;
    Matrix m;
};

HomElement convolve(const CoalgebraData& c, const AlgebraView& a, const HomElement& f,
                    const HomElement& g);
/// ∂f = ∇∘f - (-1)^{|f|} f∘d
HomElement partial(const CoalgebraData& c, const AlgebraView& a, const HomElement& f);
/// Θε - u∘h
HomElement curvature_element(const CoalgebraData& c, const AlgebraView& a);

/// ∂²f = [Θε - u∘h, f] on every elementary map and on `random_samples` seeded random
/// homogeneous maps of degrees −2..0, and ∂(Θε - u∘h) = 0.
AxiomReport convolution_check(const CoalgebraData& c, const AlgebraView& a, int random_samples = 20,
                              unsigned seed = 1);

/// κ: C → A, sx ↦ x on weight 1 and zero elsewhere. `a` must have N ≥ 2.
HomElement kappa(const CoalgebraData& c, const FilteredAlgebra& a);

struct McReport {
    AxiomReport checks;
    /// (κ∘d + κ∗κ)(c) and u∘h(c) for each weight-2 basis element c, in A coordinates.
    std::vector<std::pair<SparseVec, SparseVec>> weight2_values;
};

/// ∂κ + κ∗κ = -Θε + u∘h on every basis element of weight ≤ max_weight.
McReport verify_mc(const CoalgebraData& c, const FilteredAlgebra& a);

struct QuasiIsoReport {
    std::map<int, int> cobar_homology;  // by degree
    int algebra_dim = 0;
    int cycles = 0, boundaries = 0;
    int image_rank = 0;  // rank of g_κ on cycles
    AxiomReport checks;
};

/// g_κ: F≤N Ω((qA)¡) → F≤N A. Checks the chain-map property, that g_κ restricted to
/// generators returns κ, and that g_κ induces an isomorphism on homology.
QuasiIsoReport gkappa_quasi_iso(const QlcSplit& s, int N);

}  // namespace koszul
