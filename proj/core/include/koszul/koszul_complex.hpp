#pragma once

#include "koszul/cobar_bar.hpp"

#include <string>
#include <vector>

namespace koszul {

/// d_αʳ, d_αˡ and the untwisted differentials on C⊗A (index k*dim A + i) and A⊗C
/// (index i*dim C + k).
struct TwistedDifferentials {
    Matrix d_ca, d_r;  // on C⊗A
    Matrix d_ac, d_l;  // on A⊗C
    AxiomReport checks;
};

/// d_fʳ(c⊗a) = (-1)^{|f||c'|} c'⊗f(c'')a
Matrix twisted_right(const CoalgebraData& c, const CurvedAlgebra& a, const HomElement& f);
/// d_fˡ(a⊗c) = (-1)^{|f||a|} a f(c')⊗c''
Matrix twisted_left(const CoalgebraData& c, const CurvedAlgebra& a, const HomElement& f);

/// Builds both twisted differentials and checks
/// d d_αʳ + d_αʳ d = d_{∂α}ʳ, d_αʳ d_αʳ = d_{α∗α}ʳ, d d_αˡ + d_αˡ d = d_{∂α}ˡ, d_αˡ d_αˡ = -d_{α∗α}ˡ.
TwistedDifferentials twisted_differentials(const CoalgebraData& c, const CurvedAlgebra& a,
                                           const HomElement& alpha);

/// The canonical twisting morphism (qA)¡ → qA (sx ↦ x) into a graded truncated algebra whose
/// basis 1..d are the generators.
HomElement canonical_twist(const CoalgebraData& c, const CurvedAlgebra& qa);

/// F≤N of A⊗_κ(qA)¡⊗_κA. Basis triples (i, k, j) with filtration(i) + weight(k) + filtration(j) ≤ N;
/// homological position is the coalgebra weight.
struct BimoduleComplex {
    struct Triple {
        int a, c, b;
    };
    int N = 0;
    std::vector<Triple> basis;
    std::vector<int> position, total_weight;
    Matrix d_c, d_r, d_l;  // D = d_c + id⊗d_r - d_l⊗id
    AxiomReport checks;

    Matrix total() const { return d_c + d_r - d_l; }
    int index(int a, int c, int b) const;
    std::string label(int i) const;

    std::vector<std::string> a_labels, c_labels;
    std::vector<int> c_weight;
    int dim_a = 0, dim_c = 0;
    std::vector<int> lookup;  // (a * dim_c + c) * dim_a + b -> basis index or -1
};

/// Throws NotAComplex (with witness) if D² ≠ 0.
BimoduleComplex total_koszul_complex(const QlcSplit& s, int N);

/// Homology per homological position of a complex whose differential lowers `position` by one.
std::vector<int> homology_by_position(const std::vector<int>& position, const Matrix& d);

struct ResolutionReport {
    int N = 0;
    std::vector<int> homology;  // by position
    int algebra_dim = 0;
    int xi_rank = 0;  // rank of ξ on position 0
    AxiomReport checks;
};

/// Homology of F≤N A⊗_κ C⊗_κ A against F≤N A via ξ = μ∘(id⊗ε⊗id).
ResolutionReport resolution_check(const QlcSplit& s, int N);

struct CertificateEntry {
    int weight = 0;
    std::vector<int> homology;  // by position on the exact-weight slice
    int qa_dim = 0;
    bool pass = false;
};

struct KoszulCertificate {
    int max_weight = 0;
    std::vector<CertificateEntry> entries;
    bool pbw = false;  // dim F≤n A = Σ_{m≤n} dim qA⁽ᵐ⁾ for n ≤ W
    bool pass() const;
    /// First failing weight or -1.
    int failing_weight() const;
};

/// Weight slices of qA⊗_α(qA)¡⊗_α qA for w ≤ W: homology must be qA⁽ʷ⁾ in position 0 only.
KoszulCertificate koszulness_certificate(const QlcSplit& s, int W);

enum class HochschildMethod { koszul, bar };

struct HochschildDegree {
    int degree = 0;
    int stable_dim = 0;  // rank of H(F≤N-2) → H(F≤N)
    int raw_dim = 0;     // dim H(F≤N)
    int raw_dim_lower = 0;
};

struct HochschildResult {
    HochschildMethod method = HochschildMethod::koszul;
    int N = 0;
    std::vector<HochschildDegree> degrees;
};

/// Koszul method: C⊗F≤N A with the commutator-quotient differential.
/// Bar method: the normalized complex A⊗Ā^{⊗n} with filtration sum ≤ N and the classical b;
/// it needs generators of degree 0. Degrees 0..max_degree are reported.
HochschildResult hochschild(const QlcSplit& s, int N, HochschildMethod method, int max_degree = 2);

/// The koszul-method complex itself: basis pairs (k, j), position = weight(k).
struct HochschildComplex {
    std::vector<std::pair<int, int>> basis;
    std::vector<int> position, filtration;
    Matrix d;
};
HochschildComplex hochschild_koszul_complex(const QlcSplit& s, int N);
HochschildComplex hochschild_bar_complex(const QlcSplit& s, int N, int max_degree);

}  // namespace koszul
