#pragma once

#include "koszul/cobar_bar.hpp"
#include "koszul/koszul_complex.hpp"

#include <map>
#include <string>
#include <vector>

namespace koszul {

/// Cyclic operators on all words of length n over letters of the given (shifted) degrees.
/// Words are indexed base d, first letter most significant.
struct CyclicOperators {
    int n = 0;
    Matrix T, N, one_minus_T;
    AxiomReport checks;  // Tⁿ = id, (1-T)N = N(1-T) = 0
};
CyclicOperators operators(int n, const std::vector<int>& letter_degrees);

/// Koszul-signed rotation t(w₁…wₙ) = ± (wₙ, w₁, …, wₙ₋₁) on a word basis; the empty word is
/// sent to zero.
Matrix rotation(const WordBasis& words, const std::vector<int>& letter_degrees);
/// 1 + t + … + t^{n-1} on each length-n block.
Matrix norm_operator(const WordBasis& words, const std::vector<int>& letter_degrees);

/// A⊗B(A) modulo weight > N with d₀ᴴ + d₁ᴴ + d₂ᴴ. Cells are (a₀, bar word index); cells with
/// a₀ ≠ 0 span the reduced subcomplex.
struct CurvedHochschild {
    int N = 0;
    WordBasis words;  // bar words, index 0 empty
    std::vector<std::pair<int, int>> basis;
    std::vector<int> degree, weight;
    std::vector<std::string> labels;
    Matrix d0, d1, d2;

    Matrix total() const { return d0 + d1 + d2; }
    /// -1 if the cell is above the weight bound.
    int index(int a0, int word) const;

    std::vector<int> lookup;  // a0 * words.size() + word
};

/// Throws NotAComplex if d² ≠ 0. `a` must be augmented.
CurvedHochschild curved_hochschild(const CurvedAlgebra& a, int N);

enum class CyclicKind { per, plus, minus, dual_per, dual_plus, dual_minus };
std::string to_string(CyclicKind k);
/// Accepts per, plus, minus, dual-per, dual-plus, dual-minus (underscores allowed too).
CyclicKind parse_cyclic_kind(const std::string& s);
bool is_dual(CyclicKind k);

/// A bicomplex flattened to its total complex inside a window of total degrees.
/// Cells are (column, word); word indices refer to a WordBasis shared by all columns.
struct TotalComplex {
    std::vector<int> column, word, degree;
    Matrix d;
    int t_min = 0, t_max = 0;  // materialized degrees; homology is exact strictly inside
    /// Cell of (column, word) or -1.
    int find(int column, int word) const;
    std::map<std::pair<int, int>, int> index;
};

/// The column data shared by all cyclic kinds: rB(A) and Ā[1]⊗B(A) both live on the nonempty
/// bar words of weight ≤ N; odd columns are rB with the bar differential, even columns are
/// Ā[1]⊗B with −d₀ᴴ−d₁ᴴ−d₂ᴴ. Horizontal maps: 1−T from odd columns, N from even ones.
struct CyclicColumns {
    int N = 0;
    WordBasis words;
    std::vector<int> letter_degree;  // |a| + 1
    std::vector<int> word_degree;
    Matrix bar_d, hoch_d, T, N_op, one_minus_T;
};
CyclicColumns cyclic_columns(const CurvedAlgebra& a, int N);

/// Homological kinds in raw bicomplex coordinates: per uses every column, plus columns ≥ 0,
/// minus columns ≤ 1. Dual kinds are the transpose with degrees negated.
TotalComplex cyclic_total(const CyclicColumns& cols, CyclicKind kind, int t_min, int t_max);

struct CyclicBounds {
    int max_weight = 4;
    int n_min = 0, n_max = 4;  // reported HC indices, inclusive
};

struct HcResult {
    CyclicKind kind = CyclicKind::plus;
    CyclicBounds bounds;
    std::vector<std::pair<int, int>> dims;  // (n, dim) in the reported indexing
    AxiomReport checks;
};

/// Homological kinds: HC_n = H_{n+1}(Tot). Dual kinds: HCⁿ = H_{-n-1}(Tot of the weightwise dual),
/// which is Tot^∏ because every (weight, degree) block is finite.
HcResult hc(CyclicKind kind, const CurvedAlgebra& a, const CyclicBounds& bounds);

/// The d₂,ᵢ and d₀,ᵢ families, d₁T = Td₁, the assembled identities, (1-T)N = N(1-T) = 0 and Tⁿ = id
/// for every arity n ≤ max_arity.
AxiomReport chain_map_checks(const CurvedAlgebra& a, int max_arity);

/// X⁺(R) for R = F≤N Ω((qA)¡): even columns R̄ = R/k, odd columns Ω¹R♮ ≅ V⊗R.
struct XPlusComplex {
    int N = 0;
    CoalgebraData coalgebra;
    WordBasis words;                 // cobar words, index 0 empty
    std::vector<int> letter_degree;  // |c| - 1
    std::vector<int> word_degree;
    Matrix d_R, d_VR, beta, dbar;  // on nonempty words (index 0 row/column unused)
    AxiomReport checks;
};
XPlusComplex x_plus(const QlcSplit& s, int N);
TotalComplex x_plus_total(const XPlusComplex& x, int t_min, int t_max);

/// H_n(R♮) with R♮ = R̄ / [R, R], n in [n_min, n_max].
std::vector<std::pair<int, int>> r_natural_homology(const XPlusComplex& x, int n_min, int n_max);

struct FtRow {
    int n = 0;
    int hc_r_natural = 0;  // H_n(R♮)
    int hc_x_plus = 0;     // H_n(Tot X⁺)
    int hc_dual_minus = 0; // HC̄₋^{-n}((qA)!)
    int hc_dual_plus = 0;  // HC̄^{-1-n}((qA)!) (direct sum total, equal to the product here)
    int hc_dual_per = 0;   // HC̄_per^{-1-n}((qA)!)
};

struct FtReport {
    int N = 0, n_max = 0;
    std::vector<FtRow> rows;
    bool per_vanishes = false;
    AxiomReport checks;
};

/// Feigin–Tsygan comparison at weight truncation N for n = 0..n_max.
FtReport ft_compare(const QlcSplit& s, int N, int n_max);

/// Exactness of the long exact sequence of a short exact sequence of total complexes, given as
/// the middle complex with a subcomplex marked by `in_sub`. Checks at each degree strictly inside
/// the window: dim H(Y) = rank H(ι) + rank H(π) and dim H(X)_{t-1} - rank H(ι)_{t-1} =
/// dim H(Z)_t - rank H(π)_t.
AxiomReport les_check(const TotalComplex& y, const std::vector<bool>& in_sub, const std::string& tag);

}  // namespace koszul
