#pragma once

#include "koszul/graded.hpp"

#include <optional>
#include <string>
#include <vector>

namespace koszul {

struct Generator {
    std::string symbol;
    int degree = 0;
};

/// c + ℓ + q in k ⊕ V ⊕ V⊗V. `quadratic` is indexed by a*d + b for the word ab.
struct Relation {
    Rational constant = 0;
    SparseVec linear;
    SparseVec quadratic;
};

class NormalizationError : public Error {
public:
    using Error::Error;
};

class MinimalityViolation : public Error {
public:
    MinimalityViolation(SparseVec witness, const std::string& what)
        : Error(what), witness_(std::move(witness)) {}
    const SparseVec& witness() const { return witness_; }

private:
    SparseVec witness_;
};

class WeakConsistencyViolation : public Error {
public:
    WeakConsistencyViolation(SparseVec witness, const std::string& what)
        : Error(what), witness_(std::move(witness)) {}
    const SparseVec& witness() const { return witness_; }

private:
    SparseVec witness_;
};

struct QlcPresentation {
    std::string name;
    std::vector<Generator> generators;
    std::vector<Relation> relations;

    int dim() const { return static_cast<int>(generators.size()); }
    int degree(int letter) const { return generators[letter].degree; }
    /// Relation as a vector in k ⊕ V ⊕ V⊗V: slot 0, then 1..d, then 1+d+(a*d+b).
    SparseVec relation_vector(int i) const;
    int ambient_dim() const { return 1 + dim() + dim() * dim(); }
    /// Joined symbols, e.g. "xy" or "x1·x2" when some symbol is longer than one character.
    std::string word_label(const std::vector<int>& word) const;
};

/// Throws NormalizationError for dependent or degree-inhomogeneous relations,
/// negative degrees or duplicate symbols.
void check_normalized(const QlcPresentation& p);

struct ValidationReport {
    bool minimality = false;        // R ∩ (k⊕V) = 0
    bool weak_consistency = false;  // (V⊗R ⊕ R⊗V) ∩ (k⊕V⊕V⊗V) ⊆ R
    SparseVec minimality_witness;   // in k⊕V⊕V⊗V coordinates
    SparseVec weak_witness;
    int relation_rank = 0;
    int overlap_dim = 0;  // dim of the intersection tested by the weak condition
};

ValidationReport validate(const QlcPresentation& p);
/// validate, then throw MinimalityViolation / WeakConsistencyViolation on failure.
void check_conditions(const QlcPresentation& p);

/// R as the graph x - φ(x) + θ(x) over qR.
struct QlcSplit {
    int d = 0;
    std::vector<int> letter_degree;
    std::vector<std::string> symbols;
    Subspace qR;                    // in V⊗V word coordinates, RREF
    std::vector<SparseVec> phi;     // φ(qR.basis()[k]) in V
    std::vector<Rational> theta;    // θ(qR.basis()[k])

    /// φ and θ extended by zero on the non-pivot coordinates of V⊗V.
    SparseVec phi_ext(const SparseVec& x) const;
    Rational theta_ext(const SparseVec& x) const;
    bool is_quadratic() const;
    /// Same qR with φ = θ = 0.
    QlcSplit quadratic_part() const;
    std::string word_label(const std::vector<int>& word) const;
};

/// Requires minimality; otherwise throws MinimalityViolation.
QlcSplit split(const QlcPresentation& p);
/// Relation vectors x - φ(x) + θ(x), one per qR basis vector, in k⊕V⊕V⊗V coordinates.
std::vector<SparseVec> reconstruct(const QlcSplit& s);

/// Σ V^i ⊗ qR ⊗ V^j inside V⊗n (word coordinates).
Subspace qa_relations(const QlcSplit& s, int n);
/// V⊗n modulo qa_relations, with the non-pivot words as basis.
BigradedSpace qa_component(const QlcSplit& s, int n);

/// Read-only interface shared by the filtered QLC algebra and truncated curved algebras.
/// Basis index unit() is 1_A.
class AlgebraView {
public:
    virtual ~AlgebraView() = default;
    virtual int dim() const = 0;
    virtual int degree(int i) const = 0;
    virtual int unit() const { return 0; }
    virtual SparseVec mult(int i, int j) const = 0;
    virtual SparseVec nabla(int) const { return {}; }
    virtual SparseVec theta() const { return {}; }
    virtual std::string label(int i) const = 0;
};

/// F≤N A = T≤N(V) / span{u r w : |u|+2+|w| ≤ N} with normal-word basis.
/// Words are ordered by (length, lex); the elimination treats larger words as leading,
/// so normal words are the non-leading ones and reductions never raise length.
class FilteredAlgebra : public AlgebraView {
public:
    FilteredAlgebra() = default;
    FilteredAlgebra(const QlcSplit& s, int N);

    int bound() const { return N_; }
    int dim() const override { return static_cast<int>(normal_.size()); }
    int letters() const { return d_; }
    const std::vector<int>& normal_word(int i) const { return words_[normal_[i]]; }
    int filtration(int i) const { return static_cast<int>(normal_word(i).size()); }
    int degree(int i) const override { return degree_[i]; }
    /// Normal-form coordinates of an arbitrary word of length ≤ N.
    const SparseVec& reduce_word(const std::vector<int>& word) const;
    SparseVec reduce(const SparseVec& word_combination) const;  // over global word ids
    /// Product of basis elements; throws if the filtrations add past N.
    SparseVec mult(int i, int j) const override;
    SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
    /// Element of a single letter.
    SparseVec letter(int a) const { return reduce_word({a}); }
    std::string label(int i) const override;
    int global_word(const std::vector<int>& w) const;
    /// dims of F≤n / F≤n-1 for n = 0..N.
    std::vector<int> graded_dims() const;
    int rank_of_ideal() const { return ideal_rank_; }

private:
    int d_ = 0, N_ = 0, ideal_rank_ = 0;
    std::vector<int> letter_degree_;
    std::vector<std::string> symbols_;
    std::vector<std::vector<int>> words_;  // global id -> word
    std::vector<long long> offset_;
    std::vector<int> normal_;        // normal index -> global id
    std::vector<int> degree_;        // normal index -> degree
    std::vector<SparseVec> reduced_;  // global id -> normal coordinates
};

}  // namespace koszul
