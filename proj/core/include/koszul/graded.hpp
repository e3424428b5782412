#pragma once

#include "koszul/linalg.hpp"

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace koszul {

inline int sign_of(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

/// Labeled basis with a (homological degree, weight) per label.
class BigradedSpace {
public:
    BigradedSpace() = default;

    void add(std::string label, int degree, int weight);
    int dim() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_[i]; }
    int degree(int i) const { return degrees_[i]; }
    int weight(int i) const { return weights_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// -1 if absent.
    int index_of(const std::string& label) const;

    friend bool operator==(const BigradedSpace& a, const BigradedSpace& b);

private:
    std::vector<std::string> labels_;
    std::vector<int> degrees_;
    std::vector<int> weights_;
    std::unordered_map<std::string, int> index_;
};

/// The ground field: one label "1" in bidegree (0, 0).
BigradedSpace ground_field();

struct GradedMap {
    BigradedSpace source;
    BigradedSpace target;
    int degree_shift = 0;
    int weight_shift = 0;
    Matrix matrix;  // target.dim() x source.dim()

    /// Every nonzero entry respects both shifts.
    bool is_homogeneous() const;
};

GradedMap identity_map(const BigradedSpace& x);
GradedMap zero_map(const BigradedSpace& source, const BigradedSpace& target, int degree_shift,
                   int weight_shift);
/// g after f.
GradedMap compose(const GradedMap& g, const GradedMap& f);

/// Basis is pairs in a-major order, labels "a⊗b".
BigradedSpace tensor(const BigradedSpace& a, const BigradedSpace& b);
/// (f⊗g)(x⊗y) = (-1)^{|g||x|} f(x)⊗g(y).
GradedMap tensor_map(const GradedMap& f, const GradedMap& g);

/// Degrees move by k; labels gain s(...) markers for k > 0 and d(...) markers for k < 0,
/// and an opposite marker is stripped instead of nested.
BigradedSpace shift(const BigradedSpace& x, int k);

/// Degrees negate, weights stay, labels gain a trailing '*'.
BigradedSpace graded_dual(const BigradedSpace& x);
/// f*: B* -> A*, with <f*ξ, v> = (-1)^{|f||ξ|} <ξ, f v>.
GradedMap dual_map(const GradedMap& f);

/// Homology of a degree -1 differential on a basis with integer degrees, keyed by degree.
/// Throws Error if d has an entry that does not lower degree by exactly one, and NotAComplex
/// if d² ≠ 0.
std::map<int, int> homology_by_degree(const std::vector<int>& degrees, const Matrix& d);

/// "a·name(i) - name(j) + …", or "0".
std::string render(const SparseVec& v, const std::function<std::string(int)>& name);

// Words over an alphabet of d letters, indexed base d with the first letter most significant.
long long ipow(long long base, int exp);
int word_index(const std::vector<int>& word, int d);
std::vector<int> word_at(int index, int length, int d);

}  // namespace koszul
