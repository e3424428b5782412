#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace koszul {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
/// Bit length of numerator times denominator; the pivot heuristic ranks by this.
std::size_t bit_size(const Rational& r);

/// Sorted (index, value) pairs with no stored zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec sparse_from_dense(const std::vector<Rational>& dense);
std::vector<Rational> dense_from_sparse(const SparseVec& v, int n);
/// a + c*b
SparseVec axpy(const SparseVec& a, const Rational& c, const SparseVec& b);
SparseVec scaled(const SparseVec& a, const Rational& c);
Rational entry(const SparseVec& v, int index);
Rational dot(const SparseVec& a, const SparseVec& b);

/// Accumulates coefficients in arbitrary order, then emits a clean SparseVec.
class SparseAccumulator {
public:
    void add(int index, const Rational& value);
    void add(const SparseVec& v, const Rational& scale = 1);
    SparseVec take();
    bool empty() const { return terms_.empty(); }

private:
    std::vector<std::pair<int, Rational>> terms_;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyIntersectionFamily : public Error {
public:
    EmptyIntersectionFamily() : Error("intersect: empty family of subspaces") {}
};

class NotAComplex : public Error {
public:
    NotAComplex(int position, SparseVec witness, const std::string& what)
        : Error(what), position_(position), witness_(std::move(witness)) {}
    int position() const { return position_; }
    const SparseVec& witness() const { return witness_; }

private:
    int position_;
    SparseVec witness_;
};

/// Row-major sparse matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);

    static Matrix identity(int n);
    static Matrix from_rows(int cols, std::vector<SparseVec> rows);
    static Matrix from_columns(int rows, const std::vector<SparseVec>& columns);
    static Matrix from_dense(const std::vector<std::vector<Rational>>& dense);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const;

    const SparseVec& row(int r) const { return data_[r]; }
    void set_row(int r, SparseVec v);
    Rational at(int r, int c) const;
    void set(int r, int c, const Rational& v);
    void add(int r, int c, const Rational& v);

    Matrix transpose() const;
    std::vector<SparseVec> columns() const;
    SparseVec column(int c) const;
    /// m * v for a column vector v.
    SparseVec apply(const SparseVec& v) const;
    bool is_zero() const;
    std::vector<std::vector<Rational>> to_dense() const;
    /// Selects rows and columns (in the given order).
    Matrix submatrix(const std::vector<int>& row_ids, const std::vector<int>& col_ids) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<SparseVec> data_;
};

struct RrefResult {
    Matrix matrix;
    std::vector<int> pivots;
};

/// Echelon rows produced by elimination; row i has its leading 1 at pivots[i].
struct Echelon {
    std::vector<SparseVec> rows;
    std::vector<int> pivots;
};

/// Core elimination. Dense storage is used below 64 columns, sparse otherwise;
/// both produce the same (unique) reduced form.
Echelon eliminate(std::vector<SparseVec> rows, int ncols, bool reduced);

RrefResult rref(const Matrix& m);
int rank(const Matrix& m);

/// Subspace of Q^n stored by its RREF basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient_dim) : ambient_(ambient_dim) {}

    static Subspace span(int ambient_dim, std::vector<SparseVec> vectors);
    static Subspace full(int ambient_dim);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<SparseVec>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// v minus its projection along the pivot coordinates; zero iff v is in the subspace.
    SparseVec residual(const SparseVec& v) const;
    bool contains(const SparseVec& v) const;
    /// Coordinates of v in the RREF basis (the values of v at the pivot columns).
    /// Only meaningful when contains(v).
    SparseVec coordinates(const SparseVec& v) const;
    bool contains(const Subspace& other) const;
    Matrix as_matrix() const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    int ambient_ = 0;
    std::vector<SparseVec> basis_;
    std::vector<int> pivots_;
    std::vector<int> pivot_row_;  // column -> row index or -1
};

Subspace kernel_basis(const Matrix& m);
Subspace row_space(const Matrix& m);
Subspace column_space(const Matrix& m);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const std::vector<Subspace>& subspaces);

struct Quotient {
    Subspace representatives;    ///< unit vectors on the non-pivot coordinates
    std::vector<int> rep_coords;  ///< the non-pivot coordinates, ascending
    Matrix projection;            ///< (ambient - dim sub) x ambient
};

Quotient quotient(int ambient_dim, const Subspace& sub);

struct HomologyGroup {
    int dim = 0;
    std::vector<SparseVec> representatives;
};

/// diffs[i] : spaces[i] -> spaces[i-1]; diffs[0] must have zero rows (or be empty).
std::vector<HomologyGroup> complex_homology(const std::vector<int>& spaces,
                                            const std::vector<Matrix>& diffs,
                                            bool with_representatives = true);

/// Throws NotAComplex if some diffs[i-1] * diffs[i] is nonzero.
void check_complex(const std::vector<int>& spaces, const std::vector<Matrix>& diffs);

/// Rank of the map H(sub) -> H(big) induced by inclusion, at one position.
/// `cycles_sub` spans the cycles of the smaller complex (already embedded in big coordinates),
/// `boundaries_big` spans the boundaries of the bigger complex.
int induced_rank(const Subspace& cycles_sub, const Subspace& boundaries_big);

}  // namespace koszul
