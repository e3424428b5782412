#pragma once

// Fixtures, random presentations and independent oracles. The oracles avoid the engine's
// normal forms and complexes; they only share the Rational type.

#include "koszul/document.hpp"

#include <string>
#include <vector>

namespace support {

using koszul::Rational;
using Dense = std::vector<std::vector<Rational>>;

koszul::PresentationDocument fixture(const std::string& name);
koszul::QlcPresentation fixture_presentation(const std::string& name);
koszul::QlcSplit fixture_split(const std::string& name);
const std::vector<std::string>& associative_fixtures();
const std::vector<std::string>& all_fixtures();

/// Textbook Gaussian elimination on a dense copy.
int naive_rank(Dense m);
/// Columns given as dense vectors.
int naive_rank_columns(const std::vector<std::vector<Rational>>& cols);

/// U_ω(g) presentations from a Lie algebra with a 2-cocycle after a random change of basis, and
/// monomial quadratic presentations. All are valid QLC presentations with dim V ≤ 3.
std::vector<koszul::QlcPresentation> random_valid_qlc(unsigned seed, int count);

/// xy - yx - [x,y] with [x,y] = z, [y,z] = 0, [z,x] = x, which violates the Jacobi identity.
koszul::QlcPresentation jacobi_violating();

/// First quadratic presentation (3 generators, coefficients in {-1,0,1}) in a seeded search whose
/// certificate fails by weight 4.
koszul::QlcPresentation find_non_koszul(unsigned seed);

/// (raw, stable) dims of H_k of the truncated complex A⊗Λ(V) computing HH of the Weyl algebra
/// yx = xy + 1; stable = rank of H(F≤N-2) → H(F≤N).
struct HomologyDims {
    std::vector<int> raw, stable;
};
HomologyDims weyl_hh_oracle(int N);
/// Chevalley–Eilenberg homology H_k(g, U(g)_ad) for [x,y] = y, truncated by filtration.
HomologyDims ce_ug_oracle(int N);

/// Reduced cyclic homology of k[x]/(x^{D+1}) through Connes' complex C^λ(Ā), words of weight ≤ N.
std::vector<int> connes_truncated_poly(int D, int N, int n_max);

long long necklaces(int n, int k);
/// Dimension of the weight n part of the free Lie superalgebra on k odd generators.
long long super_witt(int n, int k);

/// dim Sym^{≤N}(V) / (r · Sym^{≤N-2}) for polynomial relations given on monomial exponents.
struct Poly {
    std::vector<std::pair<std::vector<int>, Rational>> terms;  // exponent vector, coefficient
};
int sym_quotient_dim(int nvars, const std::vector<Poly>& relations, int N);

}  // namespace support
