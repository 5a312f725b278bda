#ifndef SLP_APOLARITY_HPP
#define SLP_APOLARITY_HPP

#include <utility>
#include <vector>

#include "slp/linalg.hpp"
#include "slp/matrix.hpp"
#include "slp/poly.hpp"

namespace slp {

// Degree-k monomial operators in lexicographic order: plain k-subsets when
// squarefree_only, otherwise all multisets (non-square-free targets need
// repeated indices).
std::vector<DiffMonomial> operator_monomials(int nvars, int k, bool squarefree_only);

// The matrix of the map "operator -> operator applied to f" in degree k.
// Rows follow operator_monomials order; columns are the support monomials
// actually encountered, in descending lexicographic order.
struct Catalecticant {
  IntMatrix matrix;
  std::vector<DiffMonomial> row_ops;
  std::vector<Monomial> col_monos;
};
Catalecticant catalecticant_matrix(const SparsePoly& f, int k);

// Hilbert function h_0..h_d of Q / Ann(f), each value an exact
// catalecticant rank.
using HilbertFunction = std::vector<int>;
HilbertFunction hilbert_function(const SparsePoly& f);

// Greedy lex-first basis of A_k: walk the operator monomials in
// lexicographic order and keep those whose image grows the span.
struct GradedBasis {
  int degree = 0;
  std::vector<DiffMonomial> elements;
  std::vector<DiffMonomial> rejected;  // kept for reproducibility
};
GradedBasis select_basis(const SparsePoly& f, int k);

// Gram matrix of the duality pairing: entry (a,b) is the constant term of
// (alpha_a alpha_b) f, nonzero only when the degrees sum to deg f.
ExactMatrix pairing_matrix(const SparsePoly& f, const GradedBasis& bi, const GradedBasis& bj);

// Minimal generator counts of Ann(f) by degree, capped by `budget` on the
// operator-space dimensions (explicit error, never silent truncation).
enum class RankMode { kModular, kExact };
std::vector<std::pair<int, int>> minimal_generator_counts(const SparsePoly& f, int max_degree,
                                                          int budget = 20000,
                                                          RankMode mode = RankMode::kModular);

}  // namespace slp

#endif
