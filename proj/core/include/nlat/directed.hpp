#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nlat/gram.hpp"

namespace nlat {

/// Coefficient matrix, residual norms and parent sets of a recursive
/// structural factorization for one variable ordering.
struct SemFactorization {
  Eigen::MatrixXd b;            // column j holds the coefficients of node j
  Eigen::VectorXd diag;         // residual squared norms; positive on PD input
  std::vector<int> perm;        // perm[k] = variable processed at step k
  std::vector<Subset> parents;  // support of column j; subset of predecessors
};

/// Projects each variable onto those before it in the ordering. Column j of b
/// solves the regression on all predecessors; the parent set is its support.
SemFactorization recursive_projection(const GramMatrix& g, std::span<const int> perm);

/// Max-abs entry of Sigma^{-1} - (I - B) D^{-1} (I - B)^T.
double verify_sem_identity(const GramMatrix& g, const SemFactorization& f);

/// Factors P Sigma^{-1} P^T = U U^T with U upper triangular and positive
/// diagonal, and compares U against P (I - B) D^{-1/2} P^T from the recursive
/// projection. Returns the max-abs entrywise deviation.
double cholesky_correspondence(const GramMatrix& g, std::span<const int> perm);

struct DirectedPcgCheck {
  /// Residual of each node orthogonal to every non-descendant outside its
  /// parent set (the defining condition).
  bool local = false;
  /// Residuals pairwise orthogonal across all node pairs (the symmetric
  /// condition); provably agrees with `local`.
  bool pairwise = false;
  std::optional<std::pair<int, int>> violation;  // first (i, j) failing `local`
  bool agree() const { return local == pairwise; }
};

/// Checks whether the given parent sets form a valid directed factorization
/// of g, via both equivalent conditions. Throws cyclic_graph when the parent
/// sets do not define a DAG.
DirectedPcgCheck verify_directed_pcg(const GramMatrix& g, std::span<const Subset> parents);

}  // namespace nlat
