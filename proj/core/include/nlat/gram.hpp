#pragma once

#include <Eigen/Dense>
#include <vector>

#include "nlat/error.hpp"
#include "nlat/subset.hpp"

namespace nlat {

/// Subset is one machine word, so this is the hard cap on the dimension.
inline constexpr int kMaxDim = 64;

/// Validation and zero-detection thresholds. All are relative; `zero` in
/// particular treats a coefficient c as zero when |c| <= zero * (1 + max_abs)
/// so the three partial-orthogonality tests stay consistent with each other.
struct Tolerances {
  double symmetry = 1e-9;
  double pd = 1e-12;
  double zero = 1e-9;
  double det = 1e-9;
};

/// Symmetric positive-definite matrix of pairwise inner products, validated on
/// construction. Immutable; the tolerances used to build it travel with it and
/// govern every downstream operation.
class GramMatrix {
 public:
  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  double operator()(int i, int j) const { return entries_(i, j); }
  const Tolerances& tol() const { return tol_; }

  double max_diag() const { return max_diag_; }
  /// Threshold below which a regression coefficient counts as zero.
  double coef_zero_threshold() const { return tol_.zero * (1.0 + max_abs_); }
  /// Threshold below which a Schur-complement residual entry counts as zero.
  double schur_zero_threshold() const { return tol_.zero * max_diag_; }

  friend GramMatrix validate_gram(const Eigen::MatrixXd& raw, const Tolerances& tol);

 private:
  GramMatrix(Eigen::MatrixXd entries, Tolerances tol);

  Eigen::MatrixXd entries_;
  Tolerances tol_;
  double max_diag_ = 0.0;
  double max_abs_ = 0.0;
};

/// Checks squareness, symmetry (within tolerance; result is symmetrized),
/// strict positive definiteness (Cholesky pivots), and d <= 64.
GramMatrix validate_gram(const Eigen::MatrixXd& raw, const Tolerances& tol = {});

/// The star-graph Gram matrix: inverse is [[gamma, -u^T], [-u, I]] with
/// gamma = d/4 and u = (1/2, ..., 1/2). Its partial correlation graph is a
/// star with node 0 at the center.
GramMatrix gram_star(int d, const Tolerances& tol = {});

/// Sample Gram matrix of numeric data: entries (1/n) sum_k x_i^(k) x_j^(k)
/// for an n-by-d matrix of observation rows.
GramMatrix gram_from_samples(const Eigen::MatrixXd& rows, const Tolerances& tol = {});

/// Sample Gram matrix for general inner-product-valued observations: each
/// element holds the d-by-d matrix of pairwise inner products of one
/// observation; the result is their average.
GramMatrix gram_from_inner_products(const std::vector<Eigen::MatrixXd>& per_sample,
                                    const Tolerances& tol = {});

/// D * Sigma * D for a diagonal D with nonzero entries. Supports, lattices,
/// decompositions and the partial correlation graph are unchanged.
GramMatrix rescale(const GramMatrix& g, const Eigen::VectorXd& diag);

/// Least-squares coefficients of variable `node` regressed on `conditioning`.
struct SemCoefficients {
  int node = -1;
  Subset conditioning;
  Eigen::VectorXd values;  // length d, exactly zero off `conditioning`
  Subset support;          // entries above the zero threshold; the active set
};

/// Solves Sigma_S beta = Sigma_{S,j} by Cholesky (never explicit inversion).
SemCoefficients sem_coefficients(const GramMatrix& g, int j, Subset s);

struct SchurTest {
  bool orthogonal = false;
  double residual = 0.0;  // max-abs entry of the residual block
};

/// Partial orthogonality of a and b given s, tested on the Schur complement
/// Sigma_{b,a} - Sigma_{b,s} Sigma_s^{-1} Sigma_{s,a} (just Sigma_{b,a} when
/// s is empty).
SchurTest po_schur(const GramMatrix& g, Subset a, Subset s, Subset b);

/// Equivalent determinant test: |det Sigma_{s+i, s+j}| below a threshold
/// scaled by prod_{k in s} Sigma_kk * sqrt(Sigma_ii Sigma_jj).
bool po_det(const GramMatrix& g, int i, Subset s, int j);

/// The coefficient of x_i when regressing x_j on s + {i}; zero exactly when
/// i and j are partially orthogonal given s.
double po_pairwise_coef(const GramMatrix& g, int i, Subset s, int j);

/// Rows/columns of `m` restricted to index sets, in ascending index order.
Eigen::MatrixXd slice(const Eigen::MatrixXd& m, Subset rows, Subset cols);
Eigen::VectorXd slice_col(const Eigen::MatrixXd& m, Subset rows, int col);

}  // namespace nlat
