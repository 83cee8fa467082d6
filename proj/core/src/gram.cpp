#include "nlat/gram.hpp"

#include <cmath>
#include <string>

namespace nlat {

namespace {

void check_index(int i, int d, const char* what) {
  if (i < 0 || i >= d) {
    throw error(errc::bad_index, std::string(what) + " " + std::to_string(i + 1) +
                                     " out of range 1.." + std::to_string(d));
  }
}

void check_within(Subset s, int d, const char* what) {
  if (!s.is_subset_of(Subset::full(d))) {
    throw error(errc::bad_index,
                std::string(what) + " contains indices beyond the dimension " + std::to_string(d));
  }
}

// Plain Cholesky with per-pivot inspection; Eigen's LLT reports failure but
// not which pivot broke.
void check_positive_definite(const Eigen::MatrixXd& m, double pivot_floor) {
  const int d = static_cast<int>(m.rows());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    double pivot = m(k, k) - l.row(k).head(k).squaredNorm();
    if (!(pivot > pivot_floor)) {
      throw error(errc::not_positive_definite,
                  "matrix is not positive definite (pivot " + std::to_string(k + 1) + " is " +
                      std::to_string(pivot) + ")");
    }
    l(k, k) = std::sqrt(pivot);
    for (int r = k + 1; r < d; ++r) {
      l(r, k) = (m(r, k) - l.row(r).head(k).dot(l.row(k).head(k))) / l(k, k);
    }
  }
}

}  // namespace

GramMatrix::GramMatrix(Eigen::MatrixXd entries, Tolerances tol)
    : entries_(std::move(entries)), tol_(tol) {
  max_diag_ = entries_.diagonal().cwiseAbs().maxCoeff();
  max_abs_ = entries_.cwiseAbs().maxCoeff();
}

GramMatrix validate_gram(const Eigen::MatrixXd& raw, const Tolerances& tol) {
  if (raw.rows() != raw.cols()) {
    throw error(errc::not_square, "matrix is " + std::to_string(raw.rows()) + "x" +
                                      std::to_string(raw.cols()) + ", expected square");
  }
  const int d = static_cast<int>(raw.rows());
  if (d < 1) throw error(errc::bad_input, "matrix is empty");
  if (d > kMaxDim) {
    throw error(errc::dimension_too_large,
                "dimension " + std::to_string(d) + " exceeds the limit of 64");
  }
  if (!raw.allFinite()) throw error(errc::bad_input, "matrix entries must be finite");

  const double max_diag = raw.diagonal().cwiseAbs().maxCoeff();
  double worst_gap = 0.0;
  int worst_i = 0, worst_j = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double gap = std::abs(raw(i, j) - raw(j, i));
      if (gap > worst_gap) {
        worst_gap = gap;
        worst_i = i;
        worst_j = j;
      }
    }
  }
  if (worst_gap > tol.symmetry * max_diag) {
    throw error(errc::asymmetric, "entries (" + std::to_string(worst_i + 1) + "," +
                                      std::to_string(worst_j + 1) + ") and transpose differ by " +
                                      std::to_string(worst_gap));
  }

  Eigen::MatrixXd sym = 0.5 * (raw + raw.transpose());
  check_positive_definite(sym, tol.pd * max_diag);
  return GramMatrix(std::move(sym), tol);
}

GramMatrix gram_star(int d, const Tolerances& tol) {
  if (d < 2 || d > kMaxDim) {
    throw error(errc::dimension_too_large,
                "star dimension must be in 2..64, got " + std::to_string(d));
  }
  // Sigma = 4 * [[1, u^T], [u, I/4 + u u^T]] with u = (1/2)1; entries below.
  Eigen::MatrixXd m(d, d);
  m.setOnes();
  m(0, 0) = 4.0;
  for (int k = 1; k < d; ++k) {
    m(0, k) = m(k, 0) = 2.0;
    m(k, k) = 2.0;
  }
  return validate_gram(m, tol);
}

GramMatrix gram_from_samples(const Eigen::MatrixXd& rows, const Tolerances& tol) {
  const int n = static_cast<int>(rows.rows());
  if (n < 1) throw error(errc::empty_sample, "no observations");
  Eigen::MatrixXd m = (rows.transpose() * rows) / static_cast<double>(n);
  return validate_gram(m, tol);
}

GramMatrix gram_from_inner_products(const std::vector<Eigen::MatrixXd>& per_sample,
                                    const Tolerances& tol) {
  if (per_sample.empty()) throw error(errc::empty_sample, "no observations");
  const auto d = per_sample.front().rows();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (const auto& obs : per_sample) {
    if (obs.rows() != d || obs.cols() != d) {
      throw error(errc::dimension_mismatch, "observations have inconsistent dimensions");
    }
    m += obs;
  }
  m /= static_cast<double>(per_sample.size());
  return validate_gram(m, tol);
}

GramMatrix rescale(const GramMatrix& g, const Eigen::VectorXd& diag) {
  const int d = g.dim();
  if (static_cast<int>(diag.size()) != d) {
    throw error(errc::dimension_mismatch, "scale vector has length " +
                                              std::to_string(diag.size()) + ", expected " +
                                              std::to_string(d));
  }
  for (int i = 0; i < d; ++i) {
    if (diag(i) == 0.0) {
      throw error(errc::zero_scale, "scale entry " + std::to_string(i + 1) + " is zero");
    }
  }
  Eigen::MatrixXd m = diag.asDiagonal() * g.entries() * diag.asDiagonal();
  return validate_gram(m, g.tol());
}

Eigen::MatrixXd slice(const Eigen::MatrixXd& m, Subset rows, Subset cols) {
  Eigen::MatrixXd out(rows.count(), cols.count());
  int r = 0;
  for (int i : rows) {
    int c = 0;
    for (int j : cols) out(r, c++) = m(i, j);
    ++r;
  }
  return out;
}

Eigen::VectorXd slice_col(const Eigen::MatrixXd& m, Subset rows, int col) {
  Eigen::VectorXd out(rows.count());
  int r = 0;
  for (int i : rows) out(r++) = m(i, col);
  return out;
}

SemCoefficients sem_coefficients(const GramMatrix& g, int j, Subset s) {
  const int d = g.dim();
  check_index(j, d, "node");
  check_within(s, d, "conditioning set");
  if (s.contains(j)) {
    throw error(errc::node_in_set,
                "node " + std::to_string(j + 1) + " is inside its own conditioning set");
  }

  SemCoefficients out;
  out.node = j;
  out.conditioning = s;
  out.values = Eigen::VectorXd::Zero(d);
  if (s.empty()) return out;

  Eigen::MatrixXd sigma_s = slice(g.entries(), s, s);
  Eigen::VectorXd rhs = slice_col(g.entries(), s, j);
  Eigen::VectorXd beta = sigma_s.llt().solve(rhs);

  const double zero = g.coef_zero_threshold();
  int r = 0;
  for (int k : s) {
    out.values(k) = beta(r);
    if (std::abs(beta(r)) > zero) out.support = out.support.with(k);
    ++r;
  }
  return out;
}

SchurTest po_schur(const GramMatrix& g, Subset a, Subset s, Subset b) {
  const int d = g.dim();
  check_within(a | s | b, d, "index sets");
  if (!a.disjoint_from(s) || !a.disjoint_from(b) || !s.disjoint_from(b)) {
    throw error(errc::sets_not_disjoint, "a, s, b must be pairwise disjoint");
  }
  if (a.empty() || b.empty()) {
    throw error(errc::empty_endpoint, "a and b must be nonempty");
  }

  Eigen::MatrixXd res = slice(g.entries(), b, a);
  if (!s.empty()) {
    Eigen::MatrixXd sigma_s = slice(g.entries(), s, s);
    Eigen::MatrixXd sa = slice(g.entries(), s, a);
    res -= slice(g.entries(), b, s) * sigma_s.llt().solve(sa);
  }
  SchurTest out;
  out.residual = res.cwiseAbs().maxCoeff();
  out.orthogonal = out.residual <= g.schur_zero_threshold();
  return out;
}

bool po_det(const GramMatrix& g, int i, Subset s, int j) {
  const int d = g.dim();
  check_index(i, d, "index");
  check_index(j, d, "index");
  check_within(s, d, "conditioning set");
  if (i == j || s.contains(i) || s.contains(j)) {
    throw error(errc::sets_not_disjoint, "i, j and the conditioning set must be disjoint");
  }

  Eigen::MatrixXd sub = slice(g.entries(), s.with(i), s.with(j));
  double scale = std::sqrt(g(i, i) * g(j, j));
  for (int k : s) scale *= g(k, k);
  return std::abs(sub.determinant()) <= g.tol().det * scale;
}

double po_pairwise_coef(const GramMatrix& g, int i, Subset s, int j) {
  const int d = g.dim();
  check_index(i, d, "index");
  check_index(j, d, "index");
  if (i == j || s.contains(i) || s.contains(j)) {
    throw error(errc::sets_not_disjoint, "i, j and the conditioning set must be disjoint");
  }
  return sem_coefficients(g, j, s.with(i)).values(i);
}

}  // namespace nlat
