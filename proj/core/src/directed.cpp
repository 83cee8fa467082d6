#include "nlat/directed.hpp"

#include <cmath>
#include <string>

namespace nlat {

namespace {

void check_permutation(std::span<const int> perm, int d) {
  if (static_cast<int>(perm.size()) != d) {
    throw error(errc::not_a_permutation, "ordering has length " + std::to_string(perm.size()) +
                                             ", expected " + std::to_string(d));
  }
  Subset seen;
  for (int v : perm) {
    if (v < 0 || v >= d || seen.contains(v)) {
      throw error(errc::not_a_permutation, "ordering is not a permutation of 1.." +
                                               std::to_string(d));
    }
    seen = seen.with(v);
  }
}

Eigen::MatrixXd permutation_matrix(std::span<const int> perm) {
  const int d = static_cast<int>(perm.size());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(d, d);
  for (int k = 0; k < d; ++k) p(k, perm[static_cast<std::size_t>(k)]) = 1.0;
  return p;
}

Eigen::MatrixXd inverse_of(const GramMatrix& g) {
  const int d = g.dim();
  return g.entries().llt().solve(Eigen::MatrixXd::Identity(d, d));
}

// Descendant sets of the DAG given by parent sets; throws on a cycle.
std::vector<Subset> descendant_sets(std::span<const Subset> parents, int d) {
  // Kahn's ordering to reject cycles.
  std::vector<int> unmet(static_cast<std::size_t>(d), 0);
  for (int j = 0; j < d; ++j) unmet[static_cast<std::size_t>(j)] = parents[static_cast<std::size_t>(j)].count();
  Subset ready;
  for (int j = 0; j < d; ++j) {
    if (unmet[static_cast<std::size_t>(j)] == 0) ready = ready.with(j);
  }
  std::vector<int> topo;
  while (!ready.empty()) {
    const int v = ready.min();
    ready = ready.without(v);
    topo.push_back(v);
    for (int j = 0; j < d; ++j) {
      if (parents[static_cast<std::size_t>(j)].contains(v) && --unmet[static_cast<std::size_t>(j)] == 0) {
        ready = ready.with(j);
      }
    }
  }
  if (static_cast<int>(topo.size()) != d) {
    throw error(errc::cyclic_graph, "parent sets contain a directed cycle");
  }

  // Reverse topological sweep: descendants(v) = children + their descendants.
  std::vector<Subset> desc(static_cast<std::size_t>(d));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const int v = *it;
    for (int j = 0; j < d; ++j) {
      if (parents[static_cast<std::size_t>(j)].contains(v)) {
        desc[static_cast<std::size_t>(v)] =
            desc[static_cast<std::size_t>(v)].with(j) | desc[static_cast<std::size_t>(j)];
      }
    }
  }
  return desc;
}

}  // namespace

SemFactorization recursive_projection(const GramMatrix& g, std::span<const int> perm) {
  const int d = g.dim();
  check_permutation(perm, d);

  SemFactorization f;
  f.b = Eigen::MatrixXd::Zero(d, d);
  f.diag = Eigen::VectorXd::Zero(d);
  f.perm.assign(perm.begin(), perm.end());
  f.parents.resize(static_cast<std::size_t>(d));

  Subset predecessors;
  for (int k = 0; k < d; ++k) {
    const int j = perm[static_cast<std::size_t>(k)];
    SemCoefficients coef = sem_coefficients(g, j, predecessors);
    f.b.col(j) = coef.values;
    f.parents[static_cast<std::size_t>(j)] = coef.support;
    f.diag(j) = g(j, j) - coef.values.dot(g.entries().col(j));
    predecessors = predecessors.with(j);
  }
  return f;
}

double verify_sem_identity(const GramMatrix& g, const SemFactorization& f) {
  const int d = g.dim();
  if (f.b.rows() != d || f.b.cols() != d || f.diag.size() != d) {
    throw error(errc::dimension_mismatch, "factorization does not match the matrix dimension");
  }
  Eigen::MatrixXd i_minus_b = Eigen::MatrixXd::Identity(d, d) - f.b;
  Eigen::MatrixXd reconstructed =
      i_minus_b * f.diag.cwiseInverse().asDiagonal() * i_minus_b.transpose();
  return (inverse_of(g) - reconstructed).cwiseAbs().maxCoeff();
}

double cholesky_correspondence(const GramMatrix& g, std::span<const int> perm) {
  const int d = g.dim();
  check_permutation(perm, d);
  SemFactorization f = recursive_projection(g, perm);

  Eigen::MatrixXd p = permutation_matrix(perm);
  Eigen::MatrixXd expected = p *
                             (Eigen::MatrixXd::Identity(d, d) - f.b) *
                             f.diag.cwiseSqrt().cwiseInverse().asDiagonal() * p.transpose();

  // Upper Cholesky M = U U^T via the flipped lower factorization.
  Eigen::MatrixXd m = p * inverse_of(g) * p.transpose();
  Eigen::MatrixXd flipped = m.reverse();
  Eigen::MatrixXd lower = Eigen::MatrixXd(flipped.llt().matrixL());
  Eigen::MatrixXd upper = lower.reverse();

  return (upper - expected).cwiseAbs().maxCoeff();
}

DirectedPcgCheck verify_directed_pcg(const GramMatrix& g, std::span<const Subset> parents) {
  const int d = g.dim();
  if (static_cast<int>(parents.size()) != d) {
    throw error(errc::dimension_mismatch, "expected one parent set per node");
  }
  for (int j = 0; j < d; ++j) {
    if (parents[static_cast<std::size_t>(j)].contains(j)) {
      throw error(errc::node_in_set, "node " + std::to_string(j + 1) + " is its own parent");
    }
    if (!parents[static_cast<std::size_t>(j)].is_subset_of(Subset::full(d))) {
      throw error(errc::bad_index, "parent set exceeds the dimension");
    }
  }
  std::vector<Subset> desc = descendant_sets(parents, d);

  DirectedPcgCheck out;
  out.local = true;
  for (int i = 0; i < d && out.local; ++i) {
    for (int j = 0; j < d; ++j) {
      if (j == i) continue;
      const Subset pi_j = parents[static_cast<std::size_t>(j)];
      const bool non_descendant = !desc[static_cast<std::size_t>(j)].contains(i);
      if (!non_descendant || pi_j.contains(i)) continue;
      if (!po_schur(g, Subset::of({i}), pi_j, Subset::of({j})).orthogonal) {
        out.local = false;
        out.violation = std::make_pair(i, j);
        break;
      }
    }
  }

  // Residual cross inner products straight from the Gram matrix.
  std::vector<Eigen::VectorXd> beta(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    beta[static_cast<std::size_t>(j)] =
        sem_coefficients(g, j, parents[static_cast<std::size_t>(j)]).values;
  }
  const double zero = g.schur_zero_threshold();
  out.pairwise = true;
  for (int i = 0; i < d && out.pairwise; ++i) {
    const Eigen::VectorXd& bi = beta[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j) {
      const Eigen::VectorXd& bj = beta[static_cast<std::size_t>(j)];
      const double cross = g(i, j) - g.entries().row(i).dot(bj) -
                           bi.dot(g.entries().col(j)) + bi.dot(g.entries() * bj);
      if (std::abs(cross) > zero) {
        out.pairwise = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace nlat
