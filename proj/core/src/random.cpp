#include "nlat/random.hpp"

#include <numeric>

namespace nlat {

std::vector<int> Rng::permutation(int d) {
  std::vector<int> out(static_cast<std::size_t>(d));
  std::iota(out.begin(), out.end(), 0);
  for (int i = d - 1; i > 0; --i) {
    std::swap(out[static_cast<std::size_t>(i)], out[static_cast<std::size_t>(uniform_int(0, i))]);
  }
  return out;
}

Subset Rng::subset_of(Subset mask, double p) {
  Subset out;
  for (int i : mask) {
    if (flip(p)) out = out.with(i);
  }
  return out;
}

GramMatrix random_gram_dense(int d, std::uint64_t seed, const Tolerances& tol) {
  Rng rng(seed);
  Eigen::MatrixXd a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = rng.uniform(-1.0, 1.0);
  }
  Eigen::MatrixXd m = a.transpose() * a + d * Eigen::MatrixXd::Identity(d, d);
  return validate_gram(m, tol);
}

SparsePrecisionGram random_gram_sparse_precision(int d, std::uint64_t seed, double sparsity,
                                                 const Tolerances& tol) {
  Rng rng(seed);
  Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(d, d);
  std::vector<std::pair<int, int>> pattern;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (rng.uniform() < sparsity) {
        double w = rng.uniform(0.3, 1.0) * (rng.flip() ? 1.0 : -1.0);
        gamma(i, j) = gamma(j, i) = w;
        pattern.emplace_back(i, j);
      }
    }
  }
  // Strict diagonal dominance keeps the precision matrix positive definite.
  for (int i = 0; i < d; ++i) {
    gamma(i, i) = 1.0 + gamma.row(i).cwiseAbs().sum();
  }
  Eigen::MatrixXd sigma = gamma.llt().solve(Eigen::MatrixXd::Identity(d, d));
  return SparsePrecisionGram{validate_gram(sigma, tol), std::move(pattern)};
}

Pcg random_graph(int d, std::uint64_t seed, double edge_prob) {
  Rng rng(seed);
  Pcg p(d);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (rng.uniform() < edge_prob) p.add_edge(i, j);
    }
  }
  return p;
}

}  // namespace nlat
