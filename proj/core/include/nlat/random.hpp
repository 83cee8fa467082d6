#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nlat/gram.hpp"
#include "nlat/pcg.hpp"

namespace nlat {

/// splitmix64 stream. Hand-rolled so that seeded output is identical across
/// platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool flip(double p = 0.5) { return uniform() < p; }

  std::vector<int> permutation(int d);
  /// Random subset of `mask`, each member kept independently with probability p.
  Subset subset_of(Subset mask, double p = 0.5);

 private:
  std::uint64_t state_;
};

/// A^T A + d I for a d-by-d matrix A of uniform [-1, 1) entries. The inverse
/// is generically dense.
GramMatrix random_gram_dense(int d, std::uint64_t seed, const Tolerances& tol = {});

struct SparsePrecisionGram {
  GramMatrix gram;
  std::vector<std::pair<int, int>> pattern;  // off-diagonal support of the precision matrix
};

/// Inverts a random sparse symmetric diagonally-dominant precision matrix:
/// each off-diagonal pair enters with probability `sparsity` and weight of
/// magnitude in [0.3, 1] with random sign. The partial correlation graph of
/// the result is exactly `pattern`.
SparsePrecisionGram random_gram_sparse_precision(int d, std::uint64_t seed, double sparsity,
                                                 const Tolerances& tol = {});

/// Random undirected graph, each edge present independently with probability
/// edge_prob.
Pcg random_graph(int d, std::uint64_t seed, double edge_prob);

}  // namespace nlat
