#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "nlat/directed.hpp"
#include "nlat/lattice.hpp"
#include "nlat/random.hpp"
#include "test_support.hpp"

using namespace nlat;
using nlat::testing::matrix_of;

namespace {

std::vector<int> identity_perm(int d) {
  std::vector<int> out(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

}  // namespace

TEST_CASE("recursive projection on the star, identity ordering") {
  GramMatrix g = gram_star(4);
  SemFactorization f = recursive_projection(g, identity_perm(4));

  // hand solves: every leaf loads 1/2 on the hub, residuals 2 - 0.5*2 = 1
  CHECK(f.parents[0].empty());
  for (int j = 1; j < 4; ++j) {
    CHECK(f.parents[static_cast<std::size_t>(j)] == Subset::of({0}));
    CHECK(f.b(0, j) == doctest::Approx(0.5));
    CHECK(f.diag(j) == doctest::Approx(1.0));
  }
  CHECK(f.diag(0) == doctest::Approx(4.0));
}

TEST_CASE("identity matrix factorizes trivially under any ordering") {
  GramMatrix id = validate_gram(Eigen::MatrixXd::Identity(5, 5));
  Rng rng(3);
  for (int rep = 0; rep < 5; ++rep) {
    SemFactorization f = recursive_projection(id, rng.permutation(5));
    CHECK(f.b.cwiseAbs().maxCoeff() == 0.0);
    CHECK((f.diag - Eigen::VectorXd::Ones(5)).cwiseAbs().maxCoeff() == 0.0);
    for (const Subset& parents : f.parents) CHECK(parents.empty());
  }
}

TEST_CASE("two-variable factorization against the reversed ordering") {
  const double rho = 0.3;
  GramMatrix g = validate_gram(matrix_of({{1, rho}, {rho, 1}}));
  std::vector<int> perm = {1, 0};
  SemFactorization f = recursive_projection(g, perm);
  CHECK(f.b(1, 0) == doctest::Approx(rho));
  CHECK(f.diag(0) == doctest::Approx(1 - rho * rho));
  CHECK(f.diag(1) == doctest::Approx(1.0));
  CHECK(f.parents[0] == Subset::of({1}));
  CHECK(f.parents[1].empty());
}

TEST_CASE("rejects non-permutations") {
  GramMatrix g = gram_star(3);
  std::vector<int> bad = {0, 0, 1};
  CHECK_THROWS_AS(recursive_projection(g, bad), error);
  std::vector<int> short_perm = {0, 1};
  CHECK_THROWS_AS(recursive_projection(g, short_perm), error);
}

TEST_CASE("factorization reconstructs the inverse") {
  GramMatrix g = gram_star(4);
  SemFactorization f = recursive_projection(g, identity_perm(4));
  CHECK(verify_sem_identity(g, f) < 1e-12);
  // hand check of the (1,1) entry: 1/4 + 3 * (1/4) = gamma = 1
  Eigen::MatrixXd imb = Eigen::MatrixXd::Identity(4, 4) - f.b;
  double entry = 0.0;
  for (int k = 0; k < 4; ++k) entry += imb(0, k) * imb(0, k) / f.diag(k);
  CHECK(entry == doctest::Approx(1.0));

  GramMatrix id = validate_gram(Eigen::MatrixXd::Identity(4, 4));
  CHECK(verify_sem_identity(id, recursive_projection(id, identity_perm(4))) == 0.0);

  Rng rng(17);
  for (int rep = 0; rep < 10; ++rep) {
    GramMatrix h = nlat::testing::mixed_instance(6, rng.next() % 100);
    CHECK(verify_sem_identity(h, recursive_projection(h, rng.permutation(6))) < 1e-8);
  }
}

TEST_CASE("identity check rejects mismatched dimensions") {
  SemFactorization f = recursive_projection(gram_star(4), identity_perm(4));
  CHECK_THROWS_AS(verify_sem_identity(gram_star(5), f), error);
}

TEST_CASE("factorization matches the permuted upper Cholesky factor") {
  GramMatrix id = validate_gram(Eigen::MatrixXd::Identity(4, 4));
  CHECK(cholesky_correspondence(id, identity_perm(4)) == 0.0);
  CHECK(cholesky_correspondence(gram_star(4), identity_perm(4)) < 1e-12);

  Rng rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    GramMatrix g = nlat::testing::mixed_instance(5, rng.next() % 100);
    CHECK(cholesky_correspondence(g, rng.permutation(5)) < 1e-8);
  }
}

TEST_CASE("parent sets from the projection are valid directed factorizations") {
  GramMatrix g = gram_star(4);
  std::vector<Subset> star_parents = {Subset{}, Subset::of({0}), Subset::of({0}),
                                      Subset::of({0})};
  DirectedPcgCheck check = verify_directed_pcg(g, star_parents);
  CHECK(check.local);
  CHECK(check.pairwise);
  CHECK(check.agree());

  GramMatrix id = validate_gram(Eigen::MatrixXd::Identity(3, 3));
  std::vector<Subset> no_parents(3);
  check = verify_directed_pcg(id, no_parents);
  CHECK(check.local);
  CHECK(check.pairwise);
}

TEST_CASE("an empty structure on the star is rejected with the first violation") {
  GramMatrix g = gram_star(4);
  std::vector<Subset> no_parents(4);
  DirectedPcgCheck check = verify_directed_pcg(g, no_parents);
  CHECK_FALSE(check.local);
  CHECK_FALSE(check.pairwise);
  CHECK(check.agree());
  REQUIRE(check.violation.has_value());
  CHECK(check.violation->first == 0);
  CHECK(check.violation->second == 1);
}

TEST_CASE("cycles are rejected") {
  GramMatrix g = gram_star(3);
  std::vector<Subset> cyclic = {Subset::of({1}), Subset::of({2}), Subset::of({0})};
  CHECK_THROWS_AS(verify_directed_pcg(g, cyclic), error);
}

TEST_CASE("the two directed conditions agree, also on adversarial parent sets") {
  Rng rng(29);
  for (int rep = 0; rep < 120; ++rep) {
    const int d = rng.uniform_int(3, 6);
    GramMatrix g = nlat::testing::mixed_instance(d, rng.next() % 200);

    std::vector<Subset> parents(static_cast<std::size_t>(d));
    if (rng.flip()) {
      parents = recursive_projection(g, rng.permutation(d)).parents;
    } else {
      // random DAG over a random order: earlier variables may parent later ones
      std::vector<int> order = rng.permutation(d);
      for (int pos = 0; pos < d; ++pos) {
        Subset candidates;
        for (int prev = 0; prev < pos; ++prev) {
          candidates = candidates.with(order[static_cast<std::size_t>(prev)]);
        }
        parents[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] =
            rng.subset_of(candidates, 0.4);
      }
    }
    DirectedPcgCheck check = verify_directed_pcg(g, parents);
    CHECK(check.agree());
  }
}

TEST_CASE("the coefficient matrix is strictly upper triangular in ordering space") {
  Rng rng(53);
  for (int rep = 0; rep < 10; ++rep) {
    const int d = rng.uniform_int(3, 7);
    GramMatrix g = nlat::testing::mixed_instance(d, rng.next() % 50);
    std::vector<int> perm = rng.permutation(d);
    SemFactorization f = recursive_projection(g, perm);
    for (int k = 0; k < d; ++k) {
      for (int l = 0; l <= k; ++l) {
        CHECK(f.b(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(l)]) == 0.0);
      }
    }
  }
}

TEST_CASE("projection parents equal the lattice minimum of the predecessor set") {
  Rng rng(37);
  for (int rep = 0; rep < 15; ++rep) {
    const int d = rng.uniform_int(4, 7);
    GramMatrix g = nlat::testing::mixed_instance(d, rng.next() % 300);
    std::vector<int> perm = rng.permutation(d);
    SemFactorization f = recursive_projection(g, perm);
    Subset predecessors;
    for (int v : perm) {
      CHECK(f.parents[static_cast<std::size_t>(v)] ==
            compute_lattice(g, v, predecessors).lattice.min_set);
      predecessors = predecessors.with(v);
    }
    CHECK(f.diag.minCoeff() > 0.0);
  }
}

TEST_CASE("different orderings can give different structures, all of them valid") {
  GramMatrix g = random_gram_sparse_precision(5, 11, 0.4).gram;
  Rng rng(41);
  std::set<std::vector<std::pair<int, int>>> edge_sets;
  for (int rep = 0; rep < 12; ++rep) {
    SemFactorization f = recursive_projection(g, rng.permutation(5));
    CHECK(verify_sem_identity(g, f) < 1e-8);
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < 5; ++j) {
      for (int parent : f.parents[static_cast<std::size_t>(j)]) edges.emplace_back(parent, j);
    }
    std::sort(edges.begin(), edges.end());
    edge_sets.insert(edges);
  }
  CHECK(edge_sets.size() >= 2);
}
